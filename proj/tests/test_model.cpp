#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <randerslab/model.hpp>

using namespace randerslab;

namespace {

// Deterministic sample cloud: x inside the disk, y on a surrounding annulus.
struct SampleGen {
    std::mt19937 rng{12345};
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    V2 point(double rmax = 0.8) {
        while (true) {
            V2 x{unit(rng) * rmax, unit(rng) * rmax};
            if (x[0] * x[0] + x[1] * x[1] < rmax * rmax) return x;
        }
    }
    V2 vector() {
        double th = M_PI * unit(rng);
        double r = 0.3 + 1.7 * std::abs(unit(rng));
        return {r * std::cos(th), r * std::sin(th)};
    }
};

}  // namespace

TEST_CASE("finsler closed-form spot values") {
    auto m = shen_randers(0.5, +1);
    CHECK(finsler(m, {0, 0}, {1, 0}) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(finsler(m, {0, 0}, {0, 1}) == doctest::Approx(1.0).epsilon(1e-14));

    // Frozen from a 100-digit independent evaluation of the defining formula.
    auto m2 = shen_randers(0.3, -1);
    CHECK(finsler(m2, {0.2, 0.1}, {0.4, -0.7}) ==
          doctest::Approx(0.70350330354128343808).epsilon(1e-15));
}

TEST_CASE("finsler positivity and 1-homogeneity") {
    SampleGen gen;
    for (auto m : {shen_randers(0.5, +1), shen_randers(0.7, -1), klein_riemannian(),
                   flat_minkowski(0.4)}) {
        for (int i = 0; i < 100; ++i) {
            V2 x = disk_based(m) ? gen.point() : V2{3.0, -2.0};
            V2 y = gen.vector();
            double f = finsler(m, x, y);
            CHECK(f > 0.0);
            for (double lam : {0.5, 2.0, 7.0}) {
                V2 ly{lam * y[0], lam * y[1]};
                CHECK(finsler(m, x, ly) == doctest::Approx(lam * f).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("domain guards") {
    auto m = shen_randers(0.5, +1);
    CHECK_THROWS_AS(finsler(m, {0.999999999, 0}, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(finsler(m, {0, 0}, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(shen_randers(1.0, +1), std::domain_error);
    CHECK_THROWS_AS(shen_randers(0.5, 2), std::domain_error);
    CHECK_THROWS_AS(flat_minkowski(-1.3), std::domain_error);
    CHECK_NOTHROW(finsler(flat_minkowski(0.2), {5.0, 5.0}, {1, 0}));
}

TEST_CASE("fundamental tensor: identity at Klein origin, Euler identity everywhere") {
    M2 g = fundamental_tensor(klein_riemannian(), {0, 0}, {0.3, 0.4});
    CHECK(g[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g[1][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(g[0][1]) < 1e-12);

    SampleGen gen;
    for (auto m : {shen_randers(0.5, +1), shen_randers(0.3, -1), klein_riemannian(),
                   flat_minkowski(0.4)}) {
        for (int i = 0; i < 100; ++i) {
            V2 x = disk_based(m) ? gen.point() : V2{1.5, 0.2};
            V2 y = gen.vector();
            M2 gg = fundamental_tensor(m, x, y);
            double f = finsler(m, x, y);
            double quad = gg[0][0] * y[0] * y[0] + 2 * gg[0][1] * y[0] * y[1] +
                          gg[1][1] * y[1] * y[1];
            CHECK(quad == doctest::Approx(f * f).epsilon(1e-10));
            CHECK(gg[0][0] > 0.0);
            CHECK(gg[0][0] * gg[1][1] - gg[0][1] * gg[1][0] > 0.0);
        }
    }
}

TEST_CASE("fundamental tensor: frozen spot value and finite-difference Hessian") {
    auto m = shen_randers(0.5, +1);

    // Frozen from a 100-digit finite-difference oracle.
    M2 g = fundamental_tensor(m, {0.1, 0.2}, {1, 0});
    CHECK(g[0][0] == doctest::Approx(2.60118105055517427).epsilon(1e-13));
    CHECK(g[0][1] == doctest::Approx(0.374194790995635391).epsilon(1e-13));
    CHECK(g[1][0] == g[0][1]);
    CHECK(g[1][1] == doctest::Approx(1.76849173993066304).epsilon(1e-13));

    // In-process central differences of F^2/2 as a second, coarser route.
    auto E = [&](double y1, double y2) {
        double f = finsler(m, {0.1, 0.2}, {y1, y2});
        return f * f / 2.0;
    };
    double h = 1e-5;
    double g00 = (E(1 + h, 0) - 2 * E(1, 0) + E(1 - h, 0)) / (h * h);
    double g01 = (E(1 + h, h) - E(1 + h, -h) - E(1 - h, h) + E(1 - h, -h)) / (4 * h * h);
    double g11 = (E(1, h) - 2 * E(1, 0) + E(1, -h)) / (h * h);
    // Central second differences bottom out near 4*eps*E/h^2 ~ 1e-5.
    CHECK(g[0][0] == doctest::Approx(g00).epsilon(1e-5));
    CHECK(g[0][1] == doctest::Approx(g01).epsilon(1e-5));
    CHECK(g[1][1] == doctest::Approx(g11).epsilon(1e-5));
}

TEST_CASE("projective factor: origin closed form, frozen value, dual-route agreement") {
    auto m = shen_randers(0.5, +1);
    CHECK(projective_factor(m, {0, 0}, {1, 0}) == doctest::Approx(0.25).epsilon(1e-14));
    // P(0, y) = (eps*|y| - a1*y1)/2
    CHECK(projective_factor(m, {0, 0}, {0.6, 0.8}) ==
          doctest::Approx(0.5 * (1.0 - 0.5 * 0.6)).epsilon(1e-14));

    // Frozen from the 100-digit oracle.
    CHECK(projective_factor(m, {0.1, 0.2}, {0.7, -0.3}) ==
          doctest::Approx(0.22931285865896415769).epsilon(1e-14));

    SampleGen gen;
    for (auto mv : {shen_randers(0.5, +1), shen_randers(0.3, -1), klein_riemannian()}) {
        for (int i = 0; i < 50; ++i) {
            V2 x = gen.point();
            V2 y = gen.vector();
            double p8 = projective_factor(mv, x, y);
            double p6 = projective_factor_generic(mv, x, y);
            CHECK(p8 == doctest::Approx(p6).epsilon(1e-8));
            for (double lam : {0.5, 2.0, 7.0})
                CHECK(projective_factor(mv, x, {lam * y[0], lam * y[1]}) ==
                      doctest::Approx(lam * p8).epsilon(1e-9));
        }
    }
    CHECK(projective_factor(flat_minkowski(0.4), {0.3, 9.0}, {1, 2}) == 0.0);
}

TEST_CASE("spray: flat vanishes, projective and generic routes agree") {
    auto flat = flat_minkowski(0.5);
    SprayData sd = spray(flat, {2.0, -1.0}, {0.4, 1.1});
    for (int i = 0; i < 2; ++i) {
        CHECK(sd.G[i] == 0.0);
        for (int j = 0; j < 2; ++j) {
            CHECK(sd.Gj[i][j] == 0.0);
            for (int k = 0; k < 2; ++k) CHECK(sd.Gjk[i][j][k] == 0.0);
        }
    }

    // Frozen generic-route value (100-digit oracle), equal to P*y.
    auto m = shen_randers(0.5, +1);
    V2 Gg = spray_generic(m, {0.1, 0.2}, {0.7, -0.3});
    CHECK(Gg[0] == doctest::Approx(0.16051900106127491).epsilon(1e-10));
    CHECK(Gg[1] == doctest::Approx(-0.0687938575976892473).epsilon(1e-10));

    for (auto mv : {shen_randers(0.4, +1), shen_randers(0.6, -1), klein_riemannian()}) {
        for (int ix = 0; ix < 10; ++ix)
            for (int iy = 0; iy < 10; ++iy) {
                V2 x{-0.72 + 0.16 * ix, -0.72 + 0.16 * iy};
                if (x[0] * x[0] + x[1] * x[1] >= 0.85 * 0.85) continue;
                for (int id = 0; id < 8; ++id) {
                    double th = 2 * M_PI * id / 8 + 0.1;
                    V2 y{std::cos(th), std::sin(th)};
                    SprayData s = spray(mv, x, y);
                    V2 gg = spray_generic(mv, x, y);
                    double scale = std::max({1.0, std::abs(s.G[0]), std::abs(s.G[1])});
                    CHECK(std::abs(s.G[0] - gg[0]) / scale < 1e-7);
                    CHECK(std::abs(s.G[1] - gg[1]) / scale < 1e-7);
                }
            }
    }
}

TEST_CASE("spray: homogeneity, trace identity, lower-index symmetry") {
    SampleGen gen;
    for (auto m : {shen_randers(0.5, +1), shen_randers(0.3, -1), klein_riemannian()}) {
        for (int i = 0; i < 100; ++i) {
            V2 x = gen.point();
            V2 y = gen.vector();
            SprayData s = spray(m, x, y);

            CHECK(s.Gj[0][0] * y[0] + s.Gj[0][1] * y[1] ==
                  doctest::Approx(2 * s.G[0]).epsilon(1e-10));
            CHECK(s.Gj[1][0] * y[0] + s.Gj[1][1] * y[1] ==
                  doctest::Approx(2 * s.G[1]).epsilon(1e-10));

            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        CHECK(std::abs(s.Gjk[a][b][c] - s.Gjk[a][c][b]) < 1e-12);

            for (double lam : {0.5, 2.0, 7.0}) {
                SprayData sl = spray(m, x, {lam * y[0], lam * y[1]});
                for (int a = 0; a < 2; ++a) {
                    CHECK(sl.G[a] == doctest::Approx(lam * lam * s.G[a]).epsilon(1e-9));
                    for (int b = 0; b < 2; ++b) {
                        CHECK(sl.Gj[a][b] == doctest::Approx(lam * s.Gj[a][b]).epsilon(1e-9));
                        for (int c = 0; c < 2; ++c)
                            CHECK(sl.Gjk[a][b][c] ==
                                  doctest::Approx(s.Gjk[a][b][c]).epsilon(1e-9));
                    }
                }
            }
        }
    }
}
