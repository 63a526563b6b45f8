#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <randerslab/curvature.hpp>

using namespace randerslab;

namespace {

struct SampleGen {
    std::mt19937 rng{777};
    std::uniform_real_distribution<double> unit{-1.0, 1.0};
    V2 point(double rmax = 0.75) {
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

// Brioschi formula for the Gauss curvature of a Riemannian 2-metric, from
// finite differences of the metric coefficients. Entirely independent of the
// spray/curvature-tensor pipeline; used to pin the Klein value.
double brioschi_gauss_curvature(const ModelVariant& m, const V2& x) {
    auto coef = [&](double x1, double x2, int i, int j) {
        // Riemannian g does not depend on y; evaluate at a fixed direction.
        return fundamental_tensor_eval<double>(m, {x1, x2}, {0.6, 0.8})[i][j];
    };
    double h = 1e-4;
    auto E = [&](double u, double v) { return coef(u, v, 0, 0); };
    auto Ff = [&](double u, double v) { return coef(u, v, 0, 1); };
    auto G = [&](double u, double v) { return coef(u, v, 1, 1); };
    double u = x[0], v = x[1];

    auto d1 = [&](auto f, int wrt) {
        return wrt == 0 ? (f(u + h, v) - f(u - h, v)) / (2 * h)
                        : (f(u, v + h) - f(u, v - h)) / (2 * h);
    };
    auto d2 = [&](auto f, int w1, int w2) {
        if (w1 == w2)
            return w1 == 0 ? (f(u + h, v) - 2 * f(u, v) + f(u - h, v)) / (h * h)
                           : (f(u, v + h) - 2 * f(u, v) + f(u, v - h)) / (h * h);
        return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) /
               (4 * h * h);
    };

    double Ev = d1(E, 1), Eu = d1(E, 0), Gv = d1(G, 1), Gu = d1(G, 0);
    double Fu = d1(Ff, 0), Fv = d1(Ff, 1);
    double Evv = d2(E, 1, 1), Guu = d2(G, 0, 0), Fuv = d2(Ff, 0, 1);
    double EE = E(u, v), FF = Ff(u, v), GG = G(u, v);

    double M1[3][3] = {{-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev},
                       {Fv - 0.5 * Gu, EE, FF},
                       {0.5 * Gv, FF, GG}};
    double M2[3][3] = {{0.0, 0.5 * Ev, 0.5 * Gu}, {0.5 * Ev, EE, FF}, {0.5 * Gu, FF, GG}};
    auto det3 = [](double a[3][3]) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    double denom = EE * GG - FF * FF;
    return (det3(M1) - det3(M2)) / (denom * denom);
}

}  // namespace

TEST_CASE("flat model has zero curvature tensor") {
    CurvatureData cd = curvature_tensor(flat_minkowski(0.5), {1.0, -2.0}, {0.3, 0.9});
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(cd.Rij[i][j] == 0.0);
            for (int k = 0; k < 2; ++k) CHECK(cd.Rijk[i][j][k] == 0.0);
        }
    }
    CHECK(flag_curvature(flat_minkowski(0.5), {1.0, -2.0}, {0.3, 0.9}, {1.0, 0.0}) == 0.0);
}

TEST_CASE("curvature tensor: antisymmetry to roundoff, flagpole annihilated") {
    SampleGen gen;
    for (auto m : {shen_randers(0.5, +1), shen_randers(0.3, -1), klein_riemannian()}) {
        for (int i = 0; i < 50; ++i) {
            V2 x = gen.point();
            V2 y = gen.vector();
            CurvatureData cd = curvature_tensor(m, x, y);
            // The (j,k) and (k,j) slots come from separate derivative sweeps,
            // so they cancel only to roundoff, not bitwise.
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        CHECK(std::abs(cd.Rijk[a][b][c] + cd.Rijk[a][c][b]) <
                              1e-12 * (1.0 + std::abs(cd.Rijk[a][b][c])));
            // R^i_j y^j = 0
            for (int a = 0; a < 2; ++a)
                CHECK(std::abs(cd.Rij[a][0] * y[0] + cd.Rij[a][1] * y[1]) < 1e-8);
        }
    }
}

TEST_CASE("ricci and the constant-curvature shape, lambda = -1/4") {
    SampleGen gen;
    for (int eps : {+1, -1}) {
        auto m = shen_randers(0.5, eps);
        for (int i = 0; i < 50; ++i) {
            V2 x = gen.point();
            V2 y = gen.vector();
            CurvatureData cd = curvature_tensor(m, x, y);
            double F = finsler(m, x, y);
            CHECK(cd.ric == doctest::Approx(-0.25 * F * F).epsilon(1e-6));

            // R^i_jk = lambda (delta^i_k g_jm y^m - delta^i_j g_km y^m)
            M2 g = fundamental_tensor(m, x, y);
            V2 yl{g[0][0] * y[0] + g[0][1] * y[1], g[1][0] * y[0] + g[1][1] * y[1]};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c) {
                        double expect = -0.25 * ((a == c ? yl[b] : 0.0) - (a == b ? yl[c] : 0.0));
                        CHECK(cd.Rijk[a][b][c] == doctest::Approx(expect).epsilon(1e-6));
                    }
        }
    }
}

TEST_CASE("flag curvature: constant -1/4 for the Randers family") {
    SampleGen gen;
    for (int eps : {+1, -1}) {
        for (double a1 : {0.1, 0.5, 0.9}) {
            auto m = shen_randers(a1, eps);
            double lo = 1e300, hi = -1e300;
            for (int i = 0; i < 200; ++i) {
                V2 x = gen.point(a1 > 0.8 ? 0.6 : 0.75);
                V2 y = gen.vector();
                V2 u = gen.vector();
                double cy = y[0] * u[1] - y[1] * u[0];
                if (std::abs(cy) < 0.05) continue;
                double K = flag_curvature(m, x, y, u);
                lo = std::min(lo, K);
                hi = std::max(hi, K);
            }
            CHECK(lo == doctest::Approx(-0.25).epsilon(1e-6));
            CHECK(hi == doctest::Approx(-0.25).epsilon(1e-6));
        }
    }
}

TEST_CASE("flag curvature: Klein model equals the Brioschi Gauss curvature (-1)") {
    auto m = klein_riemannian();
    SampleGen gen;
    for (int i = 0; i < 20; ++i) {
        V2 x = gen.point(0.6);
        V2 y = gen.vector();
        V2 u{-y[1] + 0.3, y[0] + 0.1};
        double K = flag_curvature(m, x, y, u);
        CHECK(K == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(K == doctest::Approx(brioschi_gauss_curvature(m, x)).epsilon(1e-5));
    }
}

TEST_CASE("flag curvature: flag-edge independence and degenerate-flag guard") {
    auto m = shen_randers(0.5, +1);
    V2 x{0.2, -0.1}, y{0.8, 0.5};
    double K1 = flag_curvature(m, x, y, {1.0, 0.0});
    double K2 = flag_curvature(m, x, y, {0.3, -1.1});
    CHECK(K1 == doctest::Approx(K2).epsilon(1e-9));
    CHECK_THROWS_AS(flag_curvature(m, x, y, {1.6, 1.0}), std::domain_error);
}

TEST_CASE("g-symmetry of the Riemannian curvature") {
    SampleGen gen;
    auto m = shen_randers(0.4, +1);
    for (int i = 0; i < 30; ++i) {
        V2 x = gen.point();
        V2 y = gen.vector();
        M2 g = fundamental_tensor(m, x, y);
        M2 R = riemann_Rij_eval<double>(m, x, y);
        // g(R_y(u), v) symmetric in (u, v): g_il R^l_j = g_jl R^l_i
        M2 lowered{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                lowered[a][b] = g[a][0] * R[0][b] + g[a][1] * R[1][b];
        CHECK(lowered[0][1] == doctest::Approx(lowered[1][0]).epsilon(1e-8));
    }
}

TEST_CASE("curvature vector: closed form at the origin") {
    // xi = R(e1, e2) at x = 0 for the Randers family, eps = +1:
    //   xi^1 = 1/4 y2 (a1 y1 + |y|)/|y|
    //   xi^2 = -1/4 (y1 (1 + a1^2) + a1 (|y|^2 + y1^2)/|y|)
    for (double a1 : {0.0, 0.3, 0.5, 0.7}) {
        auto m = shen_randers(a1, +1);
        for (int k = 0; k < 64; ++k) {
            double th = 2 * M_PI * (k + 0.31) / 64;
            V2 y{1.3 * std::cos(th), 1.3 * std::sin(th)};
            double r = std::hypot(y[0], y[1]);
            V2 xi = curvature_vector(m, {0, 0}, y, {1, 0}, {0, 1});
            double e1 = 0.25 * y[1] * (a1 * y[0] + r) / r;
            double e2 = -0.25 * (y[0] * (1 + a1 * a1) + a1 * (r * r + y[0] * y[0]) / r);
            CHECK(xi[0] == doctest::Approx(e1).epsilon(1e-8));
            CHECK(xi[1] == doctest::Approx(e2).epsilon(1e-8));
        }
    }
}

TEST_CASE("curvature vector: antisymmetry in the arguments and Funk spot value") {
    auto m = shen_randers(0.5, +1);
    V2 x{0.1, 0.3}, y{0.9, -0.4};
    V2 a = curvature_vector(m, x, y, {1, 0}, {0, 1});
    V2 b = curvature_vector(m, x, y, {0, 1}, {1, 0});
    CHECK(a[0] == doctest::Approx(-b[0]).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(-b[1]).epsilon(1e-12));

    V2 xi = curvature_vector(shen_randers(0.0, +1), {0, 0}, {0, 1}, {1, 0}, {0, 1});
    CHECK(xi[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(xi[1]) < 1e-12);
}
