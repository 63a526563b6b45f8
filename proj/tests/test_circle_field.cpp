#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <randerslab/circle_field.hpp>
#include <randerslab/indicatrix.hpp>

using namespace randerslab;

namespace {

CircleField from_coeffs(int N, std::initializer_list<std::pair<int, double>> as,
                        std::initializer_list<std::pair<int, double>> bs) {
    CircleField f = CircleField::zero(N);
    for (auto [k, v] : as) f.a(k) = v;
    for (auto [k, v] : bs) f.b(k) = v;
    return f;
}

}  // namespace

TEST_CASE("projection recovers a trigonometric polynomial exactly") {
    auto f = [](double t) { return 0.3 - 1.2 * std::cos(t) + 0.7 * std::sin(3 * t); };
    CircleField c = project(f, 4);
    CHECK(c.a(0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(c.a(1) == doctest::Approx(-1.2).epsilon(1e-14));
    CHECK(c.b(3) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(std::abs(c.b(1)) < 1e-14);
    CHECK(std::abs(c.a(4)) < 1e-14);
    for (double t : {0.0, 0.8, 2.9, 5.5}) CHECK(c.eval(t) == doctest::Approx(f(t)).epsilon(1e-13));
}

TEST_CASE("omega projects onto the frozen coefficients") {
    ModelVariant m = shen_randers(0.5, +1);
    CircleField w = project([&](double t) { return omega_closed_form(m, t); }, 2);
    CHECK(w.a(0) == doctest::Approx(-0.28125).epsilon(1e-14));
    CHECK(w.a(1) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(w.a(2) == doctest::Approx(-0.03125).epsilon(1e-14));
    CHECK(std::abs(w.b(1)) < 1e-15);
    CHECK(std::abs(w.b(2)) < 1e-15);
}

TEST_CASE("bracket implements the circle vector-field commutator") {
    // [d/dt, cos t d/dt] = -sin t d/dt
    CircleField one = from_coeffs(0, {{0, 1.0}}, {});
    CircleField cost = from_coeffs(1, {{1, 1.0}}, {});
    CircleField br = bracket(one, cost);
    CHECK(std::abs(br.a(0)) < 1e-15);
    CHECK(std::abs(br.a(1)) < 1e-15);
    CHECK(br.b(1) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("pointwise product convolves spectra") {
    CircleField cost = from_coeffs(1, {{1, 1.0}}, {});
    CircleField sint = from_coeffs(1, {}, {{1, 1.0}});
    CircleField p = multiply(cost, sint);  // = sin(2t)/2
    CHECK(p.order == 2);
    CHECK(p.b(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(p.a(2)) < 1e-16);
    CHECK(std::abs(p.a(0)) < 1e-16);
}

TEST_CASE("antisymmetry holds bitwise in coefficients") {
    CircleField u = from_coeffs(3, {{0, 0.37}, {2, -1.1}}, {{1, 0.22}, {3, 0.9}});
    CircleField v = from_coeffs(2, {{1, 0.61}}, {{2, -0.45}});
    CircleField uv = bracket(u, v);
    CircleField vu = bracket(v, u);
    REQUIRE(uv.coef.size() == vu.coef.size());
    for (size_t i = 0; i < uv.coef.size(); ++i) CHECK(uv.coef[i] == -vu.coef[i]);
}

TEST_CASE("Jacobi identity") {
    CircleField u = from_coeffs(2, {{0, 0.5}, {1, -0.3}}, {{2, 0.8}});
    CircleField v = from_coeffs(3, {{2, 1.1}}, {{1, -0.7}, {3, 0.2}});
    CircleField w = from_coeffs(1, {{1, 0.9}}, {{1, 0.4}});
    CircleField j = add(bracket(u, bracket(v, w)),
                        add(bracket(v, bracket(w, u)), bracket(w, bracket(u, v))));
    CHECK(sup_norm(j) < 1e-9);
}

TEST_CASE("capacity and grid guards") {
    CircleField big = CircleField::zero(3000);
    big.a(3000) = 1.0;
    CHECK_THROWS_AS(bracket(big, big), std::overflow_error);
    CHECK_THROWS_AS(multiply(big, big), std::overflow_error);
    CHECK_THROWS_AS(project([](double) { return 0.0; }, 64, 100), std::invalid_argument);
}

TEST_CASE("distance and norm helpers") {
    CircleField u = from_coeffs(2, {{0, 1.0}, {2, 0.25}}, {});
    CircleField v = from_coeffs(1, {{0, 1.0}}, {{1, 0.1}});
    CHECK(coef_inf_distance(u, v) == doctest::Approx(0.25));
    CHECK(sup_norm(from_coeffs(1, {{1, 1.0}}, {})) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(coef_inf_distance(u, u) == 0.0);
}
