#pragma once

#include <functional>
#include <vector>

#include "randerslab/model.hpp"

namespace randerslab {

// Trigonometric polynomial f(t) = a0 + sum_k (a_k cos kt + b_k sin kt),
// acting as the circle vector field f(t) d/dt. Coefficient layout is
// [a0, a1, b1, a2, b2, ...], so vectors of different order are
// prefix-compatible and can live in one span matrix.
struct CircleField {
    int order = 0;
    std::vector<double> coef;  // size 2*order + 1

    static CircleField zero(int N) { return {N, std::vector<double>(2 * N + 1, 0.0)}; }

    double a(int k) const { return k == 0 ? coef[0] : coef[2 * k - 1]; }
    double b(int k) const { return coef[2 * k]; }
    double& a(int k) { return k == 0 ? coef[0] : coef[2 * k - 1]; }
    double& b(int k) { return coef[2 * k]; }

    double eval(double t) const;
};

// Brackets double the order per application; past this the representation is
// refusing rather than aliasing.
inline constexpr int kMaxFourierOrder = 4096;

// Trapezoidal-rule Fourier projection on a uniform grid (grid = 0 picks
// max(4N, 256)). Exact for trigonometric polynomials of degree <= N when
// grid >= 4N, since products f(t) cos(kt) stay below the aliasing threshold.
CircleField project(const std::function<double(double)>& f, int N, int grid = 0);

CircleField add(const CircleField& u, const CircleField& v);
CircleField scale(const CircleField& u, double s);
CircleField multiply(const CircleField& u, const CircleField& v);  // pointwise product

// Lie bracket [u, v] = (u v' - v u') d/dt, exact coefficient convolution.
// Antisymmetry holds bitwise: bracket(u, v) == -bracket(v, u).
CircleField bracket(const CircleField& u, const CircleField& v);

double sup_norm(const CircleField& u, int grid = 1024);
double coef_inf_distance(const CircleField& u, const CircleField& v);

}  // namespace randerslab
