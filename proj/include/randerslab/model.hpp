#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "randerslab/dual.hpp"

namespace randerslab {

template <class S>
using Vec2 = std::array<S, 2>;
template <class S>
using Mat2 = std::array<std::array<S, 2>, 2>;
template <class S>
using Ten3 = std::array<Mat2<S>, 2>;  // indexed [i][j][k]

using V2 = Vec2<double>;
using M2 = Mat2<double>;
using T3 = Ten3<double>;

enum class Kind { ShenRanders, KleinRiemannian, FlatMinkowski };

// Metric family on the unit disk (FlatMinkowski lives on all of R^2):
//   ShenRanders:     sqrt(|y|^2 - (|x|^2 |y|^2 - <x,y>^2)) / (1 - |x|^2)
//                    + eps * ( <x,y>/(1 - |x|^2) + a1*y1/(1 + a1*x1) )
//   KleinRiemannian: the square-root term alone
//   FlatMinkowski:   |y| + a1*y1, independent of x
struct ModelVariant {
    Kind kind = Kind::ShenRanders;
    double a1 = 0.0;
    int epsilon = +1;
};

inline ModelVariant shen_randers(double a1, int epsilon) {
    if (!(std::abs(a1) < 1.0))
        throw std::domain_error("shen_randers: need |a1| < 1, got " + std::to_string(a1));
    if (epsilon != 1 && epsilon != -1)
        throw std::domain_error("shen_randers: epsilon must be +1 or -1");
    return {Kind::ShenRanders, a1, epsilon};
}

inline ModelVariant klein_riemannian() { return {Kind::KleinRiemannian, 0.0, +1}; }

inline ModelVariant flat_minkowski(double a1) {
    if (!(std::abs(a1) < 1.0))
        throw std::domain_error("flat_minkowski: need |a1| < 1, got " + std::to_string(a1));
    return {Kind::FlatMinkowski, a1, +1};
}

inline bool disk_based(const ModelVariant& m) { return m.kind != Kind::FlatMinkowski; }

// Guard band: reject points within 1e-6 of the unit circle, where the
// denominators 1 - |x|^2 lose all precision.
inline constexpr double kDiskGuard = 1e-6;

inline void check_point(const ModelVariant& m, const V2& x) {
    if (!disk_based(m)) return;
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    if (!(r <= 1.0 - kDiskGuard))
        throw std::domain_error("point outside the guarded unit disk: |x| = " + std::to_string(r));
}

inline void check_vector(const V2& y) {
    if (y[0] == 0.0 && y[1] == 0.0)
        throw std::domain_error("tangent vector must be nonzero");
}

template <class S>
S dot2(const Vec2<S>& u, const Vec2<S>& v) {
    return u[0] * v[0] + u[1] * v[1];
}

template <class S>
S finsler_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    S r2 = dot2(y, y);
    if (m.kind == Kind::FlatMinkowski) return sqrt(r2) + m.a1 * y[0];
    S u = dot2(x, x);
    S s = dot2(x, y);
    S core = sqrt(r2 - (u * r2 - s * s)) / (1.0 - u);
    if (m.kind == Kind::KleinRiemannian) return core;
    return core + double(m.epsilon) * (s / (1.0 - u) + m.a1 * y[0] / (1.0 + m.a1 * x[0]));
}

inline double finsler(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    return finsler_eval<double>(m, x, y);
}

// g_ij(x,y) = 1/2 d^2(F^2)/dy_i dy_j, by two nested dual sweeps in y.
template <class S>
Mat2<S> fundamental_tensor_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using DD = Dual<Dual<S>>;
    Mat2<S> g{};
    Vec2<DD> xd{DD{Dual<S>{x[0]}}, DD{Dual<S>{x[1]}}};
    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) {
            Vec2<DD> yd{DD{Dual<S>{y[0]}}, DD{Dual<S>{y[1]}}};
            yd[i].d.a = S(1.0);
            yd[j].a.d = S(1.0);
            DD f = finsler_eval(m, xd, yd);
            DD e = f * f;
            g[i][j] = e.d.d / 2.0;
            g[j][i] = g[i][j];
        }
    }
    return g;
}

inline M2 fundamental_tensor(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    M2 g = fundamental_tensor_eval<double>(m, x, y);
    double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (!(g[0][0] > 0.0 && det > 0.0))
        throw std::domain_error("fundamental tensor is not positive definite at this (x, y)");
    return g;
}

// Projective factor, closed form per variant. All three sprays are of the
// projective shape G^i = P * y^i.
template <class S>
S projective_factor_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    if (m.kind == Kind::FlatMinkowski) return S{};
    S u = dot2(x, x);
    S s = dot2(x, y);
    if (m.kind == Kind::KleinRiemannian) return s / (1.0 - u);
    S r2 = dot2(y, y);
    S root = sqrt((1.0 - u) * r2 + s * s);
    return ((double(m.epsilon) * root + s) / (1.0 - u) - m.a1 * y[0] / (1.0 + m.a1 * x[0])) / 2.0;
}

inline double projective_factor(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    return projective_factor_eval<double>(m, x, y);
}

// Independent route: P = (dF/dx^i) y^i / (2F), via one dual sweep of x along y.
template <class S>
S projective_factor_generic_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using D = Dual<S>;
    Vec2<D> xd{D{x[0], y[0]}, D{x[1], y[1]}};
    Vec2<D> yd{D{y[0]}, D{y[1]}};
    D f = finsler_eval(m, xd, yd);
    return f.d / (2.0 * f.a);
}

inline double projective_factor_generic(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    return projective_factor_generic_eval<double>(m, x, y);
}

template <class S>
Vec2<S> spray_G_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    S p = projective_factor_eval(m, x, y);
    return {p * y[0], p * y[1]};
}

// G^i_j = dG^i/dy^j = P_{y^j} y^i + P delta^i_j
template <class S>
Mat2<S> spray_Gj_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using D = Dual<S>;
    Vec2<D> xd{D{x[0]}, D{x[1]}};
    S p{};
    Vec2<S> dp{};
    for (int j = 0; j < 2; ++j) {
        Vec2<D> yd{D{y[0]}, D{y[1]}};
        yd[j].d = S(1.0);
        D pd = projective_factor_eval(m, xd, yd);
        p = pd.a;
        dp[j] = pd.d;
    }
    Mat2<S> Gj{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Gj[i][j] = dp[j] * y[i];
            if (i == j) Gj[i][j] = Gj[i][j] + p;
        }
    return Gj;
}

// G^i_jk = P_{y^j y^k} y^i + P_{y^j} delta^i_k + P_{y^k} delta^i_j
template <class S>
Ten3<S> spray_Gjk_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using DD = Dual<Dual<S>>;
    Vec2<DD> xd{DD{Dual<S>{x[0]}}, DD{Dual<S>{x[1]}}};
    Vec2<S> dp{};
    Mat2<S> ddp{};
    for (int j = 0; j < 2; ++j) {
        for (int k = j; k < 2; ++k) {
            Vec2<DD> yd{DD{Dual<S>{y[0]}}, DD{Dual<S>{y[1]}}};
            yd[j].d.a = S(1.0);
            yd[k].a.d = S(1.0);
            DD pd = projective_factor_eval(m, xd, yd);
            ddp[j][k] = pd.d.d;
            ddp[k][j] = ddp[j][k];
            dp[j] = pd.d.a;
        }
    }
    Ten3<S> Gjk{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                S v = ddp[j][k] * y[i];
                if (i == k) v = v + dp[j];
                if (i == j) v = v + dp[k];
                Gjk[i][j][k] = v;
            }
    return Gjk;
}

struct SprayData {
    V2 G;
    M2 Gj;
    T3 Gjk;
    double P;
};

inline SprayData spray(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    return {spray_G_eval<double>(m, x, y), spray_Gj_eval<double>(m, x, y),
            spray_Gjk_eval<double>(m, x, y), projective_factor_eval<double>(m, x, y)};
}

// Generic spray from the fundamental tensor alone:
//   G^i = 1/4 g^{il} (2 dg_jl/dx^k - dg_jk/dx^l) y^j y^k.
// Cross-validates the projective route; costs one dual sweep in x around g.
template <class S>
Vec2<S> spray_generic_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using D = Dual<S>;
    Mat2<S> g = fundamental_tensor_eval(m, x, y);
    S det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    Mat2<S> ginv{{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};

    Ten3<S> dg{};  // dg[k][i][j] = dg_ij/dx^k
    Vec2<D> yd{D{y[0]}, D{y[1]}};
    for (int k = 0; k < 2; ++k) {
        Vec2<D> xd{D{x[0]}, D{x[1]}};
        xd[k].d = S(1.0);
        Mat2<D> gd = fundamental_tensor_eval(m, xd, yd);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dg[k][i][j] = gd[i][j].d;
    }

    Vec2<S> G{};
    for (int i = 0; i < 2; ++i) {
        S acc{};
        for (int l = 0; l < 2; ++l)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    acc = acc + ginv[i][l] * (2.0 * dg[k][j][l] - dg[l][j][k]) * y[j] * y[k];
        G[i] = acc / 4.0;
    }
    return G;
}

inline V2 spray_generic(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    M2 g = fundamental_tensor_eval<double>(m, x, y);
    double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (!(std::abs(det) > 1e-14))
        throw std::domain_error("spray_generic: fundamental tensor is numerically singular");
    return spray_generic_eval<double>(m, x, y);
}

}  // namespace randerslab
