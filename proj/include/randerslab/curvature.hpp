#pragma once

#include "randerslab/model.hpp"

namespace randerslab {

// R^i_{jk} = dG^i_j/dx^k - dG^i_k/dx^j + G^m_j G^i_{km} - G^m_k G^i_{jm},
// assembled from the spray connection; the x-derivatives come from one dual
// sweep wrapped around spray_Gj_eval.
template <class S>
Ten3<S> curvature_tensor_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    using D = Dual<S>;
    Ten3<S> dGj{};  // dGj[k][i][j] = dG^i_j/dx^k
    Vec2<D> yd{D{y[0]}, D{y[1]}};
    for (int k = 0; k < 2; ++k) {
        Vec2<D> xd{D{x[0]}, D{x[1]}};
        xd[k].d = S(1.0);
        Mat2<D> Gjd = spray_Gj_eval(m, xd, yd);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dGj[k][i][j] = Gjd[i][j].d;
    }
    Mat2<S> Gj = spray_Gj_eval(m, x, y);
    Ten3<S> Gjk = spray_Gjk_eval(m, x, y);

    Ten3<S> R{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                S acc = dGj[k][i][j] - dGj[j][i][k];
                for (int mm = 0; mm < 2; ++mm)
                    acc = acc + Gj[mm][j] * Gjk[i][k][mm] - Gj[mm][k] * Gjk[i][j][mm];
                R[i][j][k] = acc;
            }
    return R;
}

// Flagpole contraction convention: the Riemannian curvature R_y takes the
// flagpole in the FIRST lower slot, R^i_j = R^i_{kj} y^k. This is the slot
// for which the constant-curvature shape
//   R^i_{jk} = lambda (delta^i_k g_{jm}y^m - delta^i_j g_{km}y^m)
// contracts to R^i_j = lambda (F^2 delta^i_j - y^i g_{jm}y^m), making
// Ric = trace R = lambda F^2 and the flag-curvature quotient equal lambda.
template <class S>
Mat2<S> riemann_Rij_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y) {
    Ten3<S> R = curvature_tensor_eval(m, x, y);
    Mat2<S> Rij{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Rij[i][j] = R[i][0][j] * y[0] + R[i][1][j] * y[1];
    return Rij;
}

struct CurvatureData {
    T3 Rijk;  // R^i_{jk}, antisymmetric in (j, k)
    M2 Rij;   // R^i_j, flagpole contracted into the first lower slot
    double ric;
};

inline CurvatureData curvature_tensor(const ModelVariant& m, const V2& x, const V2& y) {
    check_point(m, x);
    check_vector(y);
    T3 R = curvature_tensor_eval<double>(m, x, y);
    M2 Rij{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Rij[i][j] = R[i][0][j] * y[0] + R[i][1][j] * y[1];
    return {R, Rij, Rij[0][0] + Rij[1][1]};
}

// K(y, u) = g(R_y(u), u) / (F^2 g(u,u) - g(y,u)^2)
inline double flag_curvature(const ModelVariant& m, const V2& x, const V2& y, const V2& u) {
    check_point(m, x);
    check_vector(y);
    check_vector(u);
    M2 g = fundamental_tensor(m, x, y);
    M2 Rij = riemann_Rij_eval<double>(m, x, y);
    double F = finsler_eval<double>(m, x, y);

    V2 Ru{Rij[0][0] * u[0] + Rij[0][1] * u[1], Rij[1][0] * u[0] + Rij[1][1] * u[1]};
    auto gdot = [&](const V2& a, const V2& b) {
        return g[0][0] * a[0] * b[0] + g[0][1] * (a[0] * b[1] + a[1] * b[0]) +
               g[1][1] * a[1] * b[1];
    };
    double num = gdot(Ru, u);
    double den = F * F * gdot(u, u) - gdot(y, u) * gdot(y, u);
    if (!(std::abs(den) > 1e-12))
        throw std::domain_error("flag_curvature: degenerate flag, y and u are near-parallel");
    return num / den;
}

// xi^i = R^i_{jk} X^j Y^k
template <class S>
Vec2<S> curvature_vector_eval(const ModelVariant& m, const Vec2<S>& x, const Vec2<S>& y,
                              const Vec2<S>& X, const Vec2<S>& Y) {
    Ten3<S> R = curvature_tensor_eval(m, x, y);
    Vec2<S> xi{};
    for (int i = 0; i < 2; ++i) {
        S acc{};
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) acc = acc + R[i][j][k] * X[j] * Y[k];
        xi[i] = acc;
    }
    return xi;
}

inline V2 curvature_vector(const ModelVariant& m, const V2& x, const V2& y, const V2& X,
                           const V2& Y) {
    check_point(m, x);
    check_vector(y);
    return curvature_vector_eval<double>(m, x, y, X, Y);
}

}  // namespace randerslab
