#pragma once

#include <functional>
#include <vector>

#include "randerslab/model.hpp"

namespace randerslab {

// Parametrization of the unit circle {F(x, .) = 1} in one tangent space.
// Both charts parametrize by the polar angle of y, so parameter recovery
// from a transported vector is atan2 of its direction.
struct IndicatrixChart {
    ModelVariant m;
    V2 x{};
    std::function<V2(double)> point;     // t -> y(t), F(x, y(t)) = 1
    std::function<V2(double)> velocity;  // t -> y'(t)
};

// Closed form at x = 0: y(t) = (cos t, sin t)/(1 + b cos t) with
// b = eps*a1 (ShenRanders), a1 (FlatMinkowski), 0 (KleinRiemannian).
IndicatrixChart origin_chart(const ModelVariant& m);

// Radius r(t) solved from F(x, r e(t)) = 1 by bracketed bisection;
// velocity from implicit differentiation of the same identity.
IndicatrixChart general_chart(const ModelVariant& m, const V2& x);

struct RestrictedField {
    std::vector<double> t;
    std::vector<double> coeff;  // c(t) with field(t) = c(t) * y'(t)
    double residual;            // max orthogonal-component norm over samples
};

inline constexpr double kTangencyTol = 1e-7;

// Per-sample least squares of field(t) against y'(t).
std::pair<double, double> restrict_at(const IndicatrixChart& chart,
                                      const std::function<V2(double)>& field, double t);

RestrictedField restrict_field(const IndicatrixChart& chart,
                               const std::function<V2(double)>& field, int samples = 256,
                               double tangency_tol = kTangencyTol);

// omega(t) = -1/4 (1 + a1 cos t)^2; valid only for ShenRanders with eps = +1.
// For eps = -1 use restrict_field on the curvature field instead.
double omega_closed_form(const ModelVariant& m, double t);

}  // namespace randerslab
