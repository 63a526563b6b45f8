#include "randerslab/indicatrix.hpp"

#include <cmath>

namespace randerslab {

IndicatrixChart origin_chart(const ModelVariant& m) {
    double b = 0.0;
    switch (m.kind) {
        case Kind::ShenRanders: b = m.epsilon * m.a1; break;
        case Kind::FlatMinkowski: b = m.a1; break;
        case Kind::KleinRiemannian: b = 0.0; break;
    }
    IndicatrixChart chart;
    chart.m = m;
    chart.x = {0.0, 0.0};
    chart.point = [b](double t) -> V2 {
        double den = 1.0 + b * std::cos(t);
        return {std::cos(t) / den, std::sin(t) / den};
    };
    chart.velocity = [b](double t) -> V2 {
        double den = 1.0 + b * std::cos(t);
        return {-std::sin(t) / (den * den), (std::cos(t) + b) / (den * den)};
    };
    return chart;
}

IndicatrixChart general_chart(const ModelVariant& m, const V2& x) {
    check_point(m, x);
    auto radius = [m, x](double t) {
        V2 e{std::cos(t), std::sin(t)};
        double fe = finsler_eval<double>(m, x, e);
        if (!(fe > 0.0))
            throw std::domain_error("general_chart: F is not positive along this ray");
        // 1-homogeneity puts the root of F(x, r e) = 1 inside [1/(2 fe), 2/fe].
        double lo = 0.5 / fe, hi = 2.0 / fe;
        for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            (finsler_eval<double>(m, x, {mid * e[0], mid * e[1]}) < 1.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    IndicatrixChart chart;
    chart.m = m;
    chart.x = x;
    chart.point = [radius](double t) -> V2 {
        double r = radius(t);
        return {r * std::cos(t), r * std::sin(t)};
    };
    chart.velocity = [m, x, radius](double t) -> V2 {
        V2 e{std::cos(t), std::sin(t)};
        V2 ep{-std::sin(t), std::cos(t)};
        double r = radius(t);
        // Differentiate F(x, r(t) e(t)) = 1:  r'/r + r * dF(x, re).ep = 0.
        Vec2<D1> xd{D1{x[0]}, D1{x[1]}};
        Vec2<D1> yd{D1{r * e[0], r * ep[0]}, D1{r * e[1], r * ep[1]}};
        double dF_ep = finsler_eval(m, xd, yd).d / r;  // dF/dy . ep
        double rp = -r * r * dF_ep;
        return {rp * e[0] + r * ep[0], rp * e[1] + r * ep[1]};
    };
    return chart;
}

std::pair<double, double> restrict_at(const IndicatrixChart& chart,
                                      const std::function<V2(double)>& field, double t) {
    V2 v = field(t);
    V2 w = chart.velocity(t);
    double ww = w[0] * w[0] + w[1] * w[1];
    double c = (v[0] * w[0] + v[1] * w[1]) / ww;
    double r0 = v[0] - c * w[0], r1 = v[1] - c * w[1];
    return {c, std::hypot(r0, r1)};
}

RestrictedField restrict_field(const IndicatrixChart& chart,
                               const std::function<V2(double)>& field, int samples,
                               double tangency_tol) {
    RestrictedField out;
    out.residual = 0.0;
    out.t.reserve(samples);
    out.coeff.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * M_PI * i / samples;
        auto [c, res] = restrict_at(chart, field, t);
        out.t.push_back(t);
        out.coeff.push_back(c);
        out.residual = std::max(out.residual, res);
    }
    if (out.residual > tangency_tol)
        throw std::domain_error("restrict_field: field not tangent to indicatrix, residual " +
                                std::to_string(out.residual));
    return out;
}

double omega_closed_form(const ModelVariant& m, double t) {
    if (m.kind != Kind::ShenRanders || m.epsilon != +1)
        throw std::domain_error(
            "omega_closed_form: only available for ShenRanders with epsilon = +1; "
            "restrict the curvature field numerically for other variants");
    double c = 1.0 + m.a1 * std::cos(t);
    return -0.25 * c * c;
}

}  // namespace randerslab
