#include "randerslab/fiber_field.hpp"

#include <cmath>

namespace randerslab {

IteratedRestriction iterated_restriction(const ModelVariant& m, const MultiIndex& idx,
                                         int samples) {
    if (m.kind != Kind::ShenRanders)
        throw std::domain_error("iterated_restriction: base field is defined for ShenRanders");
    if ((int)idx.size() > kMaxDerivativeDepth)
        throw std::invalid_argument("iterated_restriction: multi-index longer than depth cap 4");
    for (int j : idx)
        if (j != 1 && j != 2)
            throw std::invalid_argument("iterated_restriction: indices must be 1 or 2");

    FieldPtr base = curvature_field(m);
    FieldPtr field = base;
    // Leftmost index is applied last: wrap starting from the rightmost.
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        field = berwald_derivative(m, field, *it);

    IndicatrixChart chart = origin_chart(m);
    V2 x0{0.0, 0.0};
    auto field_fn = [&](double t) { return field->eval(x0, chart.point(t)); };
    auto base_fn = [&](double t) { return base->eval(x0, chart.point(t)); };

    RestrictedField rf = restrict_field(chart, field_fn, samples);
    RestrictedField rb = restrict_field(chart, base_fn, samples);

    IteratedRestriction out;
    out.t = rf.t;
    out.coeff = rf.coeff;
    out.residual = rf.residual;
    out.ratio.resize(rf.coeff.size());
    for (size_t i = 0; i < rf.coeff.size(); ++i) out.ratio[i] = rf.coeff[i] / rb.coeff[i];
    return out;
}

}  // namespace randerslab
