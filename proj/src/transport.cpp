#include "randerslab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "randerslab/indicatrix.hpp"

namespace randerslab {

namespace {

V2 seg_position(const PathSpec& p, int s, double t) {
    if (p.kind == PathSpec::Kind::Circle) {
        double ang = 2.0 * M_PI * t;
        return {p.center[0] + p.radius * std::cos(ang), p.center[1] + p.radius * std::sin(ang)};
    }
    const V2& A = p.vertices[s];
    const V2& B = p.vertices[s + 1];
    return {A[0] + t * (B[0] - A[0]), A[1] + t * (B[1] - A[1])};
}

V2 seg_velocity(const PathSpec& p, int s, double t) {
    if (p.kind == PathSpec::Kind::Circle) {
        double ang = 2.0 * M_PI * t;
        double w = 2.0 * M_PI * p.radius;
        return {-w * std::sin(ang), w * std::cos(ang)};
    }
    const V2& A = p.vertices[s];
    const V2& B = p.vertices[s + 1];
    return {B[0] - A[0], B[1] - A[1]};
}

V2 start_point(const PathSpec& p) {
    if (p.kind == PathSpec::Kind::Circle) return {p.center[0] + p.radius, p.center[1]};
    if (p.vertices.empty()) throw std::invalid_argument("PathSpec: no vertices");
    return p.vertices.front();
}

}  // namespace

int PathSpec::segments() const {
    if (kind == Kind::Circle) return 1;
    return vertices.empty() ? 0 : (int)vertices.size() - 1;
}

bool PathSpec::closed() const {
    if (kind == Kind::Circle) return true;
    if (vertices.empty()) return false;
    return vertices.front()[0] == vertices.back()[0] && vertices.front()[1] == vertices.back()[1];
}

PathSpec PathSpec::reversed() const {
    PathSpec r = *this;
    if (kind == Kind::Circle) {
        // The circle kind carries no orientation, so its reversal is a dense
        // clockwise polyline.
        const int kArcPoints = 257;
        r.kind = Kind::Polyline;
        r.vertices.clear();
        for (int i = 0; i < kArcPoints; ++i) {
            double ang = -2.0 * M_PI * i / (kArcPoints - 1);
            r.vertices.push_back({center[0] + radius * std::cos(ang), center[1] + radius * std::sin(ang)});
        }
        return r;
    }
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

PathSpec polyline(std::vector<V2> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polyline: need at least one vertex");
    PathSpec p;
    p.kind = PathSpec::Kind::Polyline;
    p.vertices = std::move(vertices);
    return p;
}

PathSpec rectangle(const V2& corner, double width, double height) {
    PathSpec p;
    p.kind = PathSpec::Kind::Rectangle;
    p.vertices = {corner,
                  {corner[0] + width, corner[1]},
                  {corner[0] + width, corner[1] + height},
                  {corner[0], corner[1] + height},
                  corner};
    return p;
}

PathSpec circle_path(const V2& center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("circle_path: radius must be positive");
    PathSpec p;
    p.kind = PathSpec::Kind::Circle;
    p.center = center;
    p.radius = radius;
    return p;
}

V2 transport_vector(const ModelVariant& m, const PathSpec& path, const V2& y0, int steps,
                    double* max_f_drift) {
    check_vector(y0);
    if (steps < 8) throw std::invalid_argument("transport_vector: need at least 8 steps per segment");

    V2 x0 = start_point(path);
    check_point(m, x0);
    double F0 = finsler(m, x0, y0);
    double drift = 0.0;

    V2 X = y0;
    int nseg = path.segments();
    double h = 1.0 / steps;
    for (int s = 0; s < nseg; ++s) {
        auto f = [&](double t, const V2& Z) -> V2 {
            V2 x = seg_position(path, s, t);
            V2 v = seg_velocity(path, s, t);
            M2 Gj = spray_Gj_eval(m, x, Z);
            return {-(Gj[0][0] * v[0] + Gj[0][1] * v[1]), -(Gj[1][0] * v[0] + Gj[1][1] * v[1])};
        };
        for (int i = 0; i < steps; ++i) {
            double t = i * h;
            V2 k1 = f(t, X);
            V2 k2 = f(t + h / 2, {X[0] + h / 2 * k1[0], X[1] + h / 2 * k1[1]});
            V2 k3 = f(t + h / 2, {X[0] + h / 2 * k2[0], X[1] + h / 2 * k2[1]});
            V2 k4 = f(t + h, {X[0] + h * k3[0], X[1] + h * k3[1]});
            X[0] += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
            X[1] += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);

            V2 xe = seg_position(path, s, t + h);
            check_point(m, xe);
            if (max_f_drift) drift = std::max(drift, std::abs(finsler(m, xe, X) - F0));
        }
    }
    if (max_f_drift) *max_f_drift = drift;
    return X;
}

std::vector<double> HolonomyMap::displacements() const {
    std::vector<double> d(t_in.size());
    for (size_t i = 0; i < t_in.size(); ++i) d[i] = t_out[i] - t_in[i];
    return d;
}

HolonomyMap holonomy_map(const ModelVariant& m, const PathSpec& loop, int samples, int steps) {
    if (!loop.closed()) throw std::invalid_argument("holonomy_map: loop is not closed");
    if (samples < 16) throw std::invalid_argument("holonomy_map: need at least 16 samples");

    V2 x0 = start_point(loop);
    IndicatrixChart chart =
        (x0[0] == 0.0 && x0[1] == 0.0) ? origin_chart(m) : general_chart(m, x0);

    HolonomyMap H;
    H.x = x0;
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * M_PI * i / samples;
        V2 z = transport_vector(m, loop, chart.point(t), steps);

        double traw = std::atan2(z[1], z[0]);
        double anchor = (i == 0) ? t : H.t_out.back();
        double k = std::floor((anchor - traw) / (2.0 * M_PI) + 0.5);
        H.t_in.push_back(t);
        H.t_out.push_back(traw + 2.0 * M_PI * k);
        H.f_drift = std::max(H.f_drift, std::abs(finsler(m, x0, z) - 1.0));
    }

    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < samples; ++i) margin = std::min(margin, H.t_out[i + 1] - H.t_out[i]);
    margin = std::min(margin, H.t_out.front() + 2.0 * M_PI - H.t_out.back());
    H.monotonicity_margin = margin;
    if (margin <= 0.0)
        throw std::runtime_error("holonomy_map: lift is not strictly increasing; increase steps");
    return H;
}

double apply_lift(const HolonomyMap& map, double t) {
    int M = map.t_in.size();
    double t0 = map.t_in.front();
    double winding = std::floor((t - t0) / (2.0 * M_PI));
    double u = t - 2.0 * M_PI * winding;  // in [t0, t0 + 2 pi)

    double step = 2.0 * M_PI / M;
    int i0 = std::min<int>((u - t0) / step, M - 1);
    double frac = (u - map.t_in[i0]) / step;
    double lo = map.t_out[i0];
    double hi = (i0 + 1 < M) ? map.t_out[i0 + 1] : map.t_out.front() + 2.0 * M_PI;
    return lo + frac * (hi - lo) + 2.0 * M_PI * winding;
}

SmallLoopProfile small_loop_generator(const ModelVariant& m, double h0, int samples, int steps) {
    if (h0 <= 0.0 || h0 > 0.1)
        throw std::invalid_argument("small_loop_generator: h0 must be in (0, 0.1]");

    std::vector<double> prof[3];
    std::vector<double> ts;
    double hs[3] = {h0, h0 / 2, h0 / 4};
    for (int j = 0; j < 3; ++j) {
        HolonomyMap map = holonomy_map(m, rectangle({0.0, 0.0}, hs[j], hs[j]), samples, steps);
        std::vector<double> d = map.displacements();
        for (double& v : d) v /= hs[j] * hs[j];
        prof[j] = std::move(d);
        if (j == 0) ts = map.t_in;
    }

    double num = 0.0, den = 0.0;
    for (int i = 0; i < samples; ++i) {
        num = std::max(num, std::abs(prof[0][i] - prof[1][i]));
        den = std::max(den, std::abs(prof[1][i] - prof[2][i]));
    }

    SmallLoopProfile out;
    out.t = std::move(ts);
    out.profile.resize(samples);
    for (int i = 0; i < samples; ++i) {
        double r1 = 2.0 * prof[1][i] - prof[0][i];
        double r1p = 2.0 * prof[2][i] - prof[1][i];
        out.profile[i] = (4.0 * r1p - r1) / 3.0;
    }

    // Profile differences at the integrator noise floor mean the sequence has
    // already converged (the flat model), not that it diverges.
    if (num < 1e-10 && den < 1e-10)
        out.order = std::numeric_limits<double>::infinity();
    else
        out.order = std::log2(num / den);
    if (out.order < 0.5)
        throw std::runtime_error(
            "small_loop_generator: displacement profiles are not converging (order < 0.5)");
    return out;
}

double rk4_order_ratio(const ModelVariant& m, const PathSpec& path, const V2& y0, int steps) {
    V2 a = transport_vector(m, path, y0, steps);
    V2 b = transport_vector(m, path, y0, 2 * steps);
    V2 c = transport_vector(m, path, y0, 4 * steps);
    double num = std::hypot(a[0] - b[0], a[1] - b[1]);
    double den = std::hypot(b[0] - c[0], b[1] - c[1]);
    if (den == 0.0)
        throw std::runtime_error("rk4_order_ratio: differences at machine precision; reduce steps");
    return num / den;
}

}  // namespace randerslab
