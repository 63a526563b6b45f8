#pragma once

#include <vector>

#include "randerslab/model.hpp"

namespace randerslab {

// Piecewise-smooth path with piecewise-constant parameter speed. Polylines
// and rectangles decompose into straight segments; a circle is one smooth
// segment. Closed iff the first and last points coincide exactly.
struct PathSpec {
    enum class Kind { Polyline, Rectangle, Circle };
    Kind kind = Kind::Polyline;
    std::vector<V2> vertices;  // Polyline and Rectangle (expanded corners)
    V2 center{};
    double radius = 0.0;

    int segments() const;
    bool closed() const;
    PathSpec reversed() const;
};

PathSpec polyline(std::vector<V2> vertices);
PathSpec rectangle(const V2& corner, double width, double height);
PathSpec circle_path(const V2& center, double radius);

// Solves dX^i/dt + G^i_j(c(t), X) c'(t)^j = 0 with classical RK4, `steps`
// uniform steps per segment. If max_f_drift is given it receives
// max |F(c(t), X(t)) - F(x0, y0)| over all accepted steps.
V2 transport_vector(const ModelVariant& m, const PathSpec& path, const V2& y0, int steps,
                    double* max_f_drift = nullptr);

// Sampled circle diffeomorphism induced by transport around a closed loop.
// t_out is a continuous lift: each value is unwrapped next to its
// predecessor, and the first next to its own t_in.
struct HolonomyMap {
    V2 x{};
    std::vector<double> t_in;
    std::vector<double> t_out;
    double f_drift = 0.0;              // max |F(x, transported) - 1|
    double monotonicity_margin = 0.0;  // min lift increment, > 0

    std::vector<double> displacements() const;
};

HolonomyMap holonomy_map(const ModelVariant& m, const PathSpec& loop, int samples, int steps);

// Piecewise-linear evaluation of the lifted map at any parameter, using
// t_out(t + 2 pi) = t_out(t) + 2 pi to extend beyond the sampled window.
double apply_lift(const HolonomyMap& map, double t);

// Displacement-to-curvature limit: the square loop of side h at the origin
// has (t_out - t_in)/h^2 -> +/- omega(t) as h -> 0; profile is the
// Richardson extrapolation over {h, h/2, h/4}, order the empirical rate.
struct SmallLoopProfile {
    std::vector<double> t;
    std::vector<double> profile;
    double order = 0.0;
};

SmallLoopProfile small_loop_generator(const ModelVariant& m, double h0, int samples, int steps);

// || T_s - T_2s || / || T_2s - T_4s || for the endpoint of one transport;
// classical RK4 puts this in [12, 20] on smooth data (theoretical 16).
double rk4_order_ratio(const ModelVariant& m, const PathSpec& path, const V2& y0, int steps);

}  // namespace randerslab
