#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "randerslab/curvature.hpp"
#include "randerslab/fiber_field.hpp"
#include "randerslab/holonomy_algebra.hpp"
#include "randerslab/indicatrix.hpp"
#include "randerslab/model.hpp"
#include "randerslab/transport.hpp"

namespace py = pybind11;
using namespace randerslab;

namespace {

ModelVariant make_model(const std::string& kind, double a1, int epsilon) {
    if (kind == "shen") return shen_randers(a1, epsilon);
    if (kind == "klein") return klein_riemannian();
    if (kind == "flat") return flat_minkowski(a1);
    throw std::invalid_argument("model must be shen, klein, or flat");
}

std::string model_repr(const ModelVariant& m) {
    switch (m.kind) {
        case Kind::ShenRanders:
            return "Model('shen', a1=" + std::to_string(m.a1) +
                   ", epsilon=" + std::to_string(m.epsilon) + ")";
        case Kind::KleinRiemannian: return "Model('klein')";
        case Kind::FlatMinkowski: return "Model('flat', a1=" + std::to_string(m.a1) + ")";
    }
    return "Model(?)";
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Negatively curved Randers disk models: metric, curvature, indicatrix "
                "vector-field algebra, and parallel-transport holonomy.";

    py::class_<ModelVariant>(mod, "Model")
        .def(py::init(&make_model), py::arg("kind"), py::arg("a1") = 0.0, py::arg("epsilon") = 1)
        .def_readonly("a1", &ModelVariant::a1)
        .def_readonly("epsilon", &ModelVariant::epsilon)
        .def("__repr__", &model_repr);

    mod.def("finsler", &finsler, py::arg("m"), py::arg("x"), py::arg("y"),
            "Finsler norm F(x, y)");
    mod.def("fundamental_tensor", &fundamental_tensor, py::arg("m"), py::arg("x"), py::arg("y"),
            "g_ij(x, y), the y-Hessian of F^2/2");
    mod.def("projective_factor", &projective_factor, py::arg("m"), py::arg("x"), py::arg("y"),
            "scalar P with spray G = P(x, y) y");
    mod.def(
        "spray",
        [](const ModelVariant& m, const V2& x, const V2& y) {
            SprayData s = spray(m, x, y);
            return py::make_tuple(s.G, s.Gj, s.Gjk);
        },
        py::arg("m"), py::arg("x"), py::arg("y"),
        "(G^i, G^i_j, G^i_jk) of the associated spray");
    mod.def(
        "curvature_tensor",
        [](const ModelVariant& m, const V2& x, const V2& y) {
            CurvatureData c = curvature_tensor(m, x, y);
            return py::make_tuple(c.Rijk, c.Rij, c.ric);
        },
        py::arg("m"), py::arg("x"), py::arg("y"), "(R^i_jk, R^i_j, Ric)");
    mod.def("flag_curvature", &flag_curvature, py::arg("m"), py::arg("x"), py::arg("y"),
            py::arg("u"), "flag curvature K(x, y, u)");
    mod.def("curvature_vector", &curvature_vector, py::arg("m"), py::arg("x"), py::arg("y"),
            py::arg("X"), py::arg("Y"), "xi = R(X, Y) at (x, y)");

    mod.def(
        "indicatrix",
        [](const ModelVariant& m, const V2& x, double t) {
            IndicatrixChart chart =
                (x[0] == 0.0 && x[1] == 0.0) ? origin_chart(m) : general_chart(m, x);
            return py::make_tuple(chart.point(t), chart.velocity(t));
        },
        py::arg("m"), py::arg("x"), py::arg("t"),
        "(y(t), y'(t)) on the unit circle of F at x");
    mod.def(
        "restricted_omega",
        [](const ModelVariant& m, double t) { return omega_function(m)(t); }, py::arg("m"),
        py::arg("t"), "restriction coefficient of the curvature field at the origin");
    mod.def(
        "iterated_restriction",
        [](const ModelVariant& m, const std::vector<int>& idx, int samples) {
            IteratedRestriction r = iterated_restriction(m, idx, samples);
            return py::make_tuple(r.t, r.coeff, r.ratio, r.residual);
        },
        py::arg("m"), py::arg("idx"), py::arg("samples") = 256,
        "(t, coeff, coeff/omega, tangency residual) of nabla_idx xi restricted at the origin");

    mod.def(
        "sigma_rank",
        [](const ModelVariant& m, int n) { return sigma_basis(m, n).rank; }, py::arg("m"),
        py::arg("n"), "numerical rank of {sin^l cos^m xi0 : l+m <= n}");
    mod.def("bracket_recursion_errors", &bracket_recursion_errors, py::arg("m"), py::arg("n"),
            "coefficientwise errors of the two bracket expansion laws");
    mod.def("multiple_angle_errors", &multiple_angle_check, py::arg("m"), py::arg("n"),
            "coefficientwise errors of the sin/cos multiple-angle expansions");
    mod.def(
        "fejer_generator_curve",
        [](const ModelVariant& m, int n, const std::string& kind, int Nmax) {
            auto om = omega_function(m);
            bool is_cos = kind == "cos";
            if (!is_cos && kind != "sin") throw std::invalid_argument("kind must be sin or cos");
            return fejer_error_curve(
                [om, n, is_cos](double t) {
                    return (is_cos ? std::cos(n * t) : std::sin(n * t)) / om(t);
                },
                Nmax);
        },
        py::arg("m"), py::arg("n"), py::arg("kind"), py::arg("max_order") = 64,
        "sup-error of the Fejer mean of (sin|cos)(nt)/omega per order");

    mod.def(
        "transport_polyline",
        [](const ModelVariant& m, const std::vector<V2>& verts, const V2& y0, int steps) {
            return transport_vector(m, polyline(verts), y0, steps);
        },
        py::arg("m"), py::arg("vertices"), py::arg("y0"), py::arg("steps") = 512,
        "parallel transport of y0 along the polyline");
    mod.def(
        "holonomy_rectangle",
        [](const ModelVariant& m, const V2& corner, double width, double height, int samples,
           int steps) {
            HolonomyMap h = holonomy_map(m, rectangle(corner, width, height), samples, steps);
            py::dict out;
            out["t_in"] = h.t_in;
            out["t_out"] = h.t_out;
            out["f_drift"] = h.f_drift;
            out["monotonicity_margin"] = h.monotonicity_margin;
            return out;
        },
        py::arg("m"), py::arg("corner"), py::arg("width"), py::arg("height"),
        py::arg("samples") = 64, py::arg("steps") = 512,
        "sampled holonomy map of the rectangle loop");
    mod.def(
        "small_loop_profile",
        [](const ModelVariant& m, double h0, int samples, int steps) {
            SmallLoopProfile p = small_loop_generator(m, h0, samples, steps);
            return py::make_tuple(p.t, p.profile, p.order);
        },
        py::arg("m"), py::arg("h0") = 0.1, py::arg("samples") = 64, py::arg("steps") = 256,
        "(t, Richardson-extrapolated displacement/h^2, empirical order)");
}
