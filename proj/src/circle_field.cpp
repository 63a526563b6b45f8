#include "randerslab/circle_field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace randerslab {

double CircleField::eval(double t) const {
    double s = coef[0];
    for (int k = 1; k <= order; ++k) s += a(k) * std::cos(k * t) + b(k) * std::sin(k * t);
    return s;
}

CircleField project(const std::function<double(double)>& f, int N, int grid) {
    if (N < 0) throw std::invalid_argument("project: negative order");
    if (N > kMaxFourierOrder) throw std::overflow_error("project: order beyond capacity");
    if (grid == 0) grid = std::max(4 * N, 256);
    if (grid < std::max(4 * N, 4))
        throw std::invalid_argument("project: grid too coarse, need at least 4N points");

    std::vector<double> fs(grid);
    for (int i = 0; i < grid; ++i) fs[i] = f(2.0 * M_PI * i / grid);

    CircleField out = CircleField::zero(N);
    double mean = 0.0;
    for (double v : fs) mean += v;
    out.coef[0] = mean / grid;
    for (int k = 1; k <= N; ++k) {
        double ca = 0.0, cb = 0.0;
        for (int i = 0; i < grid; ++i) {
            double t = 2.0 * M_PI * i / grid;
            ca += fs[i] * std::cos(k * t);
            cb += fs[i] * std::sin(k * t);
        }
        out.a(k) = 2.0 * ca / grid;
        out.b(k) = 2.0 * cb / grid;
    }
    return out;
}

CircleField add(const CircleField& u, const CircleField& v) {
    CircleField out = CircleField::zero(std::max(u.order, v.order));
    std::copy(u.coef.begin(), u.coef.end(), out.coef.begin());
    for (size_t i = 0; i < v.coef.size(); ++i) out.coef[i] += v.coef[i];
    return out;
}

CircleField scale(const CircleField& u, double s) {
    CircleField out = u;
    for (double& c : out.coef) c *= s;
    return out;
}

namespace {

// Complex line spectrum c[-N..N], c_k = (a_k - i b_k)/2, c_{-k} = conj(c_k).
std::vector<std::complex<double>> spectrum(const CircleField& u) {
    int N = u.order;
    std::vector<std::complex<double>> c(2 * N + 1);
    c[N] = u.coef[0];
    for (int k = 1; k <= N; ++k) {
        std::complex<double> ck(0.5 * u.a(k), -0.5 * u.b(k));
        c[N + k] = ck;
        c[N - k] = std::conj(ck);
    }
    return c;
}

CircleField from_spectrum(const std::vector<std::complex<double>>& c, int N) {
    CircleField out = CircleField::zero(N);
    out.coef[0] = c[N].real();
    for (int k = 1; k <= N; ++k) {
        out.a(k) = c[N + k].real() + c[N - k].real();
        out.b(k) = c[N - k].imag() - c[N + k].imag();
    }
    return out;
}

int checked_output_order(const CircleField& u, const CircleField& v, const char* who) {
    int N = u.order + v.order;
    if (N > kMaxFourierOrder)
        throw std::overflow_error(std::string(who) +
                                  ": output order exceeds representation capacity; raise the "
                                  "truncation order or cap the bracket depth");
    return N;
}

// Raw convolution for (u v' - v u'): d_k = sum_{p+q=k} i (q - p) cu_p cv_q.
std::vector<std::complex<double>> raw_bracket(const CircleField& u, const CircleField& v,
                                              int N) {
    auto cu = spectrum(u);
    auto cv = spectrum(v);
    std::vector<std::complex<double>> d(2 * N + 1);
    const std::complex<double> I(0.0, 1.0);
    for (int p = -u.order; p <= u.order; ++p)
        for (int q = -v.order; q <= v.order; ++q)
            d[N + p + q] += I * double(q - p) * cu[u.order + p] * cv[v.order + q];
    return d;
}

}  // namespace

CircleField multiply(const CircleField& u, const CircleField& v) {
    int N = checked_output_order(u, v, "multiply");
    auto cu = spectrum(u);
    auto cv = spectrum(v);
    std::vector<std::complex<double>> d(2 * N + 1);
    for (int p = -u.order; p <= u.order; ++p)
        for (int q = -v.order; q <= v.order; ++q)
            d[N + p + q] += cu[u.order + p] * cv[v.order + q];
    return from_spectrum(d, N);
}

CircleField bracket(const CircleField& u, const CircleField& v) {
    int N = checked_output_order(u, v, "bracket");
    auto duv = raw_bracket(u, v, N);
    auto dvu = raw_bracket(v, u, N);
    // Antisymmetrized so bracket(v, u) is the bitwise negation of bracket(u, v).
    std::vector<std::complex<double>> d(2 * N + 1);
    for (int i = 0; i <= 2 * N; ++i) d[i] = 0.5 * (duv[i] - dvu[i]);
    return from_spectrum(d, N);
}

double sup_norm(const CircleField& u, int grid) {
    double m = 0.0;
    for (int i = 0; i < grid; ++i) m = std::max(m, std::abs(u.eval(2.0 * M_PI * i / grid)));
    return m;
}

double coef_inf_distance(const CircleField& u, const CircleField& v) {
    double m = 0.0;
    size_t n = std::max(u.coef.size(), v.coef.size());
    for (size_t i = 0; i < n; ++i) {
        double a = i < u.coef.size() ? u.coef[i] : 0.0;
        double b = i < v.coef.size() ? v.coef[i] : 0.0;
        m = std::max(m, std::abs(a - b));
    }
    return m;
}

}  // namespace randerslab
