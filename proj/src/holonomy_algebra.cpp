#include "randerslab/holonomy_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "randerslab/fiber_field.hpp"
#include "randerslab/indicatrix.hpp"

namespace randerslab {

namespace {

// Binomial coefficients stay exact in double far beyond the orders used here.
double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

// sin(k pi/2), cos(k pi/2) for integer k, without trig roundoff.
double sin_quarter(int k) {
    static const int tab[4] = {0, 1, 0, -1};
    return tab[((k % 4) + 4) % 4];
}

double cos_quarter(int k) { return sin_quarter(k + 1); }

CircleField trimmed(const CircleField& u, double rel = 1e-13) {
    double mx = 0.0;
    for (double c : u.coef) mx = std::max(mx, std::abs(c));
    int N = u.order;
    while (N > 0 && std::abs(u.a(N)) <= rel * mx && std::abs(u.b(N)) <= rel * mx) --N;
    CircleField out;
    out.order = N;
    out.coef.assign(u.coef.begin(), u.coef.begin() + (2 * N + 1));
    return out;
}

}  // namespace

std::function<double(double)> omega_function(const ModelVariant& m) {
    IndicatrixChart chart = origin_chart(m);
    FieldPtr xi = curvature_field(m);
    std::function<V2(double)> vec = [m, chart, xi](double t) {
        return xi->eval(chart.x, chart.point(t));
    };
    return [chart, vec](double t) { return restrict_at(chart, vec, t).first; };
}

CircleField xi_lm(const ModelVariant& m, int l, int mm) {
    if (l < 0 || mm < 0) throw std::invalid_argument("xi_lm: negative power");
    auto om = omega_function(m);
    auto f = [&](double t) {
        return std::pow(std::sin(t), l) * std::pow(std::cos(t), mm) * om(t);
    };
    return project(f, l + mm + 2);
}

CircleField restricted_derivative_field(const ModelVariant& m, const std::vector<int>& idx,
                                        int order) {
    FieldPtr f = curvature_field(m);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) f = berwald_derivative(m, f, *it);
    IndicatrixChart chart = origin_chart(m);
    std::function<V2(double)> vec = [m, chart, f](double t) {
        return f->eval(chart.x, chart.point(t));
    };
    return project([&](double t) { return restrict_at(chart, vec, t).first; }, order);
}

SpanBasis make_span(const std::vector<CircleField>& fields, double tol) {
    SpanBasis span;
    span.fields = fields;
    span.tol = tol;
    if (fields.empty()) return span;

    int dim = 1;
    for (const CircleField& f : fields) dim = std::max<int>(dim, f.coef.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(fields.size(), dim);
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = 0; j < fields[i].coef.size(); ++j) M(i, j) = fields[i].coef[j];

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0)
        while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
    span.rank = rank;
    span.ortho = svd.matrixV().leftCols(rank).transpose();
    return span;
}

double membership_residual(const SpanBasis& span, const CircleField& field) {
    int n = std::max<int>(span.ortho.cols(), field.coef.size());
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (size_t j = 0; j < field.coef.size(); ++j) v(j) = field.coef[j];
    double nv = v.norm();
    if (nv == 0.0) return 0.0;

    Eigen::VectorXd r = v;
    for (int i = 0; i < span.ortho.rows(); ++i) {
        Eigen::VectorXd q = Eigen::VectorXd::Zero(n);
        q.head(span.ortho.cols()) = span.ortho.row(i);
        r -= q.dot(r) * q;
    }
    return r.norm() / nv;
}

SpanBasis sigma_basis(const ModelVariant& m, int n, double tol) {
    if (n < 0) throw std::invalid_argument("sigma_basis: n must be >= 0");
    std::vector<CircleField> fields;
    for (int l = 0; l <= n; ++l)
        for (int mm = 0; l + mm <= n; ++mm) fields.push_back(xi_lm(m, l, mm));
    return make_span(fields, tol);
}

int sampled_rank(const std::vector<std::function<double(double)>>& fns, int grid, double tol) {
    if (fns.empty()) return 0;
    Eigen::MatrixXd M(fns.size(), grid);
    for (size_t i = 0; i < fns.size(); ++i)
        for (int j = 0; j < grid; ++j) M(i, j) = fns[i](2.0 * M_PI * j / grid);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    int rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0)
        while (rank < sv.size() && sv(rank) > tol * sv(0)) ++rank;
    return rank;
}

namespace {

// Incremental Gram-Schmidt span used while closing under brackets. Rows are
// stored padded to a shared, growable dimension.
struct GrowingSpan {
    std::vector<std::vector<double>> rows;
    int dim = 1;
    double tol;

    explicit GrowingSpan(double t) : tol(t) {}

    bool add(const CircleField& f) {
        if ((int)f.coef.size() > dim) {
            dim = f.coef.size();
            for (auto& q : rows) q.resize(dim, 0.0);
        }
        std::vector<double> v(dim, 0.0);
        std::copy(f.coef.begin(), f.coef.end(), v.begin());

        double nv = 0.0;
        for (double c : v) nv += c * c;
        nv = std::sqrt(nv);

        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : rows) {
                double d = 0.0;
                for (int i = 0; i < dim; ++i) d += q[i] * v[i];
                for (int i = 0; i < dim; ++i) v[i] -= d * q[i];
            }
        }
        double nr = 0.0;
        for (double c : v) nr += c * c;
        nr = std::sqrt(nr);

        if (nr <= tol * std::max(nv, 1.0)) return false;
        for (double& c : v) c /= nr;
        rows.push_back(std::move(v));
        return true;
    }
};

}  // namespace

AlgebraResult generate_algebra(const std::vector<CircleField>& seeds, int max_dim,
                               int max_rounds, double tol) {
    AlgebraResult res;
    res.basis.tol = tol;
    auto& fields = res.basis.fields;
    GrowingSpan span(tol);

    for (const CircleField& s : seeds)
        if (span.add(s)) fields.push_back(trimmed(s));
    res.rank_history.push_back(fields.size());

    size_t block_lo = 0;
    for (int round = 0; round < max_rounds; ++round) {
        size_t block_hi = fields.size();
        if ((int)block_hi >= max_dim) break;
        for (size_t i = block_lo; i < block_hi; ++i) {
            for (size_t j = 0; j < i; ++j) {
                if ((int)fields.size() >= max_dim) break;
                CircleField w = trimmed(bracket(fields[i], fields[j]));
                if (span.add(w)) fields.push_back(w);
            }
        }
        res.rank_history.push_back(fields.size());
        if (fields.size() == block_hi) break;  // stalled
        block_lo = block_hi;
    }

    res.basis.rank = fields.size();
    res.basis.ortho = Eigen::MatrixXd::Zero(span.rows.size(), span.dim);
    for (size_t i = 0; i < span.rows.size(); ++i)
        for (int j = 0; j < span.dim; ++j) res.basis.ortho(i, j) = span.rows[i][j];
    return res;
}

std::pair<double, double> bracket_recursion_errors(const ModelVariant& m, int n) {
    if (n < 3) throw std::invalid_argument("bracket_recursion_errors: n must be >= 3");
    // The expansion coefficients come from omega = -1/4 (1 + b cos t)^2 with
    // b the indicatrix shape parameter, which absorbs the sign of epsilon.
    double a1 = (m.kind == Kind::ShenRanders) ? m.epsilon * m.a1 : m.a1;
    auto xi = [&](int l, int mm) { return xi_lm(m, l, mm); };

    CircleField lhs1 = bracket(xi(0, 0), xi(0, n - 1));
    CircleField rhs1 = add(scale(xi(1, n - 2), (n - 1) / 4.0),
                           add(scale(xi(1, n - 1), a1 * (n - 1) / 2.0),
                               scale(xi(1, n), a1 * a1 * (n - 1) / 4.0)));
    double err1 = coef_inf_distance(lhs1, rhs1);

    CircleField lhs2 = bracket(xi(0, 0), xi(1, n - 2));
    CircleField rhs2 = scale(xi(0, n - 3), (n - 2) / 4.0);
    rhs2 = add(rhs2, scale(xi(0, n - 2), a1 * (n - 2) / 2.0));
    rhs2 = add(rhs2, scale(xi(0, n - 1), (a1 * a1 * (n - 2) - (n - 1)) / 4.0));
    rhs2 = add(rhs2, scale(xi(0, n), -a1 * (n - 1) / 2.0));
    rhs2 = add(rhs2, scale(xi(0, n + 1), -a1 * a1 * (n - 1) / 4.0));
    double err2 = coef_inf_distance(lhs2, rhs2);

    return {err1, err2};
}

std::pair<double, double> multiple_angle_check(const ModelVariant& m, int n) {
    if (n < 1) throw std::invalid_argument("multiple_angle_check: n must be >= 1");
    auto om = omega_function(m);

    CircleField lhs_s = project([&](double t) { return std::sin(n * t) * om(t); }, n + 2);
    CircleField lhs_c = project([&](double t) { return std::cos(n * t) * om(t); }, n + 2);

    CircleField rhs_s = CircleField::zero(n + 2);
    CircleField rhs_c = CircleField::zero(n + 2);
    for (int k = 0; k <= n; ++k) {
        double c = binomial(n, k);
        CircleField base = xi_lm(m, n - k, k);
        rhs_s = add(rhs_s, scale(base, c * sin_quarter(n - k)));
        rhs_c = add(rhs_c, scale(base, c * cos_quarter(n - k)));
    }

    return {coef_inf_distance(lhs_s, rhs_s), coef_inf_distance(lhs_c, rhs_c)};
}

std::vector<double> fejer_error_curve(const std::function<double(double)>& target, int Nmax,
                                      int coef_grid, int sup_grid) {
    if (Nmax < 0) throw std::invalid_argument("fejer_error_curve: Nmax must be >= 0");
    CircleField full = project(target, Nmax, coef_grid);

    std::vector<double> ts(sup_grid), fs(sup_grid);
    for (int j = 0; j < sup_grid; ++j) {
        ts[j] = 2.0 * M_PI * j / sup_grid;
        fs[j] = target(ts[j]);
    }

    std::vector<double> errs(Nmax + 1);
    for (int N = 0; N <= Nmax; ++N) {
        CircleField sig = CircleField::zero(N);
        sig.a(0) = full.a(0);
        for (int k = 1; k <= N; ++k) {
            double damp = 1.0 - double(k) / (N + 1);
            sig.a(k) = damp * full.a(k);
            sig.b(k) = damp * full.b(k);
        }
        double e = 0.0;
        for (int j = 0; j < sup_grid; ++j) e = std::max(e, std::abs(sig.eval(ts[j]) - fs[j]));
        errs[N] = e;
    }
    return errs;
}

}  // namespace randerslab
