#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "randerslab/circle_field.hpp"
#include "randerslab/model.hpp"

namespace randerslab {

// Restriction coefficient of the curvature field on the origin indicatrix,
// as a callable; equals -1/4 (1 + a1 cos t)^2 for ShenRanders with eps = +1.
std::function<double(double)> omega_function(const ModelVariant& m);

// xi0^{l,m} = sin^l t cos^m t * omega(t), projected exactly (degree l+m+2).
CircleField xi_lm(const ModelVariant& m, int l, int mm);

// Restriction of nabla_{i1} ... nabla_{ik} xi to the origin indicatrix as a
// Fourier field (idx empty gives xi itself). Bridges the covariant-derivative
// machinery into bracket-generation seeds.
CircleField restricted_derivative_field(const ModelVariant& m, const std::vector<int>& idx,
                                        int order);

struct SpanBasis {
    std::vector<CircleField> fields;
    Eigen::MatrixXd ortho;  // orthonormal rows spanning the coefficient space
    int rank = 0;
    double tol = 1e-9;
};

SpanBasis make_span(const std::vector<CircleField>& fields, double tol = 1e-9);

// Relative distance from the span (0 = member, 1 = orthogonal).
double membership_residual(const SpanBasis& span, const CircleField& field);

// Span of {xi0^{l,m} : l+m <= n}; its rank is the 2n+1 law under test.
SpanBasis sigma_basis(const ModelVariant& m, int n, double tol = 1e-9);

// Rank of the raw sample matrix f_i(t_j), independent of the Fourier
// representation; the oracle for sigma_basis.
int sampled_rank(const std::vector<std::function<double(double)>>& fns, int grid = 256,
                 double tol = 1e-9);

struct AlgebraResult {
    SpanBasis basis;
    std::vector<int> rank_history;  // rank after each round, [0] = seeds alone
};

// Close the span of the seeds under the Lie bracket, round by round
// (bracketing fields added in the previous round against everything),
// until the rank stalls or the caps are hit.
AlgebraResult generate_algebra(const std::vector<CircleField>& seeds, int max_dim,
                               int max_rounds, double tol = 1e-8);

// Coefficientwise errors of the two bracket expansion laws at a given n:
//   [xi0, xi0^{0,n-1}] = (n-1)/4 xi0^{1,n-2} + a1(n-1)/2 xi0^{1,n-1}
//                        + a1^2(n-1)/4 xi0^{1,n}
//   [xi0, xi0^{1,n-2}] = (n-2)/4 xi0^{0,n-3} + a1(n-2)/2 xi0^{0,n-2}
//                        + (a1^2(n-2) - (n-1))/4 xi0^{0,n-1}
//                        - a1(n-1)/2 xi0^{0,n} - a1^2(n-1)/4 xi0^{0,n+1}
std::pair<double, double> bracket_recursion_errors(const ModelVariant& m, int n);

// Coefficientwise errors of the multiple-angle expansions
//   sin nt * xi0 = sum_k C(n,k) sin((n-k) pi/2) xi0^{n-k,k}
//   cos nt * xi0 = sum_k C(n,k) cos((n-k) pi/2) xi0^{n-k,k}
std::pair<double, double> multiple_angle_check(const ModelVariant& m, int n);

// Sup-norm error of the Fejer (Cesaro) mean of order N against the target,
// for N = 0..Nmax; errs[N] is the error at order N.
std::vector<double> fejer_error_curve(const std::function<double(double)>& target, int Nmax,
                                      int coef_grid = 2048, int sup_grid = 2048);

}  // namespace randerslab
