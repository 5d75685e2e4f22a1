#pragma once

#include <vector>

#include "calderon/types.hpp"

namespace calderon::linalg {

// Orthonormal basis for the column space of `a`, keeping singular directions
// with sigma > rel_tol * sigma_max.
CMatrix orthonormal_basis(const CMatrix& a, double rel_tol = 1e-10);

// Orthonormal basis with prescribed dimension (largest `rank` singular
// directions).
CMatrix orthonormal_basis(const CMatrix& a, Eigen::Index rank);

// Singular values, descending.
RVector singular_values(const CMatrix& a);

// Condition number in the 2-norm; infinity for rank-deficient input.
double condition_number(const CMatrix& a);

// Principal angles between the column spaces of two matrices with
// orthonormal columns, ascending. Returns min(cols) angles; small angles are
// resolved from sines, large ones from cosines.
std::vector<double> principal_angles(const CMatrix& q1, const CMatrix& q2);

double op_norm(const CMatrix& a);

// Ordinary least squares y = intercept + slope * x. half_width is the 95%
// normal-approximation half-width 1.96 * SE(slope); zero for two points.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double half_width = 0.0;
  std::size_t samples = 0;
};
// Throws Error(kDegenerateFit) with fewer than two points or constant x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace calderon::linalg
