#include "calderon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "calderon/error.hpp"

namespace calderon::linalg {

namespace {

Eigen::JacobiSVD<CMatrix> thin_svd(const CMatrix& a) {
  return Eigen::JacobiSVD<CMatrix>(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

}  // namespace

CMatrix orthonormal_basis(const CMatrix& a, double rel_tol) {
  if (a.cols() == 0 || a.rows() == 0) return CMatrix(a.rows(), 0);
  auto svd = thin_svd(a);
  const RVector& s = svd.singularValues();
  Eigen::Index rank = 0;
  const double cut = rel_tol * s(0);
  while (rank < s.size() && s(rank) > cut && s(rank) > 0.0) ++rank;
  return svd.matrixU().leftCols(rank);
}

CMatrix orthonormal_basis(const CMatrix& a, Eigen::Index rank) {
  if (rank == 0) return CMatrix(a.rows(), 0);
  auto svd = thin_svd(a);
  return svd.matrixU().leftCols(rank);
}

RVector singular_values(const CMatrix& a) {
  if (a.size() == 0) return RVector(0);
  return Eigen::JacobiSVD<CMatrix>(a).singularValues();
}

double condition_number(const CMatrix& a) {
  const RVector s = singular_values(a);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

std::vector<double> principal_angles(const CMatrix& q1, const CMatrix& q2) {
  const bool first_small = q1.cols() <= q2.cols();
  const CMatrix& small = first_small ? q1 : q2;
  const CMatrix& large = first_small ? q2 : q1;
  const Eigen::Index d = small.cols();
  std::vector<double> angles;
  if (d == 0) return angles;

  const CMatrix cross = large.adjoint() * small;
  const RVector cosines = singular_values(cross);  // descending
  const CMatrix residual = small - large * cross;
  const RVector sines = singular_values(residual);  // descending

  angles.resize(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const double c = std::min(1.0, i < cosines.size() ? cosines(i) : 0.0);
    const Eigen::Index si = d - 1 - i;
    const double s = std::min(1.0, si < sines.size() ? sines(si) : 0.0);
    angles[static_cast<std::size_t>(i)] = std::atan2(s, c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double op_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

}  // namespace calderon::linalg

namespace calderon::linalg {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kDegenerateFit, "line fit needs at least two points");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::kDegenerateFit, "line fit abscissae are constant");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.samples = x.size();
  if (x.size() > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - fit.intercept - fit.slope * x[i];
      rss += e * e;
    }
    fit.half_width = 1.96 * std::sqrt(rss / (n - 2.0) / sxx);
  }
  return fit;
}

}  // namespace calderon::linalg
