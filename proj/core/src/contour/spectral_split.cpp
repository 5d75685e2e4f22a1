#include "calderon/contour/spectral_split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "calderon/error.hpp"
#include "calderon/linalg.hpp"

namespace calderon::contour {

namespace {

double norm1(const CMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

CMatrix matrix_sign(const CMatrix& c, int* iterations) {
  const Eigen::Index n = c.rows();
  CMatrix x = c;
  bool scaling = true;
  constexpr int kMaxIterations = 100;
  for (int it = 1; it <= kMaxIterations; ++it) {
    Eigen::PartialPivLU<CMatrix> lu(x);
    double mu = 1.0;
    if (scaling) {
      double log_det = 0.0;
      const CMatrix& packed = lu.matrixLU();
      for (Eigen::Index i = 0; i < n; ++i) log_det += std::log(std::abs(packed(i, i)));
      mu = std::exp(-log_det / static_cast<double>(n));
      if (!std::isfinite(mu) || mu <= 0.0) mu = 1.0;
    }
    CMatrix next = 0.5 * (mu * x + lu.inverse() / mu);
    const double change = norm1(next - x);
    const double size = norm1(next);
    x = std::move(next);
    if (!x.allFinite()) break;
    if (change < 1e-2 * size) scaling = false;
    if (change <= 1e-14 * size * std::sqrt(static_cast<double>(n))) {
      if (iterations) *iterations = it;
      return x;
    }
  }
  throw Error(ErrorCode::kDefectMode,
              "sign iteration did not converge; spectrum touches the "
              "imaginary axis");
}

SpectralSplit spectral_split(const CMatrix& c) {
  const Eigen::Index n = c.rows();
  SpectralSplit out;
  if (n == 0) return out;

  Eigen::ComplexEigenSolver<CMatrix> solver(c, false);
  const CVector& ev = solver.eigenvalues();
  Eigen::Index stable = 0;
  double gap = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    gap = std::min(gap, std::abs(ev(i).real()));
    scale = std::max(scale, std::abs(ev(i)));
    if (ev(i).real() < 0.0) ++stable;
  }
  if (gap <= 1e-10 * scale) {
    std::ostringstream os;
    os << "eigenvalue within " << gap << " of the imaginary axis";
    throw Error(ErrorCode::kDefectMode, os.str());
  }
  out.gap = gap;

  const CMatrix sign = matrix_sign(c, &out.sign_iterations);
  const CMatrix id = CMatrix::Identity(n, n);
  out.stable_projector = 0.5 * (id - sign);
  const CMatrix unstable_projector = 0.5 * (id + sign);
  out.stable_frame = linalg::orthonormal_basis(out.stable_projector, stable);
  out.unstable_frame = linalg::orthonormal_basis(unstable_projector, n - stable);
  return out;
}

}  // namespace calderon::contour
