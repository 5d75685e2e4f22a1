#include "calderon/contour/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "calderon/cauchy/companion.hpp"
#include "calderon/error.hpp"

namespace calderon::contour {

std::string_view to_string(HalfPlane h) {
  switch (h) {
    case HalfPlane::kUpper: return "upper";
    case HalfPlane::kLower: return "lower";
    case HalfPlane::kReal: return "real";
  }
  return "real";
}

std::vector<cdouble> companion_eigenvalues(const symbol::ModeSymbol& sym) {
  const CMatrix c = cauchy::companion_matrix(sym);
  Eigen::ComplexEigenSolver<CMatrix> solver(c, /*computeEigenvectors=*/false);
  const CVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<CharacteristicRoot> characteristic_roots(
    const symbol::ModeSymbol& sym, const RootOptions& options) {
  std::vector<cdouble> xis;
  for (const cdouble& lambda : companion_eigenvalues(sym)) {
    xis.push_back(-kI * lambda);  // lambda = i xi
  }
  std::sort(xis.begin(), xis.end(), [](cdouble a, cdouble b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const double real_cut = options.real_tol * (1.0 + sym.m.norm());
  std::vector<CharacteristicRoot> roots;
  std::vector<bool> used(xis.size(), false);
  for (std::size_t i = 0; i < xis.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    cdouble sum = xis[i];
    int count = 1;
    for (std::size_t j = i + 1; j < xis.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(xis[j] - xis[i]) <=
          options.group_tol * std::max(1.0, std::abs(xis[i]))) {
        used[j] = true;
        sum += xis[j];
        ++count;
      }
    }
    const cdouble xi = sum / static_cast<double>(count);
    HalfPlane h = HalfPlane::kReal;
    if (xi.imag() > real_cut) h = HalfPlane::kUpper;
    if (xi.imag() < -real_cut) h = HalfPlane::kLower;
    roots.push_back({xi, count, h});
  }

  if (options.throw_on_real) {
    for (const auto& root : roots) {
      if (root.half_plane == HalfPlane::kReal) {
        std::ostringstream os;
        os << "real characteristic root xi_n = " << root.xi.real() << " at mode "
           << sym.m.to_string();
        throw Error(ErrorCode::kDefectMode, os.str());
      }
    }
  }
  return roots;
}

}  // namespace calderon::contour
