#include "calderon/contour/functional_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "calderon/error.hpp"

namespace calderon::contour {

namespace {

std::vector<cdouble> eigenvalues(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  const CVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_scale(const std::vector<cdouble>& ev) {
  double s = 1.0;
  for (const cdouble& z : ev) s = std::max(s, std::abs(z));
  return s;
}

CMatrix resolvent(const CMatrix& m, cdouble z) {
  CMatrix shifted = -m;
  shifted.diagonal().array() += z;
  return Eigen::PartialPivLU<CMatrix>(shifted).inverse();
}

// Distance from z to the closed ray {r e^{i angle} : r >= 0}.
double distance_to_ray(cdouble z, double angle) {
  const cdouble rotated = z * std::polar(1.0, -angle);
  if (rotated.real() <= 0.0) return std::abs(z);
  return std::abs(rotated.imag());
}

}  // namespace

CMatrix riesz_projector(const CMatrix& m, const Contour& c, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "riesz_projector needs a square matrix");
  }
  const auto ev = eigenvalues(m);
  const double margin = contour_margin(c, ev);
  if (margin < 1e-8 * spectral_scale(ev)) {
    std::ostringstream os;
    os << "eigenvalue within " << margin << " of the contour";
    throw Error(ErrorCode::kEigenvalueOnContour, os.str());
  }
  return contour_quadrature([&](cdouble z) { return resolvent(m, z); }, c, tol)
      .value;
}

CMatrix riesz_projector(const CMatrix& m,
                        const std::function<bool(cdouble)>& select,
                        double tol) {
  const auto ev = eigenvalues(m);
  std::vector<cdouble> inside;
  std::vector<cdouble> outside;
  for (const cdouble& z : ev) (select(z) ? inside : outside).push_back(z);
  if (inside.empty()) return CMatrix::Zero(m.rows(), m.cols());
  if (outside.empty()) return CMatrix::Identity(m.rows(), m.cols());
  return riesz_projector(m, place_contour(inside, outside), tol);
}

cdouble branch_power(cdouble z, double t, double cut_angle) {
  if (t == 0.0) return {1.0, 0.0};
  // arg in (cut - 2 pi, cut]
  double arg = std::arg(z) - cut_angle;
  arg = std::fmod(arg, 2.0 * kPi);
  if (arg > 0.0) arg -= 2.0 * kPi;
  if (arg <= -2.0 * kPi) arg += 2.0 * kPi;
  arg += cut_angle;
  return std::exp(t * cdouble(std::log(std::abs(z)), arg));
}

CMatrix matrix_power_interp(const CMatrix& a, double t, double cut_angle,
                            double tol) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix power needs a square matrix");
  }
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  const auto ev = eigenvalues(a);
  const double scale = spectral_scale(ev);
  for (const cdouble& z : ev) {
    if (distance_to_ray(z, cut_angle) < 1e-8 * scale) {
      std::ostringstream os;
      os << "eigenvalue " << z << " lies on the branch cut at angle " << cut_angle;
      throw Error(ErrorCode::kEigenvalueOnCut, os.str());
    }
  }

  // Cluster eigenvalues until every cluster fits in a circle that avoids the
  // cut and all other eigenvalues.
  std::vector<int> owner(ev.size());
  std::iota(owner.begin(), owner.end(), 0);
  struct Disc {
    cdouble center;
    double radius;
  };
  std::vector<Disc> discs;
  for (bool changed = true; changed;) {
    changed = false;
    discs.clear();
    std::vector<int> labels(owner);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int label : labels) {
      cdouble center{0.0, 0.0};
      int count = 0;
      for (std::size_t i = 0; i < ev.size(); ++i) {
        if (owner[i] == label) {
          center += ev[i];
          ++count;
        }
      }
      center /= static_cast<double>(count);
      double spread = 0.0;
      double gap_eig = std::numeric_limits<double>::infinity();
      std::size_t nearest = 0;
      for (std::size_t i = 0; i < ev.size(); ++i) {
        const double d = std::abs(ev[i] - center);
        if (owner[i] == label) {
          spread = std::max(spread, d);
        } else if (d < gap_eig) {
          gap_eig = d;
          nearest = i;
        }
      }
      const double gap_cut = distance_to_ray(center, cut_angle);
      const double gap = std::min(gap_eig, gap_cut);
      if (spread < 0.9 * gap) {
        discs.push_back({center, 0.5 * (spread + gap)});
        continue;
      }
      if (gap_eig <= gap_cut) {
        const int other = owner[nearest];
        for (int& o : owner) {
          if (o == other) o = label;
        }
        changed = true;
        break;
      }
      throw Error(ErrorCode::kEigenvalueOnCut,
                  "eigenvalue cluster cannot be separated from the branch cut");
    }
  }

  CMatrix out = CMatrix::Zero(n, n);
  for (const Disc& d : discs) {
    out += contour_quadrature(
               [&](cdouble z) {
                 return CMatrix(branch_power(z, t, cut_angle) * resolvent(a, z));
               },
               Contour::circle(d.center, d.radius), tol)
               .value;
  }
  return out;
}

}  // namespace calderon::contour
