#include "calderon/symbol/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "calderon/contour/roots.hpp"
#include "calderon/error.hpp"

namespace calderon::symbol {

namespace {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

// Circular distance between two angles.
double angle_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, 2.0 * kPi - d);
}

struct EigenCloud {
  std::vector<double> args;
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
};

EigenCloud principal_eigenvalues(const OperatorSpec& spec, int count) {
  EigenCloud cloud;
  for (const auto& xi : cosphere_samples(spec.n(), count)) {
    Eigen::ComplexEigenSolver<CMatrix> solver(principal_symbol(spec, xi), false);
    const CVector& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double mag = std::abs(ev(i));
      cloud.min_abs = std::min(cloud.min_abs, mag);
      cloud.max_abs = std::max(cloud.max_abs, mag);
      cloud.args.push_back(wrap_angle(std::arg(ev(i))));
    }
  }
  return cloud;
}

}  // namespace

std::vector<std::vector<double>> cosphere_samples(int n, int count) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 2) {
    for (int i = 0; i < count; ++i) {
      const double phi = 2.0 * kPi * i / count;
      out.push_back({std::cos(phi), std::sin(phi)});
    }
  } else if (n == 3) {
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      out.push_back({z, rho * std::cos(phi), rho * std::sin(phi)});
    }
  } else {
    std::mt19937_64 rng(0x5eedu + static_cast<unsigned>(n));
    std::normal_distribution<double> gauss;
    for (int i = 0; i < count; ++i) {
      std::vector<double> v(static_cast<std::size_t>(n));
      double norm = 0.0;
      for (double& x : v) {
        x = gauss(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
      out.push_back(std::move(v));
    }
  }
  return out;
}

EllipticityReport check_ellipticity(const OperatorSpec& spec, int samples,
                                    int defect_cutoff) {
  if (samples < 8) {
    throw Error(ErrorCode::kOutOfRange, "ellipticity check needs >= 8 samples");
  }
  EllipticityReport report;
  report.samples = samples;
  report.defect_cutoff = defect_cutoff;
  report.min_abs_det = std::numeric_limits<double>::infinity();
  for (const auto& xi : cosphere_samples(spec.n(), samples)) {
    const double d = std::abs(principal_symbol(spec, xi).determinant());
    report.min_abs_det = std::min(report.min_abs_det, d);
  }
  report.pass = report.min_abs_det > 1e-10;

  auto shared = std::make_shared<const OperatorSpec>(spec);
  contour::RootOptions options;
  options.throw_on_real = false;
  for (const Mode& m : modes_in_box(spec.boundary_dims(), defect_cutoff)) {
    const auto roots = contour::characteristic_roots(mode_symbol(shared, m), options);
    const bool defect = std::any_of(roots.begin(), roots.end(), [](const auto& r) {
      return r.half_plane == contour::HalfPlane::kReal;
    });
    if (defect) report.defect_modes.push_back(m);
  }
  return report;
}

AgmonRay find_agmon_ray(const OperatorSpec& spec, int grid) {
  if (grid < 16) throw Error(ErrorCode::kOutOfRange, "Agmon ray search needs grid >= 16");
  const int count = spec.n() == 2 ? grid : grid * grid / 2;
  EigenCloud cloud = principal_eigenvalues(spec, count);
  const double scale = std::max(1.0, cloud.max_abs);
  if (cloud.min_abs < 1e-12 * scale) {
    throw Error(ErrorCode::kNoFreeRay,
                "principal symbol has a zero eigenvalue on the cosphere");
  }

  std::vector<double> args = cloud.args;
  std::sort(args.begin(), args.end());
  double best_gap = 0.0;
  double best_mid = 0.0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const double lo = args[i];
    const double hi = (i + 1 < args.size()) ? args[i + 1] : args[0] + 2.0 * kPi;
    if (hi - lo > best_gap) {
      best_gap = hi - lo;
      best_mid = 0.5 * (lo + hi);
    }
  }

  AgmonRay ray;
  ray.theta = wrap_angle(best_mid);
  ray.epsilon = 0.5 * best_gap;
  if (spec.agmon_hint) {
    // Keep a user-supplied ray when it is inside a free sector.
    double nearest = std::numeric_limits<double>::infinity();
    for (double a : args) nearest = std::min(nearest, angle_distance(a, *spec.agmon_hint));
    if (nearest > kPi / 180.0) {
      ray.theta = wrap_angle(*spec.agmon_hint);
      ray.epsilon = nearest;
    }
  }

  const EigenCloud fine = principal_eigenvalues(spec, 4 * count);
  for (double a : fine.args) {
    const double d = angle_distance(a, ray.theta);
    if (d <= ray.epsilon) ray.epsilon = 0.99 * d;
  }
  ray.eigenvalue_count = static_cast<int>(fine.args.size());
  ray.min_abs_eigenvalue = std::min(cloud.min_abs, fine.min_abs);
  ray.max_abs_eigenvalue = std::max(cloud.max_abs, fine.max_abs);
  if (2.0 * ray.epsilon < 2.0 * kPi / 180.0) {
    throw Error(ErrorCode::kNoFreeRay,
                "eigenvalues of the principal symbol leave no free sector of "
                "width >= 2 degrees");
  }
  return ray;
}

}  // namespace calderon::symbol
