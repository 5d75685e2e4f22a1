#include "calderon/contour/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "calderon/error.hpp"

namespace calderon::contour {

namespace {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Aspect ratios tried by place_contour, circle first.
constexpr double kAspects[] = {1.0, 2.0, 0.5, 4.0, 0.25, 8.0, 0.125,
                               16.0, 0.0625, 64.0, 1.0 / 64.0};

}  // namespace

Contour Contour::circle(cdouble center, double radius, int nodes) {
  return Contour{Shape::kCircle, center, radius, radius, nodes};
}

Contour Contour::ellipse(cdouble center, double radius_x, double radius_y,
                         int nodes) {
  return Contour{Shape::kEllipse, center, radius_x, radius_y, nodes};
}

cdouble Contour::point(double theta) const {
  return center + cdouble(radius_x * std::cos(theta), radius_y * std::sin(theta));
}

cdouble Contour::tangent(double theta) const {
  return cdouble(-radius_x * std::sin(theta), radius_y * std::cos(theta));
}

bool Contour::encloses(cdouble z) const {
  const cdouble d = z - center;
  const double u = d.real() / radius_x;
  const double v = d.imag() / radius_y;
  return u * u + v * v < 1.0;
}

double Contour::distance(cdouble z) const {
  if (shape == Shape::kCircle || radius_x == radius_y) {
    return std::abs(std::abs(z - center) - radius_x);
  }
  // Coarse scan followed by golden-section refinement of |z - z(theta)|.
  constexpr int kScan = 720;
  auto dist = [&](double t) { return std::abs(z - point(t)); };
  double best_t = 0.0;
  double best = dist(0.0);
  for (int i = 1; i < kScan; ++i) {
    const double t = 2.0 * kPi * i / kScan;
    const double d = dist(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  double lo = best_t - 2.0 * kPi / kScan;
  double hi = best_t + 2.0 * kPi / kScan;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    const double a = hi - g * (hi - lo);
    const double b = lo + g * (hi - lo);
    if (dist(a) < dist(b)) {
      hi = b;
    } else {
      lo = a;
    }
  }
  return std::min(best, dist(0.5 * (lo + hi)));
}

QuadratureResult contour_quadrature(const MatrixFunction& f, const Contour& c,
                                    double tol) {
  if (c.nodes < 8) {
    throw Error(ErrorCode::kOutOfRange, "contour needs at least 8 nodes");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::kOutOfRange, "tolerance must be > 0");

  int n = c.nodes;
  CMatrix sum;
  double scale_sum = 0.0;
  auto accumulate = [&](int total, int start, int stride) {
    for (int j = start; j < total; j += stride) {
      const double theta = 2.0 * kPi * j / total;
      const cdouble dz = c.tangent(theta);
      CMatrix term = f(c.point(theta)) * dz;
      scale_sum += max_abs(term);
      if (sum.size() == 0) {
        sum = std::move(term);
      } else {
        sum += term;
      }
    }
  };

  accumulate(n, 0, 1);
  CMatrix value = sum / (kI * static_cast<double>(n));
  for (;;) {
    const int next = 2 * n;
    if (next > kMaxQuadratureNodes) {
      throw Error(ErrorCode::kContourNotConverged,
                  "contour quadrature did not converge within " +
                      std::to_string(kMaxQuadratureNodes) + " nodes");
    }
    accumulate(next, 1, 2);
    CMatrix refined = sum / (kI * static_cast<double>(next));
    const double change = max_abs(refined - value);
    const double scale =
        std::max(max_abs(refined), scale_sum / static_cast<double>(next));
    value = std::move(refined);
    n = next;
    if (change <= tol * scale) return {std::move(value), n, change};
  }
}

double contour_margin(const Contour& c, const std::vector<cdouble>& points) {
  double m = std::numeric_limits<double>::infinity();
  for (const cdouble& z : points) m = std::min(m, c.distance(z));
  return m;
}

Contour place_contour(const std::vector<cdouble>& inside,
                      const std::vector<cdouble>& outside) {
  if (inside.empty()) {
    throw Error(ErrorCode::kContourNotSeparating, "nothing to enclose");
  }
  cdouble center{0.0, 0.0};
  for (const cdouble& z : inside) center += z;
  center /= static_cast<double>(inside.size());

  double magnitude = 1.0;
  for (const cdouble& z : inside) magnitude = std::max(magnitude, std::abs(z));
  for (const cdouble& z : outside) magnitude = std::max(magnitude, std::abs(z));

  bool found = false;
  Contour best;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (double aspect : kAspects) {
    // Ellipse metric with radius_x = aspect * radius_y.
    auto metric = [&](cdouble z) {
      const cdouble d = z - center;
      return std::hypot(d.real() / aspect, d.imag());
    };
    double spread = 0.0;
    for (const cdouble& z : inside) spread = std::max(spread, metric(z));
    double gap = std::numeric_limits<double>::infinity();
    for (const cdouble& z : outside) gap = std::min(gap, metric(z));

    double radius_y = 0.0;
    double ratio = 0.0;
    if (!std::isfinite(gap)) {
      radius_y = std::max(2.0 * spread, 0.5 * magnitude / std::max(1.0, aspect));
      ratio = spread / radius_y;
    } else {
      if (!(spread < gap * (1.0 - 1e-6))) continue;
      radius_y = 0.5 * (spread + gap);
      ratio = std::max(spread / radius_y, radius_y / gap);
    }
    if (ratio < best_ratio - 1e-12) {
      best_ratio = ratio;
      best = aspect == 1.0 ? Contour::circle(center, radius_y)
                           : Contour::ellipse(center, aspect * radius_y, radius_y);
      found = true;
    }
    // A circle that separates well is good enough.
    if (found && aspect == 1.0 && best_ratio < 0.75) break;
  }
  if (!found) {
    throw Error(ErrorCode::kContourNotSeparating,
                "no circle or ellipse separates the enclosed spectrum");
  }
  return best;
}

}  // namespace calderon::contour
