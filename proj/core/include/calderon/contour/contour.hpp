#pragma once

#include <functional>
#include <vector>

#include "calderon/types.hpp"

namespace calderon::contour {

// Counter-clockwise circle or axis-aligned ellipse
//   z(theta) = center + radius_x cos(theta) + i radius_y sin(theta).
struct Contour {
  enum class Shape { kCircle, kEllipse };

  Shape shape = Shape::kCircle;
  cdouble center{0.0, 0.0};
  double radius_x = 1.0;
  double radius_y = 1.0;
  int nodes = 16;  // initial trapezoidal node count, >= 8

  static Contour circle(cdouble center, double radius, int nodes = 16);
  static Contour ellipse(cdouble center, double radius_x, double radius_y,
                         int nodes = 16);

  cdouble point(double theta) const;
  cdouble tangent(double theta) const;
  bool encloses(cdouble z) const;
  // Euclidean distance from z to the curve.
  double distance(cdouble z) const;
};

struct QuadratureResult {
  CMatrix value;
  int nodes = 0;
  double last_change = 0.0;
};

using MatrixFunction = std::function<CMatrix(cdouble)>;

// (1 / 2 pi i) \oint f(z) dz by the trapezoidal rule, doubling the node count
// until two successive values differ by less than
//   tol * max(|value|, mean |f(z) z'|).
// Throws Error(kContourNotConverged) past 2^16 nodes.
QuadratureResult contour_quadrature(const MatrixFunction& f, const Contour& c,
                                    double tol = 1e-10);

inline constexpr int kMaxQuadratureNodes = 1 << 16;

// Smallest distance from any of `points` to the contour curve.
double contour_margin(const Contour& c, const std::vector<cdouble>& points);

// Circle (preferred) or ellipse centred at the mean of `inside` that
// encloses every point of `inside` and none of `outside`; the curve sits
// halfway between the two groups in the ellipse metric. Throws
// Error(kContourNotSeparating) when no candidate separates the sets.
Contour place_contour(const std::vector<cdouble>& inside,
                      const std::vector<cdouble>& outside);

}  // namespace calderon::contour
