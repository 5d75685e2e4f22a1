#pragma once

#include <functional>

#include "calderon/contour/contour.hpp"

namespace calderon::contour {

// (1 / 2 pi i) \oint_c (z - M)^{-1} dz: spectral projector onto the
// generalized eigenspace of the eigenvalues enclosed by c. Throws
// Error(kEigenvalueOnContour) when an eigenvalue lies within 1e-8 (relative)
// of the curve.
CMatrix riesz_projector(const CMatrix& m, const Contour& c, double tol = 1e-12);

// Same with an automatically placed contour around the eigenvalues for
// which `select` returns true.
CMatrix riesz_projector(const CMatrix& m,
                        const std::function<bool(cdouble)>& select,
                        double tol = 1e-12);

// a^t = (1 / 2 pi i) \oint z^t (z - a)^{-1} dz with the branch of z^t cut
// along the ray r e^{i cut_angle}, r >= 0 (arg z in (cut - 2 pi, cut)).
// The contour is a union of circles around eigenvalue clusters that avoid
// the cut. Throws Error(kEigenvalueOnCut) when an eigenvalue touches the cut
// or the origin.
CMatrix matrix_power_interp(const CMatrix& a, double t, double cut_angle,
                            double tol = 1e-13);

// z^t on the branch cut along cut_angle.
cdouble branch_power(cdouble z, double t, double cut_angle);

}  // namespace calderon::contour
