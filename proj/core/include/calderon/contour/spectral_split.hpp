#pragma once

#include "calderon/types.hpp"

namespace calderon::contour {

struct SpectralSplit {
  CMatrix stable_frame;      // orthonormal columns, Re lambda < 0
  CMatrix unstable_frame;    // orthonormal columns, Re lambda > 0
  CMatrix stable_projector;  // along the unstable subspace
  double gap = 0.0;          // min |Re lambda|
  int sign_iterations = 0;
};

// Matrix sign function by the scaled Newton iteration
//   X <- (mu X + (mu X)^{-1}) / 2,  mu = |det X|^{-1/n}.
CMatrix matrix_sign(const CMatrix& c, int* iterations = nullptr);

// Stable/unstable invariant subspaces of c from its sign function. Throws
// Error(kDefectMode) when an eigenvalue lies within 1e-10 * max(1, |lambda|)
// of the imaginary axis.
SpectralSplit spectral_split(const CMatrix& c);

}  // namespace calderon::contour
