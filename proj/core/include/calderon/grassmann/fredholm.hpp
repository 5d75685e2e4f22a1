#pragma once

#include <vector>

#include "calderon/grassmann/point.hpp"

namespace calderon::grassmann {

struct ModeIndex {
  Mode m;
  int dim_a = 0;
  int dim_b = 0;
  int kernel = 0;
  int cokernel = 0;
};

struct IndexReport {
  std::string label_a;
  std::string label_b;
  double tol = 1e-6;
  std::vector<ModeIndex> modes;  // modes with nonzero kernel or cokernel
  long long kernel = 0;
  long long cokernel = 0;
  long long index = 0;
  // min over M/2 < |m|_inf <= M of pi/2 minus the largest principal angle
  // (0 when the dimensions differ).
  double tail_gap = 0.0;
  bool tail_safe = false;
};

struct IndexOptions {
  double tol = 1e-6;
  bool allow_unsafe_tail = false;
  double tail_gap_min = 0.5;
};

// Index of the projection onto H_B restricted to H_A, mode by mode from the
// singular values of the cross-Gram Q_B^* Q_A. Throws
// Error(kThresholdAmbiguous) when a singular value falls in [tol, 10 tol],
// Error(kTailUnsafe) when the tail gap is below the minimum (unless allowed).
IndexReport fredholm_index(const GrassmannPoint& a, const GrassmannPoint& b,
                           const IndexOptions& options = {});

}  // namespace calderon::grassmann
