#pragma once

#include <vector>

#include "calderon/grassmann/point.hpp"

namespace calderon::grassmann {

struct ModeComparison {
  Mode m;
  int dim_a = 0;
  int dim_b = 0;
  std::vector<double> angles;  // principal angles, ascending
  // Singular values of P_A(m) - P_B(m), descending, length rk.
  std::vector<double> difference_singular_values;
  double difference_norm = 0.0;
  // Singular values of (I - P_B) restricted to the span of A's frame.
  std::vector<double> q_singular_values;
  // |block SVD - merged sines| for this mode.
  double consistency_error = 0.0;
};

// Max difference norm over the shell lo < |m|_inf <= hi.
struct ShellNorm {
  int lo = 0;
  int hi = 0;
  double max_norm = 0.0;
};

struct CompareReport {
  std::string label_a;
  std::string label_b;
  int n = 2;
  int cutoff = 0;
  double alpha = 0.5;
  symbol::AgreementOrder agreement;
  std::vector<ModeComparison> modes;
  std::vector<Mode> skipped;  // defect modes of either point
  std::vector<double> singular_values;    // all modes merged, descending
  std::vector<double> q_singular_values;  // descending
  std::vector<ShellNorm> shells;          // outermost first
  double max_consistency_error = 0.0;
};

// Throws Error(kCutoffMismatch) when cutoff or alpha differ and
// Error(kDimensionMismatch) when n, r or k differ.
CompareReport compare_points(const GrassmannPoint& a, const GrassmannPoint& b);

}  // namespace calderon::grassmann
