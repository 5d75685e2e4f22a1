#pragma once

#include <optional>
#include <vector>

#include "calderon/grassmann/compare.hpp"
#include "calderon/linalg.hpp"

namespace calderon::grassmann {

struct SchattenOptions {
  // Fit window as fractions of log N: j in [N^lo, N^hi]. The default is the
  // middle decade around sqrt(N).
  std::optional<double> window_lo;
  std::optional<double> window_hi;
  double zero_threshold = 1e-12;
  std::size_t min_nonzero = 50;
};

struct PartialSums {
  double p = 2.0;
  std::vector<std::size_t> checkpoints;  // N/8, N/4, N/2, N
  std::vector<double> sums;
  // Monotone and the last doubling adds less than 1%.
  bool converging = false;
};

struct SchattenReport {
  std::vector<double> s;  // nonzero singular values, descending
  bool finite_rank = false;
  std::size_t rank = 0;
  double target = 0.0;  // -(q+1)/(n-1)
  std::optional<linalg::LineFit> fit;
  std::size_t window_lo = 0;  // 1-based j
  std::size_t window_hi = 0;
  double constant = 0.0;      // max s_j j^gamma over the window
  double tail_excess = 0.0;   // max s_j j^gamma over j >= window_lo, / C
  bool bound_holds = false;
  std::vector<PartialSums> partial_sums;
};

// Bound slack: the tail may exceed the window constant by this factor.
inline constexpr double kSchattenBoundSlack = 2.0;

SchattenReport schatten_fit(const CompareReport& rep, int n, int q,
                            const std::vector<double>& p_list,
                            const SchattenOptions& options = {});

}  // namespace calderon::grassmann
