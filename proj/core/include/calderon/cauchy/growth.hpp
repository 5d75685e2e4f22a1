#pragma once

#include <optional>
#include <vector>

#include "calderon/cauchy/companion.hpp"
#include "calderon/linalg.hpp"

namespace calderon::cauchy {

struct GrowthFit {
  std::vector<int> modes;  // sampled m along the first tangential axis
  // slopes[q][j]: fitted exponent of |(R_side(m))_{qj}|; empty when the block
  // vanishes on the whole range.
  std::vector<std::vector<std::optional<linalg::LineFit>>> slopes;
};

// Log-log fit of the r x r block norms of R_side(m) against |m| for modes
// m e_1 with m in [m_lo, m_hi]. The range must not contain 0 and must span at
// least a decade in |m| (Error(kOutOfRange) otherwise). `samples` modes are
// spaced logarithmically.
GrowthFit entry_growth_fit(const symbol::OperatorSpec& spec, Side side,
                           int m_lo, int m_hi, int samples = 24);

// Decay of ||P_+^A(m) - P_+^B(m)|| in the weighted operator norm along the
// first tangential axis, fitted in log-log coordinates.
struct PrincipalDependenceFit {
  std::vector<int> modes;
  std::vector<double> norms;
  linalg::LineFit fit;
  double constant = 0.0;  // max_m norm * |m|
};

PrincipalDependenceFit principal_dependence_fit(const symbol::OperatorSpec& a,
                                                const symbol::OperatorSpec& b,
                                                int m_lo, int m_hi,
                                                double alpha = 0.5,
                                                int samples = 24);

// Log-spaced distinct integers between lo and hi (same sign, nonzero).
std::vector<int> log_spaced_modes(int lo, int hi, int samples);

}  // namespace calderon::cauchy
