#include "calderon/grassmann/schatten.hpp"

#include <algorithm>
#include <cmath>

#include "calderon/error.hpp"

namespace calderon::grassmann {

namespace {

PartialSums partial_sums(const std::vector<double>& s, double p) {
  PartialSums out;
  out.p = p;
  const std::size_t n = s.size();
  for (std::size_t div : {8u, 4u, 2u, 1u}) {
    out.checkpoints.push_back(std::max<std::size_t>(1, n / div));
  }
  double acc = 0.0;
  std::size_t done = 0;
  for (std::size_t cp : out.checkpoints) {
    for (; done < std::min(cp, n); ++done) acc += std::pow(s[done], p);
    out.sums.push_back(acc);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < out.sums.size(); ++i) {
    monotone = monotone && out.sums[i] >= out.sums[i - 1];
  }
  const double last = out.sums.back();
  const double prev = out.sums[out.sums.size() - 2];
  out.converging = monotone && last > 0.0 && (last - prev) < 0.01 * last;
  return out;
}

}  // namespace

SchattenReport schatten_fit(const CompareReport& rep, int n, int q,
                            const std::vector<double>& p_list,
                            const SchattenOptions& options) {
  if (n < 2) throw Error(ErrorCode::kOutOfRange, "dimension must be >= 2");
  if (q < 0) throw Error(ErrorCode::kOutOfRange, "agreement order must be >= 0");
  for (double p : p_list) {
    if (!(p > 0.0)) throw Error(ErrorCode::kOutOfRange, "p must be positive");
  }

  SchattenReport out;
  const double gamma = static_cast<double>(q + 1) / (n - 1);
  out.target = -gamma;
  for (double v : rep.singular_values) {
    if (v > options.zero_threshold) out.s.push_back(v);
  }
  std::sort(out.s.begin(), out.s.end(), std::greater<>());
  out.rank = out.s.size();
  for (double p : p_list) out.partial_sums.push_back(partial_sums(out.s, p));

  if (out.rank < options.min_nonzero) {
    out.finite_rank = true;
    return out;
  }

  const double big_n = static_cast<double>(out.rank);
  const double lo_frac = options.window_lo.value_or(0.5 - 0.5 / std::log10(big_n));
  const double hi_frac = options.window_hi.value_or(0.5 + 0.5 / std::log10(big_n));
  if (!(lo_frac >= 0.0 && lo_frac < hi_frac && hi_frac <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "fit window fractions must satisfy 0 <= lo < hi <= 1");
  }
  out.window_lo = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(std::pow(big_n, lo_frac))));
  out.window_hi = std::min(
      out.rank, static_cast<std::size_t>(std::floor(std::pow(big_n, hi_frac))));
  if (out.window_hi < out.window_lo + 2) {
    throw Error(ErrorCode::kInsufficientData, "fit window holds fewer than 3 points");
  }

  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t j = out.window_lo; j <= out.window_hi; ++j) {
    const double s = out.s[j - 1];
    x.push_back(std::log(static_cast<double>(j)));
    y.push_back(std::log(s));
    out.constant = std::max(out.constant, s * std::pow(static_cast<double>(j), gamma));
  }
  out.fit = linalg::fit_line(x, y);

  double tail = 0.0;
  for (std::size_t j = out.window_lo; j <= out.rank; ++j) {
    tail = std::max(tail, out.s[j - 1] * std::pow(static_cast<double>(j), gamma));
  }
  out.tail_excess = tail / out.constant;
  out.bound_holds = out.tail_excess <= kSchattenBoundSlack;
  return out;
}

}  // namespace calderon::grassmann
