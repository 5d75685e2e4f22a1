#include "calderon/cauchy/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "calderon/cauchy/b_blocks.hpp"
#include "calderon/cauchy/sobolev.hpp"
#include "calderon/error.hpp"

namespace calderon::cauchy {

namespace {

void check_range(int lo, int hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) {
    throw Error(ErrorCode::kOutOfRange, "mode range must not contain 0");
  }
  const int a = std::min(std::abs(lo), std::abs(hi));
  const int b = std::max(std::abs(lo), std::abs(hi));
  if (b < 10 * a) {
    throw Error(ErrorCode::kOutOfRange,
                "mode range must span at least one decade in |m|");
  }
}

}  // namespace

std::vector<int> log_spaced_modes(int lo, int hi, int samples) {
  if (lo > hi) std::swap(lo, hi);
  const int sign = hi < 0 ? -1 : 1;
  const int a = std::min(std::abs(lo), std::abs(hi));
  const int b = std::max(std::abs(lo), std::abs(hi));
  samples = std::max(samples, 2);
  std::vector<int> out;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const int m = static_cast<int>(
        std::lround(std::exp(std::log(a) + t * (std::log(b) - std::log(a)))));
    if (out.empty() || out.back() != sign * m) out.push_back(sign * m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GrowthFit entry_growth_fit(const symbol::OperatorSpec& spec, Side side,
                           int m_lo, int m_hi, int samples) {
  check_range(m_lo, m_hi);
  const auto shared = std::make_shared<const symbol::OperatorSpec>(spec);
  const int r = spec.r();
  const int k = spec.k();
  const auto dims = static_cast<std::size_t>(spec.boundary_dims());

  GrowthFit out;
  out.modes = log_spaced_modes(m_lo, m_hi, samples);
  std::vector<std::vector<std::vector<double>>> norms(
      static_cast<std::size_t>(k),
      std::vector<std::vector<double>>(static_cast<std::size_t>(k)));
  std::vector<double> scale;
  for (int m : out.modes) {
    const auto sym = symbol::mode_symbol(shared, Mode::along_axis(dims, m));
    const CMatrix rm = build_R(sym, side).matrix;
    scale.push_back(std::max(1.0, linalg::op_norm(rm)));
    for (int q = 0; q < k; ++q) {
      for (int j = 0; j < k; ++j) {
        norms[q][j].push_back(linalg::op_norm(rm.block(q * r, j * r, r, r)));
      }
    }
  }

  out.slopes.assign(static_cast<std::size_t>(k),
                    std::vector<std::optional<linalg::LineFit>>(
                        static_cast<std::size_t>(k)));
  for (int q = 0; q < k; ++q) {
    for (int j = 0; j < k; ++j) {
      std::vector<double> x;
      std::vector<double> y;
      for (std::size_t i = 0; i < out.modes.size(); ++i) {
        const double v = norms[q][j][i];
        if (v <= 1e-13 * scale[i]) continue;
        x.push_back(std::log(std::abs(out.modes[i])));
        y.push_back(std::log(v));
      }
      if (x.size() >= 2) out.slopes[q][j] = linalg::fit_line(x, y);
    }
  }
  return out;
}

PrincipalDependenceFit principal_dependence_fit(const symbol::OperatorSpec& a,
                                                const symbol::OperatorSpec& b,
                                                int m_lo, int m_hi,
                                                double alpha, int samples) {
  if (a.n() != b.n() || a.r() != b.r() || a.k() != b.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "specs differ in dimension, rank or order");
  }
  check_range(m_lo, m_hi);
  const auto sa = std::make_shared<const symbol::OperatorSpec>(a);
  const auto sb = std::make_shared<const symbol::OperatorSpec>(b);
  const auto dims = static_cast<std::size_t>(a.boundary_dims());

  PrincipalDependenceFit out;
  out.modes = log_spaced_modes(m_lo, m_hi, samples);
  std::vector<double> x;
  std::vector<double> y;
  for (int m : out.modes) {
    const Mode mode = Mode::along_axis(dims, m);
    const auto w = sobolev_weights(mode, a.k(), alpha, a.r());
    const CMatrix pa =
        orthogonal_projector(build_R(symbol::mode_symbol(sa, mode), Side::kPlus), w)
            .matrix;
    const CMatrix pb =
        orthogonal_projector(build_R(symbol::mode_symbol(sb, mode), Side::kPlus), w)
            .matrix;
    const RVector s = w.sqrt_diagonal();
    const CMatrix d = s.cast<cdouble>().asDiagonal() * (pa - pb) *
                      s.cwiseInverse().cast<cdouble>().asDiagonal();
    const double norm = linalg::op_norm(d);
    out.norms.push_back(norm);
    out.constant = std::max(out.constant, norm * std::abs(m));
    if (norm > 0.0) {
      x.push_back(std::log(std::abs(m)));
      y.push_back(std::log(norm));
    }
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kDegenerateFit,
                "projector difference vanishes on the sampled range");
  }
  out.fit = linalg::fit_line(x, y);
  return out;
}

}  // namespace calderon::cauchy
