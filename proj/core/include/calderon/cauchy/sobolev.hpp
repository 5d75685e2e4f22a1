#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "calderon/cauchy/companion.hpp"

namespace calderon::cauchy {

// Weights of H^{k-1+alpha} + ... + H^alpha at one mode:
// w_j(m) = (1 + |m|^2)^{k-1+alpha-j}.
struct SobolevWeight {
  double alpha = 0.5;
  int k = 1;
  int r = 1;
  Mode m;
  std::vector<double> indices;  // s_j
  std::vector<double> values;   // w_j(m)

  // diag(w_j) (x) I_r as a vector of length r*k.
  RVector diagonal() const;
  RVector sqrt_diagonal() const;
};

SobolevWeight sobolev_weights(const Mode& m, int k, double alpha, int r = 1);

struct BlockProjector {
  enum class Kind { kRplus, kRminus, kPplus, kPminus };
  Mode m;
  Kind kind = Kind::kRplus;
  CMatrix matrix;
  std::optional<SobolevWeight> weight;
};

std::string_view to_string(BlockProjector::Kind kind);

// W-orthogonal projector F (F* W F)^{-1} F* W onto the span of the frame,
// evaluated as W^{-1/2} Q Q* W^{1/2} with Q an orthonormal basis of
// W^{1/2} F. The zero range gives the zero matrix. Throws
// Error(kIllConditionedFrame) when cond(F* W F) > 1e12.
BlockProjector orthogonal_projector(const CauchyFrame& frame,
                                    const SobolevWeight& w);
// Same for the range of an R-kind projector.
BlockProjector orthogonal_projector(const BlockProjector& r,
                                    const SobolevWeight& w);

// Frame of the range of f in weighted coordinates, i.e. Q = orth(W^{1/2} F).
CMatrix weighted_orthonormal_frame(const CMatrix& f, const SobolevWeight& w);

}  // namespace calderon::cauchy
