#pragma once

#include <string_view>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::cauchy {

enum class Side { kPlus, kMinus };

std::string_view to_string(Side side);
Side side_from_string(std::string_view s);

// Block companion matrix of the mode ODE sum_q A_q(m) d_n^q u = 0 acting on
// Cauchy data (u, d_n u, ..., d_n^{k-1} u):
//   d_n (u, ..., u^{(k-1)}) = C (u, ..., u^{(k-1)}).
CMatrix companion_matrix(const symbol::ModeSymbol& sym);

struct CauchyFrame {
  Mode m;
  Side side = Side::kPlus;
  bool weighted_orthonormal = false;
  CMatrix frame;  // rk x d, columns span L_side(m)

  Eigen::Index dim() const { return frame.cols(); }
};

// Frame of L_+(m) (data of solutions decaying as x_n -> +inf: the stable
// subspace of the companion matrix) or L_-(m) (the unstable subspace).
CauchyFrame cauchy_frame_oracle(const symbol::ModeSymbol& sym, Side side);

}  // namespace calderon::cauchy
