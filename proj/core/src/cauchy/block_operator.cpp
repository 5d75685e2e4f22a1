#include "calderon/cauchy/block_operator.hpp"

#include "calderon/error.hpp"

namespace calderon::cauchy {

CMatrix build_A_operator(const symbol::ModeSymbol& sym) {
  const int r = sym.r;
  const int k = sym.k;
  CMatrix a = CMatrix::Zero(r * k, r * k);
  for (int p = 0; p < k; ++p) {
    for (int j = 0; p + j + 1 <= k; ++j) {
      a.block(p * r, j * r, r, r) = sym.A(p + j + 1);
    }
  }
  return a;
}

CMatrix invert_A_operator(const CMatrix& a_op, int r) {
  if (r <= 0 || a_op.rows() != a_op.cols() || a_op.rows() % r != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "block operator size is not a multiple of the block size");
  }
  const int k = static_cast<int>(a_op.rows() / r);
  auto block = [&](int p, int j) { return a_op.block(p * r, j * r, r, r); };

  // The anti-diagonal blocks must all equal A_k.
  const CMatrix lead = block(0, k - 1);
  Eigen::FullPivLU<CMatrix> lu(lead);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kSingularBlock,
                "leading coefficient block is singular (operator not elliptic)");
  }
  const CMatrix lead_inv = lu.inverse();

  // With J the block reversal, T = a_op J is block upper triangular with
  // T(p, l) = a_op(p, k-1-l) and diagonal A_k. Back-substitute T^{-1}, then
  // a_op^{-1} = J T^{-1}.
  auto t_block = [&](int p, int l) { return block(p, k - 1 - l); };
  CMatrix t_inv = CMatrix::Zero(r * k, r * k);
  for (int j = 0; j < k; ++j) {
    t_inv.block(j * r, j * r, r, r) = lead_inv;
    for (int i = j - 1; i >= 0; --i) {
      CMatrix acc = CMatrix::Zero(r, r);
      for (int l = i + 1; l <= j; ++l) {
        acc += t_block(i, l) * t_inv.block(l * r, j * r, r, r);
      }
      t_inv.block(i * r, j * r, r, r) = -lead_inv * acc;
    }
  }
  CMatrix inv(r * k, r * k);
  for (int p = 0; p < k; ++p) {
    inv.block(p * r, 0, r, r * k) = t_inv.block((k - 1 - p) * r, 0, r, r * k);
  }
  return inv;
}

}  // namespace calderon::cauchy
