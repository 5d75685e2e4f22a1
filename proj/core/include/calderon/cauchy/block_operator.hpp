#pragma once

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::cauchy {

// Block Hankel matrix acting on Cauchy data: block (p, j) = A_{p+j+1}(m) for
// p + j + 1 <= k, zero otherwise. It maps the Cauchy data of u to the
// coefficients of delta^{(p)} in the jump of A(u 1_{x_n>0}).
CMatrix build_A_operator(const symbol::ModeSymbol& sym);

// Inverse of the anti-triangular block operator above, by block
// back-substitution: the result has A_k^{-1} on the block anti-diagonal and
// zeros above it. r is the block size. Throws Error(kSingularBlock) when the
// anti-diagonal block A_k is singular.
CMatrix invert_A_operator(const CMatrix& a_op, int r);

}  // namespace calderon::cauchy
