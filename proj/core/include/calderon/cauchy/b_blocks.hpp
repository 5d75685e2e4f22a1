#pragma once

#include "calderon/cauchy/companion.hpp"
#include "calderon/cauchy/sobolev.hpp"

namespace calderon::cauchy {

// The block matrix of B_qp = (i^{p+q} / 2 pi) \oint xi^{p+q} a(m, xi)^{-1} dxi
// over a contour around the upper half-plane roots, evaluated two ways.
struct BBlocks {
  CMatrix residue;     // eigen-decomposition of the companion matrix
  CMatrix quadrature;  // trapezoidal contour integral
  // False when the companion eigenvector matrix is too ill-conditioned to
  // trust the residue sum (defective or nearly defective roots); value()
  // then falls back to the quadrature.
  bool residue_available = true;
  // Max over blocks of |residue - quadrature| relative to the block scale.
  double discrepancy = 0.0;
  int quadrature_nodes = 0;

  const CMatrix& value() const {
    return residue_available ? residue : quadrature;
  }
};

// Throws Error(kDefectMode) on real roots, Error(kContourNotConverged) when a
// quadrature fails.
BBlocks b_blocks(const symbol::ModeSymbol& sym, double tol = 1e-13);

// R_+ = B A (the Calderon projector in Cauchy-data coordinates) and
// R_- = I - R_+.
BlockProjector build_R(const symbol::ModeSymbol& sym, Side side);

}  // namespace calderon::cauchy
