#include "calderon/cauchy/b_blocks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "calderon/cauchy/block_operator.hpp"
#include "calderon/contour/contour.hpp"
#include "calderon/contour/roots.hpp"
#include "calderon/error.hpp"
#include "calderon/linalg.hpp"

namespace calderon::cauchy {

namespace {

constexpr double kEigenvectorCondLimit = 1e12;

// Fill the block matrix from the Hankel moments H_j, block (q, p) = H_{p+q}.
CMatrix assemble(const std::vector<CMatrix>& h, int r, int k) {
  CMatrix b(r * k, r * k);
  for (int q = 0; q < k; ++q) {
    for (int p = 0; p < k; ++p) {
      b.block(q * r, p * r, r, r) = h[static_cast<std::size_t>(p + q)];
    }
  }
  return b;
}

// H_j = X C^j Pi_s Y = sum over Re lambda < 0 of lambda^j (v)_0 (w)_{k-1} A_k^{-1}.
bool residue_moments(const symbol::ModeSymbol& sym, std::vector<CMatrix>& h) {
  const int r = sym.r;
  const int k = sym.k;
  const CMatrix c = companion_matrix(sym);
  Eigen::ComplexEigenSolver<CMatrix> es(c);
  const CMatrix& v = es.eigenvectors();
  if (linalg::condition_number(v) > kEigenvectorCondLimit) return false;
  const CMatrix w = v.partialPivLu().inverse();
  const CMatrix lead_inv = sym.A(k).partialPivLu().inverse();
  for (auto& hj : h) hj = CMatrix::Zero(r, r);
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    const cdouble lambda = es.eigenvalues()(i);
    if (lambda.real() >= 0.0) continue;
    const CMatrix outer =
        v.block(0, i, r, 1) * w.block(i, (k - 1) * r, 1, r) * lead_inv;
    cdouble power{1.0, 0.0};
    for (auto& hj : h) {
      hj += power * outer;
      power *= lambda;
    }
  }
  return true;
}

}  // namespace

BBlocks b_blocks(const symbol::ModeSymbol& sym, double tol) {
  const int r = sym.r;
  const int k = sym.k;
  const auto roots = contour::characteristic_roots(sym);  // throws on real roots

  std::vector<cdouble> upper;
  std::vector<cdouble> lower;
  for (const auto& root : roots) {
    auto& dst = root.half_plane == contour::HalfPlane::kUpper ? upper : lower;
    dst.push_back(root.xi);
  }

  BBlocks out;
  const std::size_t moments = static_cast<std::size_t>(2 * k - 1);
  std::vector<CMatrix> h_res(moments, CMatrix::Zero(r, r));
  std::vector<CMatrix> h_quad(moments, CMatrix::Zero(r, r));

  if (!upper.empty()) {
    out.residue_available = residue_moments(sym, h_res);

    const contour::Contour gamma = contour::place_contour(upper, lower);
    cdouble phase = kI;  // i^{j+1}
    for (std::size_t j = 0; j < moments; ++j) {
      const int power = static_cast<int>(j);
      auto f = [&](cdouble xi) -> CMatrix {
        return std::pow(xi, power) * sym.at_xi(xi).partialPivLu().inverse();
      };
      const auto q = contour::contour_quadrature(f, gamma, tol);
      h_quad[j] = phase * q.value;
      out.quadrature_nodes = std::max(out.quadrature_nodes, q.nodes);
      phase *= kI;
    }
  }

  out.residue = assemble(h_res, r, k);
  out.quadrature = assemble(h_quad, r, k);
  if (out.residue_available) {
    const double floor =
        std::max(1e-14 * out.residue.cwiseAbs().maxCoeff(), 1e-300);
    for (std::size_t j = 0; j < moments; ++j) {
      const double scale = std::max(h_res[j].cwiseAbs().maxCoeff(), floor);
      const double diff = (h_res[j] - h_quad[j]).cwiseAbs().maxCoeff();
      out.discrepancy = std::max(out.discrepancy, diff / scale);
    }
  }
  return out;
}

BlockProjector build_R(const symbol::ModeSymbol& sym, Side side) {
  const BBlocks b = b_blocks(sym);
  BlockProjector out;
  out.m = sym.m;
  const CMatrix r_plus = b.value() * build_A_operator(sym);
  if (side == Side::kPlus) {
    out.kind = BlockProjector::Kind::kRplus;
    out.matrix = r_plus;
  } else {
    out.kind = BlockProjector::Kind::kRminus;
    out.matrix = CMatrix::Identity(r_plus.rows(), r_plus.cols()) - r_plus;
  }
  return out;
}

}  // namespace calderon::cauchy
