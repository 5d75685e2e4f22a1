#include "calderon/cauchy/sobolev.hpp"

#include <cmath>

#include "calderon/error.hpp"
#include "calderon/linalg.hpp"

namespace calderon::cauchy {

namespace {
constexpr double kGramCondLimit = 1e12;
}

RVector SobolevWeight::diagonal() const {
  RVector d(r * k);
  for (int j = 0; j < k; ++j) {
    d.segment(j * r, r).setConstant(values[static_cast<std::size_t>(j)]);
  }
  return d;
}

RVector SobolevWeight::sqrt_diagonal() const {
  return diagonal().cwiseSqrt();
}

SobolevWeight sobolev_weights(const Mode& m, int k, double alpha, int r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kOutOfRange, "Sobolev alpha must be positive");
  }
  if (k < 1 || r < 1) {
    throw Error(ErrorCode::kOutOfRange, "order and rank must be positive");
  }
  SobolevWeight w;
  w.alpha = alpha;
  w.k = k;
  w.r = r;
  w.m = m;
  const double base = 1.0 + m.norm_squared();
  for (int j = 0; j < k; ++j) {
    const double s = k - 1 + alpha - j;
    w.indices.push_back(s);
    w.values.push_back(std::pow(base, s));
  }
  return w;
}

std::string_view to_string(BlockProjector::Kind kind) {
  switch (kind) {
    case BlockProjector::Kind::kRplus: return "Rplus";
    case BlockProjector::Kind::kRminus: return "Rminus";
    case BlockProjector::Kind::kPplus: return "Pplus";
    case BlockProjector::Kind::kPminus: return "Pminus";
  }
  return "unknown";
}

CMatrix weighted_orthonormal_frame(const CMatrix& f, const SobolevWeight& w) {
  if (f.rows() != w.r * w.k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "frame height does not match the weight size");
  }
  if (f.cols() == 0) return CMatrix(f.rows(), 0);
  // Euclidean orthonormalization first so the condition check measures the
  // weighting, not the scaling of the input columns.
  const CMatrix q0 = linalg::orthonormal_basis(f, f.cols());
  const CMatrix wf = w.sqrt_diagonal().cast<cdouble>().asDiagonal() * q0;
  const double cond = linalg::condition_number(wf);
  if (!(cond * cond <= kGramCondLimit)) {
    throw Error(ErrorCode::kIllConditionedFrame,
                "weighted Gram matrix at mode " + w.m.to_string() +
                    " has condition number above 1e12");
  }
  return linalg::orthonormal_basis(wf, f.cols());
}

namespace {

BlockProjector from_frame(const CMatrix& f, const SobolevWeight& w, Side side,
                          const Mode& m) {
  BlockProjector out;
  out.m = m;
  out.kind = side == Side::kPlus ? BlockProjector::Kind::kPplus
                                 : BlockProjector::Kind::kPminus;
  out.weight = w;
  const Eigen::Index n = f.rows();
  if (f.cols() == 0) {
    out.matrix = CMatrix::Zero(n, n);
    return out;
  }
  const CMatrix q = weighted_orthonormal_frame(f, w);
  const RVector s = w.sqrt_diagonal();
  const RVector s_inv = s.cwiseInverse();
  out.matrix = s_inv.cast<cdouble>().asDiagonal() * (q * q.adjoint()) *
               s.cast<cdouble>().asDiagonal();
  return out;
}

}  // namespace

BlockProjector orthogonal_projector(const CauchyFrame& frame,
                                    const SobolevWeight& w) {
  return from_frame(frame.frame, w, frame.side, frame.m);
}

BlockProjector orthogonal_projector(const BlockProjector& r,
                                    const SobolevWeight& w) {
  Side side = Side::kPlus;
  if (r.kind == BlockProjector::Kind::kRminus ||
      r.kind == BlockProjector::Kind::kPminus) {
    side = Side::kMinus;
  }
  // An idempotent has rank equal to its trace.
  const auto rank = static_cast<Eigen::Index>(std::lround(r.matrix.trace().real()));
  if (rank <= 0) return from_frame(CMatrix(r.matrix.rows(), 0), w, side, r.m);
  return from_frame(linalg::orthonormal_basis(r.matrix, rank), w, side, r.m);
}

}  // namespace calderon::cauchy
