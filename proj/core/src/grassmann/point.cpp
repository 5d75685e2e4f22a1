#include "calderon/grassmann/point.hpp"

#include <algorithm>
#include <exception>

#include "calderon/cauchy/companion.hpp"
#include "calderon/cauchy/sobolev.hpp"
#include "calderon/error.hpp"
#include "calderon/parallel.hpp"
#include "calderon/symbol/gallery.hpp"

namespace calderon::grassmann {

namespace {

// Orthonormal basis of the columns of a with singular values above an
// absolute threshold (inputs are projections of orthonormal frames).
CMatrix range_basis(const CMatrix& a, double abs_tol = 1e-10) {
  if (a.cols() == 0) return CMatrix(a.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > abs_tol) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

std::ptrdiff_t GrassmannPoint::find(const Mode& m) const {
  const auto it = std::lower_bound(modes.begin(), modes.end(), m);
  if (it == modes.end() || *it != m) return -1;
  return it - modes.begin();
}

CMatrix GrassmannPoint::raw_frame(std::size_t i) const {
  const auto w = cauchy::sobolev_weights(modes[i], k, alpha, r);
  return w.sqrt_diagonal().cwiseInverse().cast<cdouble>().asDiagonal() *
         frames[i];
}

std::size_t GrassmannPoint::nontrivial_count() const {
  return static_cast<std::size_t>(std::count_if(
      frames.begin(), frames.end(), [](const CMatrix& f) { return f.cols() > 0; }));
}

GrassmannPoint assemble_point(const symbol::OperatorSpec& spec, int cutoff,
                              double alpha, const AssembleOptions& options) {
  spec.validate();
  if (cutoff < 0) throw Error(ErrorCode::kOutOfRange, "cutoff must be >= 0");
  if (!(alpha > 0.0)) throw Error(ErrorCode::kOutOfRange, "alpha must be > 0");

  GrassmannPoint pt;
  pt.spec = std::make_shared<const symbol::OperatorSpec>(spec);
  pt.label = spec.name();
  pt.n = spec.n();
  pt.r = spec.r();
  pt.k = spec.k();
  pt.cutoff = cutoff;
  pt.alpha = alpha;

  const auto all = symbol::modes_in_box(spec.boundary_dims(), cutoff);
  std::vector<CMatrix> frames(all.size());
  std::vector<char> defect(all.size(), 0);
  std::vector<std::exception_ptr> errors(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    const auto sym = symbol::mode_symbol(pt.spec, all[i]);
    try {
      const auto f = cauchy::cauchy_frame_oracle(sym, cauchy::Side::kPlus);
      const auto w = cauchy::sobolev_weights(all[i], pt.k, alpha, pt.r);
      frames[i] = cauchy::weighted_orthonormal_frame(f.frame, w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDefectMode) throw;
      defect[i] = 1;
      errors[i] = std::current_exception();
    }
  });

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (defect[i]) {
      if (options.strict) std::rethrow_exception(errors[i]);
      pt.defects.push_back(all[i]);
      continue;
    }
    pt.modes.push_back(all[i]);
    pt.frames.push_back(std::move(frames[i]));
  }
  return pt;
}

GrassmannPoint krichever_reference(int cutoff, double alpha) {
  if (cutoff < 1) throw Error(ErrorCode::kOutOfRange, "cutoff must be >= 1");
  auto pt = assemble_point(symbol::build_gallery("dbar", {}), cutoff, alpha);
  pt.label = "krichever";
  return pt;
}

GrassmannPoint chiral_point(const GrassmannPoint& full, ChiralSide side) {
  if (!full.spec || !full.spec->chiral_blocks) {
    throw Error(ErrorCode::kNoChiralStructure,
                "spec '" + full.label + "' declares no chiral blocks");
  }
  if (full.chiral) {
    throw Error(ErrorCode::kNoChiralStructure, "point is already chiral");
  }
  const auto& blocks = *full.spec->chiral_blocks;
  const auto& comps = side == ChiralSide::kLeft ? blocks.left : blocks.right;

  std::vector<Eigen::Index> rows;
  for (int j = 0; j < full.k; ++j) {
    for (int c : comps) rows.push_back(static_cast<Eigen::Index>(j * full.r + c));
  }

  GrassmannPoint pt = full;
  pt.r = static_cast<int>(comps.size());
  pt.chiral = side;
  pt.label = full.label + (side == ChiralSide::kLeft ? "[L]" : "[R]");
  for (auto& f : pt.frames) {
    CMatrix sel(static_cast<Eigen::Index>(rows.size()), f.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      sel.row(static_cast<Eigen::Index>(i)) = f.row(rows[i]);
    }
    f = range_basis(sel);
  }
  return pt;
}

GrassmannPoint chiral_point(const symbol::OperatorSpec& spec, ChiralSide side,
                            int cutoff, double alpha,
                            const AssembleOptions& options) {
  if (!spec.chiral_blocks) {
    throw Error(ErrorCode::kNoChiralStructure,
                "spec '" + spec.name() + "' declares no chiral blocks");
  }
  return chiral_point(assemble_point(spec, cutoff, alpha, options), side);
}

}  // namespace calderon::grassmann
