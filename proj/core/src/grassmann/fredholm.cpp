#include "calderon/grassmann/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "calderon/error.hpp"
#include "calderon/linalg.hpp"

namespace calderon::grassmann {

IndexReport fredholm_index(const GrassmannPoint& a, const GrassmannPoint& b,
                           const IndexOptions& options) {
  if (a.cutoff != b.cutoff || a.alpha != b.alpha) {
    throw Error(ErrorCode::kCutoffMismatch, "points differ in cutoff or alpha");
  }
  if (a.n != b.n || a.r != b.r || a.k != b.k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "points differ in dimension, rank or order");
  }
  if (!(options.tol > 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "index threshold must be positive");
  }

  IndexReport rep;
  rep.label_a = a.label;
  rep.label_b = b.label;
  rep.tol = options.tol;
  rep.tail_gap = kPi / 2.0;

  for (std::size_t i = 0; i < a.modes.size(); ++i) {
    const auto jj = b.find(a.modes[i]);
    if (jj < 0) continue;
    const CMatrix& qa = a.frames[i];
    const CMatrix& qb = b.frames[static_cast<std::size_t>(jj)];
    const Mode& m = a.modes[i];

    int ranked = 0;
    if (qa.cols() > 0 && qb.cols() > 0) {
      const RVector sv = linalg::singular_values(qb.adjoint() * qa);
      for (Eigen::Index t = 0; t < sv.size(); ++t) {
        const double s = sv(t);
        if (s >= options.tol && s <= 10.0 * options.tol) {
          std::ostringstream msg;
          msg << "cross-Gram singular value " << s << " at mode "
              << m.to_string() << " lies in the ambiguous decade [tol, 10 tol]";
          throw Error(ErrorCode::kThresholdAmbiguous, msg.str());
        }
        if (s >= options.tol) ++ranked;
      }
    }
    ModeIndex mi{m, static_cast<int>(qa.cols()), static_cast<int>(qb.cols()),
                 static_cast<int>(qa.cols()) - ranked,
                 static_cast<int>(qb.cols()) - ranked};
    rep.kernel += mi.kernel;
    rep.cokernel += mi.cokernel;
    if (mi.kernel != 0 || mi.cokernel != 0) rep.modes.push_back(mi);

    if (2 * m.norm_inf() > a.cutoff) {
      double gap = kPi / 2.0;
      if (qa.cols() != qb.cols()) {
        gap = 0.0;
      } else if (qa.cols() > 0) {
        const auto angles = linalg::principal_angles(qa, qb);
        gap = kPi / 2.0 - angles.back();
      }
      rep.tail_gap = std::min(rep.tail_gap, gap);
    }
  }
  rep.index = rep.kernel - rep.cokernel;
  rep.tail_safe = rep.tail_gap > options.tail_gap_min;
  if (!rep.tail_safe && !options.allow_unsafe_tail) {
    std::ostringstream msg;
    msg << "tail gap " << rep.tail_gap << " rad on the outer shell is below "
        << options.tail_gap_min << "; index not converged";
    throw Error(ErrorCode::kTailUnsafe, msg.str());
  }
  return rep;
}

}  // namespace calderon::grassmann
