#include "calderon/grassmann/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "calderon/error.hpp"
#include "calderon/linalg.hpp"
#include "calderon/parallel.hpp"

namespace calderon::grassmann {

namespace {

std::vector<double> to_vector(const RVector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

ModeComparison compare_mode(const Mode& m, const CMatrix& qa, const CMatrix& qb) {
  const Eigen::Index n = qa.rows();
  ModeComparison c;
  c.m = m;
  c.dim_a = static_cast<int>(qa.cols());
  c.dim_b = static_cast<int>(qb.cols());
  c.angles = linalg::principal_angles(qa, qb);

  const CMatrix pa = qa * qa.adjoint();
  const CMatrix pb = qb * qb.adjoint();
  c.difference_singular_values = to_vector(linalg::singular_values(pa - pb));
  c.difference_norm =
      c.difference_singular_values.empty() ? 0.0 : c.difference_singular_values[0];
  if (qa.cols() > 0) {
    c.q_singular_values = to_vector(
        linalg::singular_values((CMatrix::Identity(n, n) - pb) * qa));
  }

  // Nonzero spectrum of a projector difference: +-sin(theta) per angle and
  // +-1 for each surplus dimension.
  std::vector<double> expected;
  for (double t : c.angles) {
    expected.push_back(std::sin(t));
    expected.push_back(std::sin(t));
  }
  for (int i = 0; i < std::abs(c.dim_a - c.dim_b); ++i) expected.push_back(1.0);
  expected.resize(std::max(expected.size(), static_cast<std::size_t>(n)), 0.0);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t i = 0; i < c.difference_singular_values.size(); ++i) {
    c.consistency_error = std::max(
        c.consistency_error, std::abs(c.difference_singular_values[i] - expected[i]));
  }
  for (std::size_t i = c.difference_singular_values.size(); i < expected.size(); ++i) {
    c.consistency_error = std::max(c.consistency_error, expected[i]);
  }
  return c;
}

}  // namespace

CompareReport compare_points(const GrassmannPoint& a, const GrassmannPoint& b) {
  if (a.cutoff != b.cutoff) {
    throw Error(ErrorCode::kCutoffMismatch,
                "cutoffs differ (" + std::to_string(a.cutoff) + " vs " +
                    std::to_string(b.cutoff) + ")");
  }
  if (a.alpha != b.alpha) {
    throw Error(ErrorCode::kCutoffMismatch, "Sobolev alpha differs");
  }
  if (a.n != b.n || a.r != b.r || a.k != b.k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "points differ in dimension, rank or order");
  }

  CompareReport rep;
  rep.label_a = a.label;
  rep.label_b = b.label;
  rep.n = a.n;
  rep.cutoff = a.cutoff;
  rep.alpha = a.alpha;
  if (a.spec && b.spec && a.spec->r() == b.spec->r() && !a.chiral && !b.chiral) {
    rep.agreement = symbol::agree_up_to_order(*a.spec, *b.spec);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Mode> modes;
  for (std::size_t i = 0; i < a.modes.size(); ++i) {
    const auto j = b.find(a.modes[i]);
    if (j < 0) {
      rep.skipped.push_back(a.modes[i]);
    } else {
      pairs.emplace_back(i, static_cast<std::size_t>(j));
    }
  }
  for (const Mode& m : b.modes) {
    if (a.find(m) < 0) rep.skipped.push_back(m);
  }
  for (const Mode& m : a.defects) rep.skipped.push_back(m);
  for (const Mode& m : b.defects) rep.skipped.push_back(m);
  std::sort(rep.skipped.begin(), rep.skipped.end());
  rep.skipped.erase(std::unique(rep.skipped.begin(), rep.skipped.end()),
                    rep.skipped.end());

  rep.modes.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t t) {
    const auto [i, j] = pairs[t];
    rep.modes[t] = compare_mode(a.modes[i], a.frames[i], b.frames[j]);
  });

  for (const auto& c : rep.modes) {
    rep.singular_values.insert(rep.singular_values.end(),
                               c.difference_singular_values.begin(),
                               c.difference_singular_values.end());
    rep.q_singular_values.insert(rep.q_singular_values.end(),
                                 c.q_singular_values.begin(),
                                 c.q_singular_values.end());
    rep.max_consistency_error =
        std::max(rep.max_consistency_error, c.consistency_error);
  }
  std::sort(rep.singular_values.begin(), rep.singular_values.end(), std::greater<>());
  std::sort(rep.q_singular_values.begin(), rep.q_singular_values.end(),
            std::greater<>());

  for (int hi = rep.cutoff; hi >= 1; hi /= 2) {
    ShellNorm shell{hi / 2, hi, 0.0};
    for (const auto& c : rep.modes) {
      const int r = c.m.norm_inf();
      if (r > shell.lo && r <= shell.hi) {
        shell.max_norm = std::max(shell.max_norm, c.difference_norm);
      }
    }
    rep.shells.push_back(shell);
  }
  return rep;
}

}  // namespace calderon::grassmann
