#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "calderon/cauchy/b_blocks.hpp"
#include "calderon/cauchy/block_operator.hpp"
#include "calderon/cauchy/companion.hpp"
#include "calderon/cauchy/growth.hpp"
#include "calderon/cauchy/projector_io.hpp"
#include "calderon/cauchy/sobolev.hpp"
#include "calderon/contour/spectral_split.hpp"
#include "calderon/error.hpp"
#include "calderon/linalg.hpp"
#include "calderon/symbol/gallery.hpp"
#include "generators.hpp"

namespace calderon::cauchy {
namespace {

using symbol::build_gallery;
using symbol::mode_symbol;
using testing::Gen;
using testing::max_abs;

CMatrix mat2(cdouble a, cdouble b, cdouble c, cdouble d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix scalar(cdouble v) { return CMatrix::Constant(1, 1, v); }

TEST(Companion, Examples) {
  EXPECT_LE(max_abs(companion_matrix(mode_symbol(build_gallery("laplace_mass"), Mode{0})) -
                    mat2(0, 1, 1, 0)),
            1e-15);
  const auto dbar = build_gallery("dbar");
  EXPECT_LE(max_abs(companion_matrix(mode_symbol(dbar, Mode{0})) - scalar(-0.5)), 1e-15);
  EXPECT_LE(max_abs(companion_matrix(mode_symbol(dbar, Mode{3})) - scalar(2.5)), 1e-15);
}

TEST(CauchyFrame, Examples) {
  const auto dbar = build_gallery("dbar");
  EXPECT_EQ(cauchy_frame_oracle(mode_symbol(dbar, Mode{0}), Side::kPlus).dim(), 1);
  EXPECT_EQ(cauchy_frame_oracle(mode_symbol(dbar, Mode{3}), Side::kPlus).dim(), 0);
  EXPECT_EQ(cauchy_frame_oracle(mode_symbol(dbar, Mode{3}), Side::kMinus).dim(), 1);

  const auto f = cauchy_frame_oracle(mode_symbol(build_gallery("laplace_mass"), Mode{2}),
                                     Side::kPlus);
  ASSERT_EQ(f.dim(), 1);
  const cdouble ratio = f.frame(1, 0) / f.frame(0, 0);
  EXPECT_NEAR(std::abs(ratio + std::sqrt(5.0)), 0.0, 1e-13);
}

TEST(CauchyFrame, DimensionsSumToAmbient) {
  for (const char* name : {"dbar", "laplace_mass", "dirac2"}) {
    const auto spec = build_gallery(name);
    for (int m = -20; m <= 20; ++m) {
      const auto sym = mode_symbol(spec, Mode{m});
      EXPECT_EQ(cauchy_frame_oracle(sym, Side::kPlus).dim() +
                    cauchy_frame_oracle(sym, Side::kMinus).dim(),
                spec.r() * spec.k());
    }
  }
}

TEST(CauchyFrame, DefectModeNamesTheMode) {
  const auto sym = mode_symbol(build_gallery("dbar", {{"mu", 0.0}}), Mode{0});
  try {
    cauchy_frame_oracle(sym, Side::kPlus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDefectMode);
    EXPECT_NE(std::string(e.what()).find("(0)"), std::string::npos);
  }
}

TEST(BlockOperator, Examples) {
  const CMatrix lap = build_A_operator(mode_symbol(build_gallery("laplace_mass"), Mode{0}));
  EXPECT_LE(max_abs(lap - mat2(0, -1, -1, 0)), 0.0);
  EXPECT_LE(max_abs(build_A_operator(mode_symbol(build_gallery("dbar"), Mode{5})) - scalar(1)),
            0.0);
  const CMatrix dirac = build_A_operator(mode_symbol(build_gallery("dirac2"), Mode{1}));
  EXPECT_LE(max_abs(dirac - mat2(0, 1, 1, 0)), 0.0);
}

TEST(BlockOperator, InverseExamples) {
  EXPECT_LE(max_abs(invert_A_operator(mat2(0, -1, -1, 0), 1) - mat2(0, -1, -1, 0)), 1e-15);
  EXPECT_LE(max_abs(invert_A_operator(scalar(1.0), 1) - scalar(1.0)), 0.0);
  const cdouble c{0.7, -1.3};
  EXPECT_LE(max_abs(invert_A_operator(mat2(c, 1, 1, 0), 1) - mat2(0, 1, 1, -c)), 1e-15);
}

TEST(BlockOperator, InverseProperty) {
  Gen g(41);
  for (int t = 0; t < 30; ++t) {
    const int r = g.integer(1, 3);
    const int k = g.integer(1, 3);
    symbol::ModeSymbol sym;
    sym.r = r;
    sym.k = k;
    for (int q = 0; q <= k; ++q) sym.coeffs.push_back(g.matrix(r, r));
    const CMatrix a = build_A_operator(sym);
    const CMatrix inv = invert_A_operator(a, r);
    const double cond = linalg::condition_number(a);
    EXPECT_LE(max_abs(a * inv - CMatrix::Identity(r * k, r * k)), 1e-12 * cond);
  }
}

TEST(BlockOperator, SingularLeadingBlock) {
  try {
    invert_A_operator(mat2(1, 0, 0, 0), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularBlock);
  }
  EXPECT_THROW(invert_A_operator(CMatrix::Identity(3, 3), 2), Error);
}

TEST(BBlocks, Examples) {
  const auto lap = b_blocks(mode_symbol(build_gallery("laplace_mass"), Mode{0}));
  EXPECT_LE(max_abs(lap.value() - mat2(0.5, -0.5, -0.5, 0.5)), 1e-13);
  EXPECT_TRUE(lap.residue_available);
  EXPECT_LE(lap.discrepancy, 1e-8);

  const auto dbar = build_gallery("dbar");
  EXPECT_LE(max_abs(b_blocks(mode_symbol(dbar, Mode{0})).value() - scalar(1.0)), 1e-13);
  const auto none = b_blocks(mode_symbol(dbar, Mode{3}));
  EXPECT_LE(max_abs(none.value()), 0.0);
  EXPECT_EQ(none.quadrature_nodes, 0);
}

// Oracle: residues of xi^{p+q} / (xi^2 + s^2) at xi = i s.
TEST(BBlocks, LaplaceClosedFormAllModes) {
  const auto spec = std::make_shared<const symbol::OperatorSpec>(build_gallery("laplace_mass"));
  for (int m = -64; m <= 64; ++m) {
    const double s = std::sqrt(m * static_cast<double>(m) + 1.0);
    const auto b = b_blocks(mode_symbol(spec, Mode{m}));
    const CMatrix expected = mat2(0.5 / s, -0.5, -0.5, 0.5 * s);
    EXPECT_LE(max_abs(b.residue - expected), 1e-12 * s);
    EXPECT_LE(max_abs(b.quadrature - expected), 1e-10 * s);
  }
}

TEST(BBlocks, RoutesAgreeOnRandomSpecs) {
  Gen g(77);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const auto spec = g.elliptic_spec(g.integer(1, 2), g.integer(1, 2));
    const int m = g.integer(-40, 40);
    try {
      const auto b = b_blocks(mode_symbol(spec, Mode{m}));
      if (!b.residue_available) continue;
      EXPECT_LE(b.discrepancy, 1e-8) << "trial " << t;
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kDefectMode);
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(BuildR, Examples) {
  const auto lap = build_gallery("laplace_mass");
  EXPECT_LE(max_abs(build_R(mode_symbol(lap, Mode{0}), Side::kPlus).matrix -
                    mat2(0.5, -0.5, -0.5, 0.5)),
            1e-13);
  const double r5 = std::sqrt(5.0);
  EXPECT_LE(max_abs(build_R(mode_symbol(lap, Mode{2}), Side::kPlus).matrix -
                    mat2(0.5, -0.5 / r5, -0.5 * r5, 0.5)),
            1e-13);
  const auto dbar = build_gallery("dbar");
  EXPECT_LE(max_abs(build_R(mode_symbol(dbar, Mode{3}), Side::kPlus).matrix), 0.0);
  EXPECT_LE(max_abs(build_R(mode_symbol(dbar, Mode{0}), Side::kPlus).matrix - scalar(1.0)),
            1e-13);
  const auto minus = build_R(mode_symbol(dbar, Mode{3}), Side::kMinus);
  EXPECT_EQ(minus.kind, BlockProjector::Kind::kRminus);
  EXPECT_LE(max_abs(minus.matrix - scalar(1.0)), 0.0);
}

// R_+ is the companion stable projector in Cauchy coordinates.
TEST(BuildR, EqualsCompanionProjector) {
  Gen g(5);
  std::vector<symbol::OperatorSpec> specs;
  for (const char* name : {"dbar", "twisted_dbar", "laplace_mass", "dirac2"}) {
    specs.push_back(build_gallery(name));
  }
  for (int t = 0; t < 10; ++t) specs.push_back(g.elliptic_spec(g.integer(1, 2), g.integer(1, 2)));
  for (const auto& spec : specs) {
    for (int m = -64; m <= 64; m += 3) {
      const auto sym = mode_symbol(spec, Mode{m});
      try {
        const CMatrix r = build_R(sym, Side::kPlus).matrix;
        const CMatrix pi = contour::spectral_split(companion_matrix(sym)).stable_projector;
        const double scale = std::max(1.0, max_abs(r));
        EXPECT_LE(max_abs(r - pi), 1e-8 * scale) << spec.name() << " " << m;
        EXPECT_LE(max_abs(r * r - r), 1e-8 * scale);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kDefectMode);
      }
    }
  }
}

TEST(BuildR, ThreeDimensionalModes) {
  const auto spec = std::make_shared<const symbol::OperatorSpec>(build_gallery("dirac3"));
  for (const Mode& m : symbol::modes_in_box(2, 6)) {
    const auto sym = mode_symbol(spec, m);
    const CMatrix r = build_R(sym, Side::kPlus).matrix;
    EXPECT_LE(max_abs(r * r - r), 1e-10);
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-10);
  }
}

// The stable and unstable spaces stay uniformly transversal in the weighted
// metric.
TEST(Transversality, GalleryLowerBound) {
  for (const char* name : {"laplace_mass", "dirac2"}) {
    const auto spec = std::make_shared<const symbol::OperatorSpec>(build_gallery(name));
    double smallest = kPi;
    for (int m = -64; m <= 64; ++m) {
      const auto sym = mode_symbol(spec, Mode{m});
      const auto w = sobolev_weights(Mode{m}, spec->k(), 0.5, spec->r());
      const CMatrix qp =
          weighted_orthonormal_frame(cauchy_frame_oracle(sym, Side::kPlus).frame, w);
      const CMatrix qm =
          weighted_orthonormal_frame(cauchy_frame_oracle(sym, Side::kMinus).frame, w);
      smallest = std::min(smallest, linalg::principal_angles(qp, qm).front());
    }
    EXPECT_GT(smallest, 0.5) << name;
  }
}

TEST(Sobolev, Examples) {
  auto w = sobolev_weights(Mode{0}, 1, 0.5);
  ASSERT_EQ(w.values.size(), 1u);
  EXPECT_DOUBLE_EQ(w.values[0], 1.0);
  w = sobolev_weights(Mode{2}, 2, 0.5);
  EXPECT_NEAR(w.values[0], std::pow(5.0, 1.5), 1e-12);
  EXPECT_NEAR(w.values[1], std::sqrt(5.0), 1e-14);
  EXPECT_DOUBLE_EQ(w.indices[0], 1.5);
  w = sobolev_weights(Mode{0}, 2, 1.0);
  EXPECT_DOUBLE_EQ(w.values[0], 1.0);
  EXPECT_DOUBLE_EQ(w.values[1], 1.0);
  EXPECT_THROW(sobolev_weights(Mode{0}, 2, 0.0), Error);
}

TEST(Sobolev, DiagonalLayoutAndMonotone) {
  const auto w = sobolev_weights(Mode{3, 4}, 3, 0.25, 2);
  const RVector d = w.diagonal();
  ASSERT_EQ(d.size(), 6);
  EXPECT_DOUBLE_EQ(d(0), d(1));
  EXPECT_DOUBLE_EQ(d(4), d(5));
  EXPECT_GT(d(0), d(2));
  EXPECT_GT(d(2), d(4));
  EXPECT_NEAR(d(4), std::pow(26.0, 0.25), 1e-12);
}

TEST(OrthogonalProjector, Examples) {
  const auto dbar = mode_symbol(build_gallery("dbar"), Mode{0});
  const auto p = orthogonal_projector(cauchy_frame_oracle(dbar, Side::kPlus),
                                      sobolev_weights(Mode{0}, 1, 0.5));
  EXPECT_EQ(p.kind, BlockProjector::Kind::kPplus);
  EXPECT_LE(max_abs(p.matrix - scalar(1.0)), 1e-14);

  const auto lap = build_gallery("laplace_mass");
  const auto p0 = orthogonal_projector(build_R(mode_symbol(lap, Mode{0}), Side::kPlus),
                                       sobolev_weights(Mode{0}, 2, 0.7));
  EXPECT_LE(max_abs(p0.matrix - mat2(0.5, -0.5, -0.5, 0.5)), 1e-13);

  // Gram formula F (F* W F)^{-1} F* W on span(1, -sqrt 5), evaluated
  // independently.
  const auto p2 = orthogonal_projector(build_R(mode_symbol(lap, Mode{2}), Side::kPlus),
                                       sobolev_weights(Mode{2}, 2, 0.5));
  EXPECT_LE(max_abs(p2.matrix - mat2(0.49999999999999994, -0.22360679774997896,
                                     -1.118033988749895, 0.5)),
            1e-13);
}

TEST(OrthogonalProjector, ZeroRange) {
  const auto sym = mode_symbol(build_gallery("dbar"), Mode{3});
  const auto p = orthogonal_projector(cauchy_frame_oracle(sym, Side::kPlus),
                                      sobolev_weights(Mode{3}, 1, 0.5));
  EXPECT_EQ(p.matrix.rows(), 1);
  EXPECT_LE(max_abs(p.matrix), 0.0);
}

TEST(OrthogonalProjector, WSelfAdjointProperty) {
  Gen g(8);
  for (int t = 0; t < 30; ++t) {
    const auto spec = g.elliptic_spec(g.integer(1, 2), g.integer(1, 2));
    const int m = g.integer(-64, 64);
    const auto sym = mode_symbol(spec, Mode{m});
    BlockProjector r;
    try {
      r = build_R(sym, Side::kPlus);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kDefectMode);
      continue;
    }
    const auto w = sobolev_weights(Mode{m}, spec.k(), g.uniform(0.1, 2.0), spec.r());
    const CMatrix p = orthogonal_projector(r, w).matrix;
    const CMatrix wd = w.diagonal().cast<cdouble>().asDiagonal();
    const double s = std::max(1.0, max_abs(wd));
    EXPECT_LE(max_abs(p * p - p), 1e-8 * std::max(1.0, max_abs(p)));
    EXPECT_LE(max_abs(wd * p - p.adjoint() * wd), 1e-8 * s * std::max(1.0, max_abs(p)));
    const double rs = std::max(1.0, max_abs(r.matrix));
    EXPECT_LE(max_abs(p * r.matrix - r.matrix), 1e-8 * rs * std::max(1.0, max_abs(p)));
    EXPECT_LE(max_abs(r.matrix * p - p), 1e-8 * rs * std::max(1.0, max_abs(p)));
  }
}

TEST(OrthogonalProjector, IllConditionedFrame) {
  // Weights 1e9 apart make the weighted Gram matrix of a mixed frame
  // ill-conditioned beyond 1e12.
  SobolevWeight w;
  w.k = 2;
  w.r = 1;
  w.m = Mode{0};
  w.values = {1e14, 1.0};
  w.indices = {1.0, 0.0};
  CMatrix f(2, 2);
  f << 1.0, 1.0, 0.0, 1e-3;
  try {
    weighted_orthonormal_frame(f, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllConditionedFrame);
  }
}

TEST(Growth, LaplaceOrders) {
  const auto fit = entry_growth_fit(build_gallery("laplace_mass"), Side::kPlus, 16, 256);
  const double expected[2][2] = {{0.0, -1.0}, {1.0, 0.0}};
  for (int q = 0; q < 2; ++q) {
    for (int j = 0; j < 2; ++j) {
      ASSERT_TRUE(fit.slopes[q][j].has_value());
      EXPECT_NEAR(fit.slopes[q][j]->slope, expected[q][j], 0.1);
    }
  }
}

TEST(Growth, DbarConstantAndVanishing) {
  const auto dbar = build_gallery("dbar");
  const auto neg = entry_growth_fit(dbar, Side::kPlus, -256, -16);
  ASSERT_TRUE(neg.slopes[0][0].has_value());
  EXPECT_NEAR(neg.slopes[0][0]->slope, 0.0, 1e-12);
  const auto pos = entry_growth_fit(dbar, Side::kPlus, 16, 256);
  EXPECT_FALSE(pos.slopes[0][0].has_value());
}

TEST(Growth, DiracSingleBlock) {
  const auto fit = entry_growth_fit(build_gallery("dirac2"), Side::kPlus, 16, 256);
  ASSERT_EQ(fit.slopes.size(), 1u);
  ASSERT_TRUE(fit.slopes[0][0].has_value());
  EXPECT_NEAR(fit.slopes[0][0]->slope, 0.0, 0.1);
}

TEST(Growth, RangeChecks) {
  const auto lap = build_gallery("laplace_mass");
  EXPECT_THROW(entry_growth_fit(lap, Side::kPlus, 16, 100), Error);
  EXPECT_THROW(entry_growth_fit(lap, Side::kPlus, -16, 256), Error);
  const auto modes = log_spaced_modes(16, 256, 24);
  EXPECT_EQ(modes.front(), 16);
  EXPECT_EQ(modes.back(), 256);
  EXPECT_TRUE(std::is_sorted(modes.begin(), modes.end()));
}

TEST(PrincipalDependence, DiracPairDecaysLikeInverseMode) {
  const auto fit = principal_dependence_fit(build_gallery("dirac2"),
                                            build_gallery("dirac2", {{"v", 0.3}}), 16, 256);
  EXPECT_LE(fit.fit.slope, -0.9);
  EXPECT_GT(fit.constant, 0.0);
}

TEST(ProjectorIo, RoundTrip) {
  const auto lap = build_gallery("laplace_mass");
  const auto w = sobolev_weights(Mode{2}, 2, 0.5);
  const auto p = orthogonal_projector(build_R(mode_symbol(lap, Mode{2}), Side::kPlus), w);
  const auto back = projector_from_json(projector_to_json(p));
  EXPECT_EQ(back.m, p.m);
  EXPECT_EQ(back.kind, p.kind);
  ASSERT_TRUE(back.weight.has_value());
  EXPECT_DOUBLE_EQ(back.weight->alpha, 0.5);
  EXPECT_EQ(back.matrix, p.matrix);

  const auto r = build_R(mode_symbol(lap, Mode{0}), Side::kMinus);
  const auto j = projector_to_json(r);
  EXPECT_TRUE(j["alpha"].is_null());
  EXPECT_EQ(j["kind"], "Rminus");
}

TEST(ProjectorIo, GrowthCsvLayout) {
  const auto fit = entry_growth_fit(build_gallery("dbar"), Side::kPlus, 16, 256);
  EXPECT_EQ(growth_csv(fit), "q,jj,slope\n0,0,NONE\n");
}

}  // namespace
}  // namespace calderon::cauchy
