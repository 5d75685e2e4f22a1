#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "calderon/cauchy/companion.hpp"
#include "calderon/contour/contour.hpp"
#include "calderon/contour/functional_calculus.hpp"
#include "calderon/contour/roots.hpp"
#include "calderon/contour/spectral_split.hpp"
#include "calderon/error.hpp"
#include "calderon/symbol/gallery.hpp"
#include "generators.hpp"

namespace calderon::contour {
namespace {

using testing::Gen;
using testing::max_abs;

CMatrix scalar_fn(cdouble v) { return CMatrix::Constant(1, 1, v); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(Quadrature, CauchyExamples) {
  const auto c = Contour::circle(0.0, 1.0);
  auto q1 = contour_quadrature([](cdouble z) { return scalar_fn(1.0 / z); }, c);
  EXPECT_NEAR(std::abs(q1.value(0, 0) - 1.0), 0.0, 1e-14);
  auto q2 = contour_quadrature([](cdouble z) { return scalar_fn(1.0 / (z - 2.0)); }, c);
  EXPECT_NEAR(std::abs(q2.value(0, 0)), 0.0, 1e-12);
  auto q3 = contour_quadrature([](cdouble z) { return scalar_fn(1.0 / (z * z)); }, c);
  EXPECT_NEAR(std::abs(q3.value(0, 0)), 0.0, 1e-14);
  EXPECT_GE(q1.nodes, 32);  // at least one doubling
}

TEST(Quadrature, EllipseResidue) {
  // Residue of e^z / (z - 0.3i) is e^{0.3 i}.
  const auto c = Contour::ellipse({0.0, 0.2}, 3.0, 0.6);
  auto q = contour_quadrature(
      [](cdouble z) { return scalar_fn(std::exp(z) / (z - cdouble(0.0, 0.3))); }, c, 1e-12);
  EXPECT_NEAR(std::abs(q.value(0, 0) - std::exp(cdouble(0.0, 0.3))), 0.0, 1e-11);
}

TEST(Quadrature, NotConverged) {
  // A pole 1e-9 from the curve defeats 2^16 nodes.
  const auto c = Contour::circle(0.0, 1.0);
  EXPECT_EQ(code_of([&] {
              contour_quadrature([](cdouble z) { return scalar_fn(1.0 / (z - (1.0 + 1e-9))); },
                                 c);
            }),
            ErrorCode::kContourNotConverged);
}

TEST(Contour, GeometryHelpers) {
  const auto e = Contour::ellipse(0.0, 2.0, 1.0);
  EXPECT_TRUE(e.encloses({1.9, 0.0}));
  EXPECT_FALSE(e.encloses({0.0, 1.1}));
  EXPECT_NEAR(e.distance({0.0, 3.0}), 2.0, 1e-9);
  EXPECT_NEAR(e.distance({5.0, 0.0}), 3.0, 1e-9);
}

TEST(Contour, PlacementSeparates) {
  Gen g(23);
  for (int t = 0; t < 50; ++t) {
    std::vector<cdouble> in;
    std::vector<cdouble> out;
    const cdouble center = g.cnormal() * 5.0;
    for (int i = 0; i < g.integer(1, 4); ++i) in.push_back(center + 0.3 * g.cnormal());
    for (int i = 0; i < g.integer(0, 4); ++i) {
      out.push_back(center + std::polar(g.uniform(4.0, 8.0), g.uniform(0.0, 2.0 * kPi)));
    }
    const auto c = place_contour(in, out);
    for (auto z : in) EXPECT_TRUE(c.encloses(z));
    for (auto z : out) EXPECT_FALSE(c.encloses(z));
  }
}

TEST(Contour, PlacementUsesEllipseForFlatGroups) {
  // Two roots far apart on the real axis with excluded points just above and
  // below: no circle about their mean separates them.
  const std::vector<cdouble> in{{-4.0, 0.0}, {4.0, 0.0}};
  const std::vector<cdouble> out{{0.0, 1.0}, {0.0, -1.0}};
  const auto c = place_contour(in, out);
  EXPECT_EQ(c.shape, Contour::Shape::kEllipse);
  for (auto z : in) EXPECT_TRUE(c.encloses(z));
  for (auto z : out) EXPECT_FALSE(c.encloses(z));
}

TEST(Contour, PlacementFailsWhenInterleaved) {
  const std::vector<cdouble> in{{-1.0, 0.0}, {1.0, 0.0}};
  const std::vector<cdouble> out{{0.0, 0.0}};
  EXPECT_EQ(code_of([&] { place_contour(in, out); }), ErrorCode::kContourNotSeparating);
}

TEST(Roots, Examples) {
  const auto lap = symbol::build_gallery("laplace_mass");
  auto r0 = characteristic_roots(symbol::mode_symbol(lap, Mode{0}));
  ASSERT_EQ(r0.size(), 2u);
  int upper = 0;
  for (const auto& r : r0) {
    EXPECT_NEAR(std::abs(std::abs(r.xi) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(r.xi.real(), 0.0, 1e-12);
    upper += r.half_plane == HalfPlane::kUpper;
  }
  EXPECT_EQ(upper, 1);

  for (const auto& r : characteristic_roots(symbol::mode_symbol(lap, Mode{2}))) {
    EXPECT_NEAR(std::abs(r.xi.imag()) - std::sqrt(5.0), 0.0, 1e-12);
  }

  auto rd = characteristic_roots(symbol::mode_symbol(symbol::build_gallery("dbar"), Mode{0}));
  ASSERT_EQ(rd.size(), 1u);
  EXPECT_NEAR(std::abs(rd[0].xi - cdouble(0.0, 0.5)), 0.0, 1e-14);
  EXPECT_EQ(rd[0].half_plane, HalfPlane::kUpper);
}

TEST(Roots, DefectModeThrows) {
  const auto spec = symbol::build_gallery("dbar", {{"mu", 0.0}});
  const auto sym = symbol::mode_symbol(spec, Mode{0});
  EXPECT_EQ(code_of([&] { characteristic_roots(sym); }), ErrorCode::kDefectMode);
  RootOptions lenient;
  lenient.throw_on_real = false;
  auto roots = characteristic_roots(sym, lenient);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].half_plane, HalfPlane::kReal);
}

TEST(Roots, MultiplicityGrouping) {
  // (d_n + 1)^2 has the double root xi = i.
  symbol::OperatorSpec s("sq", 2, 1, 2);
  s.add_term(2, {0}, 1.0);
  s.add_term(1, {0}, 2.0);
  s.add_term(0, {0}, 1.0);
  auto roots = characteristic_roots(symbol::mode_symbol(s, Mode{0}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].multiplicity, 2);
}

TEST(Roots, DeterminantVanishesAtRoots) {
  for (const char* name : {"dbar", "twisted_dbar", "laplace_mass", "dirac2"}) {
    const auto spec = symbol::build_gallery(name);
    for (int m = -64; m <= 64; ++m) {
      const auto sym = symbol::mode_symbol(spec, Mode{m});
      const double bound = 1e-8 * std::pow(1.0 + std::abs(m), spec.k() * spec.r());
      for (const auto& r : characteristic_roots(sym)) {
        EXPECT_LT(std::abs(sym.at_xi(r.xi).determinant()), bound) << name << " " << m;
      }
    }
  }
}

TEST(Riesz, Examples) {
  Gen g(1);
  const CMatrix f = g.matrix(4, 2);
  const CMatrix h = g.matrix(2, 4);
  const CMatrix proj = f * (h * f).inverse() * h;  // oblique idempotent
  EXPECT_LE(max_abs(riesz_projector(proj, Contour::circle(1.0, 0.5)) - proj), 1e-12);

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 3.0;
  CMatrix e = CMatrix::Zero(2, 2);
  e(0, 0) = 1.0;
  EXPECT_LE(max_abs(riesz_projector(d, Contour::circle(1.0, 1.0)) - e), 1e-12);

  CMatrix jordan(2, 2);
  jordan << 5.0, 1.0, 0.0, 5.0;
  EXPECT_LE(max_abs(riesz_projector(jordan, Contour::circle(5.0, 1.0)) -
                    CMatrix::Identity(2, 2)),
            1e-12);
}

TEST(Riesz, FrozenOracle) {
  // Eigen-decomposition oracle: projector onto eigenvalues {1, 2}.
  CMatrix m(3, 3);
  m << 1, 2, 0, 0, 2, 1, 0, 0, 5;
  CMatrix expected(3, 3);
  expected << 1, 0, -0.16666666666666663, 0, 1, -0.3333333333333333, 0, 0, 0;
  EXPECT_LE(max_abs(riesz_projector(m, Contour::circle(0.0, 3.0)) - expected), 1e-12);
  EXPECT_LE(max_abs(riesz_projector(m, [](cdouble z) { return std::abs(z) < 3.0; }) - expected),
            1e-12);
}

TEST(Riesz, EigenvalueOnContour) {
  CMatrix d = CMatrix::Identity(2, 2);
  EXPECT_EQ(code_of([&] { riesz_projector(d, Contour::circle(0.0, 1.0)); }),
            ErrorCode::kEigenvalueOnContour);
}

TEST(Riesz, PartitionOfUnityProperty) {
  Gen g(99);
  for (int t = 0; t < 100; ++t) {
    const CMatrix m = g.matrix(6, 6);
    const double cut = g.uniform(-0.5, 0.5);
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    double margin = 1e300;
    for (Eigen::Index i = 0; i < 6; ++i) {
      margin = std::min(margin, std::abs(es.eigenvalues()(i).real() - cut));
    }
    if (margin < 0.05) continue;
    auto left = [cut](cdouble z) { return z.real() < cut; };
    auto right = [cut](cdouble z) { return z.real() >= cut; };
    CMatrix pl;
    CMatrix pr;
    try {
      pl = riesz_projector(m, left);
      pr = riesz_projector(m, right);
    } catch (const Error& e) {
      // Mean-centred ellipses cannot separate every half-plane split.
      ASSERT_EQ(e.code(), ErrorCode::kContourNotSeparating);
      continue;
    }
    const double s = std::max({1.0, max_abs(pl), max_abs(pr)});
    EXPECT_LE(max_abs(pl + pr - CMatrix::Identity(6, 6)), 1e-9 * s);
    EXPECT_LE(max_abs(pl * pl - pl), 1e-9 * s * s);
    EXPECT_LE(max_abs(pl * m - m * pl), 1e-9 * s * max_abs(m));
  }
}

TEST(MatrixPower, Examples) {
  Gen g(8);
  const CMatrix a = g.hpd(4, 3.0);
  EXPECT_LE(max_abs(matrix_power_interp(a, 0.0, kPi) - CMatrix::Identity(4, 4)), 1e-10);
  EXPECT_LE(max_abs(matrix_power_interp(a, 1.0, kPi) - a), 1e-10);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const CMatrix r = matrix_power_interp(d, 0.5, kPi);
  EXPECT_NEAR(std::abs(r(0, 0) - 2.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(r(1, 1) - 3.0), 0.0, 1e-10);
  EXPECT_LE(std::abs(r(0, 1)) + std::abs(r(1, 0)), 1e-10);
}

TEST(MatrixPower, FrozenNonNormalOracle) {
  // Values from an independent Schur-Pade fractional power.
  CMatrix a(3, 3);
  a << 4, 1, 0, 0, 9, 2, 1, 0, 16;
  CMatrix half(3, 3);
  half << 2.0008719495719665, 0.19993433767527027, -0.0095170447475463,  //
      -0.00951704474754688, 3.000543637948308, 0.2856641383799687,      //
      0.16662468105885417, -0.00475852237377135, 4.000368122278199;
  CMatrix p03(3, 3);
  p03 << 1.5162849530731912, 0.08344726658388998, -0.00523885551581165,  //
      -0.00523885551581217, 1.9335212859926394, 0.10402826697803057,     //
      0.06511127227854706, -0.00261942775790555, 2.297620220415747;
  EXPECT_LE(max_abs(matrix_power_interp(a, 0.5, kPi) - half), 1e-10);
  EXPECT_LE(max_abs(matrix_power_interp(a, 0.3, kPi) - p03), 1e-10);
}

TEST(MatrixPower, SemigroupProperty) {
  Gen g(31);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = g.hpd(5, 10.0);
    const double s = g.uniform(0.0, 0.5);
    const double u = g.uniform(0.0, 0.5);
    const CMatrix lhs = matrix_power_interp(a, s + u, kPi);
    const CMatrix rhs = matrix_power_interp(a, s, kPi) * matrix_power_interp(a, u, kPi);
    EXPECT_LE(max_abs(lhs - rhs), 1e-8 * max_abs(lhs));
  }
}

TEST(MatrixPower, BranchFollowsCut) {
  // Cut along the negative imaginary axis: arg(-4) = pi, so the root is 2i.
  CMatrix a = CMatrix::Constant(1, 1, -4.0);
  EXPECT_NEAR(std::abs(matrix_power_interp(a, 0.5, 1.5 * kPi)(0, 0) - cdouble(0.0, 2.0)), 0.0,
              1e-10);
  // With the cut at pi / 2 the argument is -pi.
  EXPECT_NEAR(std::abs(matrix_power_interp(a, 0.5, 0.5 * kPi)(0, 0) - cdouble(0.0, -2.0)), 0.0,
              1e-10);
}

TEST(MatrixPower, EigenvalueOnCut) {
  CMatrix a = CMatrix::Constant(1, 1, -4.0);
  EXPECT_EQ(code_of([&] { matrix_power_interp(a, 0.5, kPi); }), ErrorCode::kEigenvalueOnCut);
  CMatrix z = CMatrix::Zero(1, 1);
  EXPECT_EQ(code_of([&] { matrix_power_interp(z, 0.5, kPi); }), ErrorCode::kEigenvalueOnCut);
}

TEST(SpectralSplit, Examples) {
  CMatrix c = CMatrix::Zero(2, 2);
  c(0, 0) = -1.0;
  c(1, 1) = 1.0;
  auto s = spectral_split(c);
  ASSERT_EQ(s.stable_frame.cols(), 1);
  EXPECT_NEAR(std::abs(s.stable_frame(0, 0)), 1.0, 1e-14);
  CMatrix e = CMatrix::Zero(2, 2);
  e(0, 0) = 1.0;
  EXPECT_LE(max_abs(s.stable_projector - e), 1e-14);

  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  auto t = spectral_split(swap);
  ASSERT_EQ(t.stable_frame.cols(), 1);
  EXPECT_NEAR(std::abs(t.stable_frame(0, 0) + t.stable_frame(1, 0)), 0.0, 1e-14);

  CMatrix neg = CMatrix::Zero(2, 2);
  neg(0, 0) = -2.0;
  neg(1, 1) = -3.0;
  EXPECT_LE(max_abs(spectral_split(neg).stable_projector - CMatrix::Identity(2, 2)), 1e-14);
}

TEST(SpectralSplit, DefectMode) {
  CMatrix c = CMatrix::Zero(2, 2);
  c(0, 0) = cdouble(0.0, 1.0);
  c(1, 1) = -1.0;
  EXPECT_EQ(code_of([&] { spectral_split(c); }), ErrorCode::kDefectMode);
}

// Sign-function projector against a Riesz integral around the stable group.
TEST(SpectralSplit, MatchesRieszOnGallery) {
  for (const char* name : {"dbar", "twisted_dbar", "laplace_mass", "dirac2"}) {
    const auto spec = symbol::build_gallery(name);
    for (int m = -64; m <= 64; ++m) {
      const CMatrix c = cauchy::companion_matrix(symbol::mode_symbol(spec, Mode{m}));
      const auto s = spectral_split(c);
      const CMatrix r = riesz_projector(c, [](cdouble z) { return z.real() < 0.0; });
      EXPECT_LE(max_abs(s.stable_projector - r), 1e-8 * std::max(1.0, max_abs(r)))
          << name << " " << m;
    }
  }
}

}  // namespace
}  // namespace calderon::contour
