#include "calderon/harness/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "calderon/cauchy/b_blocks.hpp"
#include "calderon/cauchy/growth.hpp"
#include "calderon/contour/functional_calculus.hpp"
#include "calderon/error.hpp"
#include "calderon/grassmann/compare.hpp"
#include "calderon/grassmann/fredholm.hpp"
#include "calderon/grassmann/schatten.hpp"
#include "calderon/linalg.hpp"
#include "calderon/symbol/gallery.hpp"

namespace calderon::harness {

namespace {

using symbol::build_gallery;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// 1. R_+ algebra and agreement with the companion oracle.
void projector_algebra(Outcome& out) {
  struct Case {
    const char* name;
    int cutoff;
  };
  const Case cases[] = {{"dbar", 64},  {"twisted_dbar", 64}, {"laplace_mass", 64},
                        {"dirac2", 64}, {"dirac3", 24}};
  for (const auto& c : cases) {
    const auto spec = std::make_shared<const symbol::OperatorSpec>(build_gallery(c.name));
    double idem = 0.0;
    double sum = 0.0;
    double angle = 0.0;
    bool dims_ok = true;
    for (const Mode& m : symbol::modes_in_box(spec->boundary_dims(), c.cutoff)) {
      const auto sym = symbol::mode_symbol(spec, m);
      const CMatrix rp = cauchy::build_R(sym, cauchy::Side::kPlus).matrix;
      const CMatrix rm = cauchy::build_R(sym, cauchy::Side::kMinus).matrix;
      const double scale = std::max(1.0, max_abs(rp));
      idem = std::max(idem, max_abs(rp * rp - rp) / scale);
      sum = std::max(sum, max_abs(rp + rm - CMatrix::Identity(rp.rows(), rp.cols())) / scale);
      const auto oracle = cauchy::cauchy_frame_oracle(sym, cauchy::Side::kPlus);
      const auto rank = static_cast<Eigen::Index>(std::lround(rp.trace().real()));
      if (rank != oracle.dim()) {
        dims_ok = false;
        continue;
      }
      if (rank == 0) continue;
      const auto angles =
          linalg::principal_angles(linalg::orthonormal_basis(rp, rank), oracle.frame);
      angle = std::max(angle, angles.back());
    }
    out.detail << c.name << ": idem " << idem << " sum " << sum << " angle " << angle
               << "; ";
    out.require(idem <= 1e-8, std::string(c.name) + " idempotency");
    out.require(sum <= 1e-12, std::string(c.name) + " R+ + R- = I");
    out.require(dims_ok, std::string(c.name) + " rank matches oracle");
    out.require(angle < 1e-7, std::string(c.name) + " range matches oracle");
  }
}

// 2. laplace_mass(1) closed form.
void laplace_closed_form(Outcome& out) {
  const auto spec = std::make_shared<const symbol::OperatorSpec>(build_gallery("laplace_mass"));
  double err = 0.0;
  for (int m = -64; m <= 64; ++m) {
    const double s = std::sqrt(m * static_cast<double>(m) + 1.0);
    CMatrix expected(2, 2);
    expected << 0.5, -0.5 / s, -0.5 * s, 0.5;
    const CMatrix rp =
        cauchy::build_R(symbol::mode_symbol(spec, Mode{m}), cauchy::Side::kPlus).matrix;
    err = std::max(err, max_abs(rp - expected));
  }
  out.detail << "max error " << err;
  out.require(err <= 1e-10, "closed form to 1e-10");
}

// 3. ADN orders of R_+ entries.
void symbol_orders(Outcome& out) {
  const auto fit = cauchy::entry_growth_fit(build_gallery("laplace_mass"),
                                            cauchy::Side::kPlus, 16, 256);
  for (int q = 0; q < 2; ++q) {
    for (int j = 0; j < 2; ++j) {
      const auto& e = fit.slopes[q][j];
      out.require(e.has_value(), "block nonzero");
      if (!e) continue;
      out.detail << "(" << q << "," << j << ") " << e->slope << "; ";
      out.require(std::abs(e->slope - (q - j)) <= 0.1, "slope within 0.1 of q - j");
    }
  }
}

// 4. Hardy-space point.
void hardy_point(Outcome& out) {
  const auto pt = grassmann::krichever_reference(64);
  int wrong = 0;
  for (std::size_t i = 0; i < pt.modes.size(); ++i) {
    const bool nontrivial = pt.frames[i].cols() > 0;
    if (nontrivial != (pt.modes[i][0] <= 0)) ++wrong;
  }
  out.detail << "modes " << pt.modes.size() << " nontrivial " << pt.nontrivial_count()
             << " mismatches " << wrong << " defects " << pt.defects.size();
  out.require(wrong == 0 && pt.defects.empty(), "nontrivial exactly at m <= 0");
}

void schatten_case(Outcome& out, const char* name, const symbol::GalleryParams& pb,
                   int cutoff, double slope_lo, double slope_hi, bool check_sums,
                   bool check_bound) {
  const auto a = grassmann::assemble_point(build_gallery(name), cutoff);
  const auto b = grassmann::assemble_point(build_gallery(name, pb), cutoff);
  const auto rep = grassmann::compare_points(a, b);
  out.require(rep.agreement.kind == symbol::AgreementOrder::Kind::kOrder,
              "pair agrees to a finite order");
  const int q = std::max(rep.agreement.q, 0);
  const auto s = grassmann::schatten_fit(rep, a.n, q, {2.0});
  out.require(!s.finite_rank && s.fit.has_value(), "enough nonzero singular values");
  if (!s.fit) return;
  const auto& sums = s.partial_sums[0];
  const double growth = (sums.sums[3] - sums.sums[2]) / sums.sums[3];
  out.detail << "q " << q << " rank " << s.rank << " slope " << s.fit->slope << " +- "
             << s.fit->half_width << " target " << s.target << " window [" << s.window_lo
             << "," << s.window_hi << "] tail_excess " << s.tail_excess
             << " last-doubling growth of sum s^2 " << growth << "; ";
  out.require(s.fit->slope >= slope_lo && s.fit->slope <= slope_hi, "tail slope in range");
  if (check_sums) out.require(sums.converging, "sum s_j^2 grows < 1% over last doubling");
  if (check_bound) out.require(s.bound_holds, "bound s_j <= C j^target on the tail");
}

// 8. Indices.
void indices(Outcome& out) {
  const int cutoff = 16;
  auto twist = [&](double d) {
    return grassmann::assemble_point(build_gallery("twisted_dbar", {{"d", d}}), cutoff);
  };
  const auto dbar = grassmann::assemble_point(build_gallery("dbar"), cutoff);
  const auto t3 = twist(3.0);
  const auto main = grassmann::fredholm_index(t3, dbar);
  out.detail << "index(twist3, dbar) " << main.index << " tail_gap " << main.tail_gap << "; ";
  out.require(main.index == 3 && main.tail_safe, "index(twist3, dbar) = 3, tail-safe");

  const auto d3 = grassmann::assemble_point(
      symbol::selfadjoint_double(build_gallery("twisted_dbar")), cutoff);
  const auto d0 =
      grassmann::assemble_point(symbol::selfadjoint_double(build_gallery("dbar")), cutoff);
  const auto doubled = grassmann::fredholm_index(d3, d0);
  out.detail << "doubled " << doubled.index << "; ";
  out.require(doubled.index == 0 && doubled.tail_safe, "doubled index = 0");

  const std::vector<double> ds{0.0, 1.0, 3.0};
  std::vector<grassmann::GrassmannPoint> pts;
  for (double d : ds) pts.push_back(twist(d));
  long long idx[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) idx[i][j] = grassmann::fredholm_index(pts[i], pts[j]).index;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.require(idx[i][j] == -idx[j][i], "antisymmetry");
      for (int l = 0; l < 3; ++l) {
        out.require(idx[i][j] + idx[j][l] == idx[i][l], "additivity");
      }
    }
  }
  out.detail << "index(d0,d1) " << idx[0][1] << " index(d1,d3) " << idx[1][2]
             << " index(d0,d3) " << idx[0][2];
}

CMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = cdouble(g(rng), g(rng));
  }
  return a;
}

// Direction of the widest angular gap between eigenvalue arguments.
double free_cut_angle(const CMatrix& a) {
  Eigen::ComplexEigenSolver<CMatrix> es(a, false);
  std::vector<double> args;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    args.push_back(std::arg(es.eigenvalues()(i)));
  }
  std::sort(args.begin(), args.end());
  double best = args.front() + 2.0 * kPi - args.back();
  double angle = args.back() + 0.5 * best;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] - args[i - 1] > best) {
      best = args[i] - args[i - 1];
      angle = 0.5 * (args[i] + args[i - 1]);
    }
  }
  return angle;
}

// 9. Functional calculus.
void functional_calculus(Outcome& out) {
  std::mt19937_64 rng(20261015);
  double power_err = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_matrix(rng, 6);
    const double cut = free_cut_angle(a);
    const double scale = linalg::op_norm(a);
    power_err = std::max(
        power_err, max_abs(contour::matrix_power_interp(a, 0.0, cut) - CMatrix::Identity(6, 6)));
    power_err =
        std::max(power_err, max_abs(contour::matrix_power_interp(a, 1.0, cut) - a) / scale);
  }
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  CMatrix root = CMatrix::Zero(2, 2);
  root(0, 0) = 2.0;
  root(1, 1) = 3.0;
  const double sqrt_err = max_abs(contour::matrix_power_interp(d, 0.5, kPi) - root);
  out.detail << "t=0/1 error " << power_err << " sqrt error " << sqrt_err << "; ";
  out.require(power_err <= 1e-10, "t = 0 and t = 1");
  out.require(sqrt_err <= 1e-10, "diag(4, 9)^(1/2)");

  double idem = 0.0;
  double comm = 0.0;
  int rank_errors = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix m = random_matrix(rng, 6);
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    const auto& ev = es.eigenvalues();
    const cdouble center = ev(trial % 6);
    std::vector<double> dist;
    for (Eigen::Index i = 0; i < ev.size(); ++i) dist.push_back(std::abs(ev(i) - center));
    std::sort(dist.begin(), dist.end());
    std::size_t split = 0;
    for (std::size_t i = 1; i + 1 < dist.size(); ++i) {
      if (dist[i + 1] - dist[i] > dist[split + 1] - dist[split]) split = i;
    }
    const double radius = 0.5 * (dist[split] + dist[split + 1]);
    const CMatrix p = contour::riesz_projector(m, contour::Contour::circle(center, radius));
    const double pn = std::max(1.0, linalg::op_norm(p));
    idem = std::max(idem, linalg::op_norm(p * p - p) / (pn * pn));
    comm = std::max(comm, linalg::op_norm(p * m - m * p) / (pn * linalg::op_norm(m)));
    if (std::lround(p.trace().real()) != static_cast<long>(split + 1)) ++rank_errors;
  }
  out.detail << "riesz idempotency " << idem << " commutation " << comm << " rank errors "
             << rank_errors;
  out.require(idem <= 1e-9, "riesz idempotency");
  out.require(comm <= 1e-9, "riesz commutation");
  out.require(rank_errors == 0, "riesz rank = enclosed count");
}

// 10. Principal-symbol dependence of P_+.
void principal_dependence(Outcome& out) {
  const auto fit = cauchy::principal_dependence_fit(
      build_gallery("dirac2"), build_gallery("dirac2", {{"v", 0.3}}), 16, 256);
  out.detail << "slope " << fit.fit.slope << " C " << fit.constant;
  out.require(fit.fit.slope <= -0.9, "log-log slope <= -0.9");
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "projector algebra", 30.0, projector_algebra},
      {2, "laplace closed form", 5.0, laplace_closed_form},
      {3, "entry orders", 5.0, symbol_orders},
      {4, "hardy point", 1.0, hardy_point},
      {5, "schatten n=2 q=0", 60.0,
       [](Outcome& o) {
         schatten_case(o, "dirac2", {{"v", 0.3}}, 512, -1.15, -0.85, true, false);
       }},
      {6, "schatten n=2 q=1", 60.0,
       [](Outcome& o) {
         schatten_case(o, "laplace_mass", {{"mu", 2.0}}, 512, -2.2, -1.8, false, true);
       }},
      {7, "schatten n=3 q=0", 600.0,
       [](Outcome& o) {
         schatten_case(o, "dirac3", {{"v", 0.3}}, 48, -0.7, -0.3, false, false);
       }},
      {8, "fredholm indices", 10.0, indices},
      {9, "functional calculus", 10.0, functional_calculus},
      {10, "principal symbol dependence", 10.0, principal_dependence},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.time_limit = c.limit;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const Error& e) {
      o.pass = false;
      o.detail << "error " << to_string(e.code()) << ": " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > c.limit) {
      o.pass = false;
      o.detail << "; over time limit";
    }
    r.pass = o.pass;
    r.detail = o.detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace calderon::harness
