#include "calderon/harness/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "calderon/cauchy/b_blocks.hpp"
#include "calderon/cauchy/growth.hpp"
#include "calderon/cauchy/projector_io.hpp"
#include "calderon/error.hpp"
#include "calderon/grassmann/report_io.hpp"
#include "calderon/harness/acceptance.hpp"
#include "calderon/symbol/ellipticity.hpp"
#include "calderon/symbol/spec_io.hpp"

namespace calderon::harness {

using ojson = nlohmann::ordered_json;

namespace {

class Timer {
 public:
  Timer(ReportBundle& bundle, std::string phase)
      : bundle_(bundle), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    bundle_.timing.emplace_back(
        phase_,
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  ReportBundle& bundle_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

symbol::OperatorSpec load(const std::optional<std::filesystem::path>& path,
                          const char* flag) {
  if (!path) {
    throw Error(ErrorCode::kParseError, std::string("missing required flag ") + flag);
  }
  return symbol::read_spec_file(*path);
}

ojson config_echo(const ExperimentConfig& c) {
  ojson out;
  out["subcommand"] = c.subcommand;
  auto path = [](const std::optional<std::filesystem::path>& p) -> ojson {
    return p ? ojson(p->filename().string()) : ojson(nullptr);
  };
  out["spec"] = path(c.spec);
  out["spec_a"] = path(c.spec_a);
  out["spec_b"] = path(c.spec_b);
  out["cutoff"] = c.cutoff;
  out["alpha"] = c.alpha;
  out["tol"] = c.tol;
  out["p"] = c.p_list;
  out["format"] = c.format == Format::kJson ? "json" : "csv";
  if (c.subcommand == "projector") {
    out["mode"] = c.mode;
    out["side"] = std::string(cauchy::to_string(c.side));
    out["kind"] = std::string(1, c.kind);
  }
  if (c.subcommand == "growth") out["mode_range"] = {c.mode_lo, c.mode_hi};
  if (c.q) out["q"] = *c.q;
  if (c.subcommand == "index") out["allow_unsafe_tail"] = c.allow_unsafe_tail;
  if (c.subcommand == "acceptance") out["criteria"] = c.criteria;
  return out;
}

std::string nonzero_csv(const std::vector<double>& s) {
  std::ostringstream os;
  os.precision(17);
  os << "j,s_j,bound\n";
  std::size_t j = 0;
  for (double v : s) {
    if (v > 1e-12) os << ++j << ',' << v << ",\n";
  }
  return os.str();
}

void run_ellipticity(const ExperimentConfig& c, ReportBundle& b) {
  const auto spec = load(c.spec, "--spec");
  Timer t(b, "ellipticity");
  const auto rep = symbol::check_ellipticity(spec, c.samples, c.cutoff);
  ojson e;
  e["spec"] = spec.name();
  e["samples"] = rep.samples;
  e["min_abs_det"] = rep.min_abs_det;
  e["pass"] = rep.pass;
  e["defect_cutoff"] = rep.defect_cutoff;
  ojson defects = ojson::array();
  for (const Mode& m : rep.defect_modes) defects.push_back(m.components());
  e["defect_modes"] = std::move(defects);
  b.reports["ellipticity"] = std::move(e);
  try {
    const auto ray = symbol::find_agmon_ray(spec, 360);
    b.reports["agmon_ray"] = {{"theta", ray.theta},
                              {"epsilon", ray.epsilon},
                              {"min_abs_eigenvalue", ray.min_abs_eigenvalue},
                              {"max_abs_eigenvalue", ray.max_abs_eigenvalue}};
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kNoFreeRay) throw;
    b.reports["agmon_ray"] = error_record(err);
  }
  b.pass = rep.pass && rep.defect_modes.empty();
}

void run_projector(const ExperimentConfig& c, ReportBundle& b) {
  const auto spec = std::make_shared<const symbol::OperatorSpec>(load(c.spec, "--spec"));
  if (c.mode.size() != static_cast<std::size_t>(spec->boundary_dims())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "--mode needs " + std::to_string(spec->boundary_dims()) + " component(s)");
  }
  Timer t(b, "projector");
  const Mode m(c.mode);
  const auto sym = symbol::mode_symbol(spec, m);
  const auto bb = cauchy::b_blocks(sym);
  auto p = cauchy::build_R(sym, c.side);
  if (c.kind == 'P') {
    p = cauchy::orthogonal_projector(p, cauchy::sobolev_weights(m, spec->k(), c.alpha, spec->r()));
  }
  const double idem = (p.matrix * p.matrix - p.matrix).cwiseAbs().maxCoeff();
  b.reports["projector"] = cauchy::projector_to_json(p);
  b.reports["checks"] = {{"idempotency_error", idem},
                         {"b_route_discrepancy", bb.discrepancy},
                         {"residue_route", bb.residue_available}};
  b.pass = idem <= 1e-8 && (!bb.residue_available || bb.discrepancy <= 1e-8);
}

std::pair<grassmann::GrassmannPoint, grassmann::GrassmannPoint> load_points(
    const ExperimentConfig& c, ReportBundle& b) {
  const auto sa = load(c.spec_a, "--spec-a");
  const auto sb = load(c.spec_b, "--spec-b");
  Timer t(b, "assemble");
  return {grassmann::assemble_point(sa, c.cutoff, c.alpha),
          grassmann::assemble_point(sb, c.cutoff, c.alpha)};
}

void run_compare(const ExperimentConfig& c, ReportBundle& b) {
  const auto [pa, pb] = load_points(c, b);
  Timer t(b, "compare");
  const auto rep = grassmann::compare_points(pa, pb);
  b.reports["compare"] = grassmann::compare_to_json(rep);
  b.csv = nonzero_csv(rep.singular_values);
  b.pass = rep.max_consistency_error <= 1e-9;
}

void run_schatten(const ExperimentConfig& c, ReportBundle& b) {
  const auto [pa, pb] = load_points(c, b);
  Timer t(b, "schatten");
  const auto rep = grassmann::compare_points(pa, pb);
  int q = 0;
  if (c.q) {
    q = *c.q;
  } else if (rep.agreement.kind == symbol::AgreementOrder::Kind::kOrder) {
    q = rep.agreement.q;
  } else if (rep.agreement.none()) {
    throw Error(ErrorCode::kOutOfRange,
                "principal symbols differ (no agreement order); pass --q to force a fit");
  }
  const auto s = grassmann::schatten_fit(rep, pa.n, q, c.p_list);
  b.reports["agreement"] = rep.agreement.to_string();
  b.reports["schatten"] = grassmann::schatten_to_json(s);
  b.csv = grassmann::schatten_csv(s);
  b.pass = s.finite_rank || s.bound_holds;
}

void run_index(const ExperimentConfig& c, ReportBundle& b) {
  const auto [pa, pb] = load_points(c, b);
  Timer t(b, "index");
  grassmann::IndexOptions opt;
  opt.tol = c.tol;
  opt.allow_unsafe_tail = c.allow_unsafe_tail;
  const auto rep = grassmann::fredholm_index(pa, pb, opt);
  b.reports["index"] = grassmann::index_to_json(rep);
  b.pass = rep.tail_safe;
}

void run_growth(const ExperimentConfig& c, ReportBundle& b) {
  const auto spec = load(c.spec, "--spec");
  Timer t(b, "growth");
  const auto fit = cauchy::entry_growth_fit(spec, c.side, c.mode_lo, c.mode_hi);
  b.reports["growth"] = cauchy::growth_to_json(fit);
  b.csv = cauchy::growth_csv(fit);
  bool ok = true;
  for (std::size_t q = 0; q < fit.slopes.size(); ++q) {
    for (std::size_t j = 0; j < fit.slopes[q].size(); ++j) {
      const auto& e = fit.slopes[q][j];
      if (e) {
        ok = ok && std::abs(e->slope - (static_cast<double>(q) - static_cast<double>(j))) <= 0.1;
      }
    }
  }
  b.pass = ok;
}

void run_acceptance_cmd(const ExperimentConfig& c, ReportBundle& b) {
  Timer t(b, "acceptance");
  const auto results = run_acceptance(c.criteria);
  ojson list = ojson::array();
  for (const auto& r : results) {
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"detail", r.detail},
                    {"time_limit", r.time_limit}});
    b.pass = b.pass && r.pass;
  }
  b.reports["acceptance"] = std::move(list);
  std::ostringstream text;
  for (const auto& r : results) {
    text << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ")\n";
  }
  b.text = text.str();
}

void run_make_spec(const ExperimentConfig& c, ReportBundle& b) {
  if (c.gallery.empty()) throw Error(ErrorCode::kParseError, "missing required flag --gallery");
  const auto spec = symbol::build_gallery(c.gallery, c.params);
  b.reports["spec"] = symbol::spec_to_json(spec);
  b.text = symbol::dump_spec(spec);
}

}  // namespace

void validate(const ExperimentConfig& c) {
  static const char* point_based[] = {"compare", "schatten", "index"};
  for (const char* s : point_based) {
    if (c.subcommand == s && c.cutoff < 4) {
      throw Error(ErrorCode::kOutOfRange, "--cutoff must be >= 4");
    }
  }
  if (!(c.alpha > 0.0)) throw Error(ErrorCode::kOutOfRange, "--alpha must be > 0");
  if (!(c.tol > 0.0)) throw Error(ErrorCode::kOutOfRange, "--tol must be > 0");
  for (double p : c.p_list) {
    if (!(p > 0.0)) throw Error(ErrorCode::kOutOfRange, "--p values must be > 0");
  }
  if (c.kind != 'R' && c.kind != 'P') {
    throw Error(ErrorCode::kParseError, "--kind must be R or P");
  }
  if (c.out) {
    const auto dir = c.out->parent_path();
    if (!dir.empty() && !std::filesystem::is_directory(dir)) {
      throw Error(ErrorCode::kIoError, "output directory does not exist: " + dir.string());
    }
  }
}

ReportBundle run(const ExperimentConfig& config) {
  validate(config);
  ReportBundle b;
  b.config = config_echo(config);
  b.reports = ojson::object();
  static const std::map<std::string, std::function<void(const ExperimentConfig&, ReportBundle&)>>
      table = {{"ellipticity", run_ellipticity}, {"projector", run_projector},
               {"compare", run_compare},         {"schatten", run_schatten},
               {"index", run_index},             {"growth", run_growth},
               {"acceptance", run_acceptance_cmd}, {"make-spec", run_make_spec}};
  if (config.subcommand == "gallery") {
    b.text = symbol::list_gallery();
    ojson names = ojson::array();
    for (const auto& e : symbol::gallery_entries()) {
      names.push_back({{"name", e.name},
                       {"defaults", e.defaults},
                       {"formula", e.formula},
                       {"exercises", e.exercises}});
    }
    b.reports["gallery"] = std::move(names);
    return b;
  }
  const auto it = table.find(config.subcommand);
  if (it == table.end()) {
    throw Error(ErrorCode::kParseError, "unknown subcommand '" + config.subcommand + "'");
  }
  it->second(config, b);
  return b;
}

ojson bundle_to_json(const ReportBundle& bundle, bool with_timing) {
  ojson out;
  out["version"] = bundle.version;
  out["config"] = bundle.config;
  out["pass"] = bundle.pass;
  out["reports"] = bundle.reports;
  if (with_timing) {
    ojson t = ojson::object();
    for (const auto& [phase, seconds] : bundle.timing) t[phase] = seconds;
    out["timing"] = std::move(t);
  }
  return out;
}

void emit_csv(const ReportBundle& bundle, const std::filesystem::path& path) {
  if (!bundle.csv) {
    throw Error(ErrorCode::kIoError, "report has no tabular form (s_j or exponent table)");
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  os << *bundle.csv;
  if (!os) throw Error(ErrorCode::kIoError, "write to " + path.string() + " failed");
}

ojson error_record(const std::exception& e) {
  ojson err;
  if (const auto* ce = dynamic_cast<const Error*>(&e)) {
    err["code"] = std::string(to_string(ce->code()));
  } else {
    err["code"] = "Internal";
  }
  err["message"] = e.what();
  return {{"error", std::move(err)}};
}

}  // namespace calderon::harness
