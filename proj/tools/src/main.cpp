#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "calderon/error.hpp"
#include "calderon/harness/experiment.hpp"

using calderon::Error;
using calderon::ErrorCode;
namespace h = calderon::harness;

namespace {

template <typename T>
std::vector<T> split_list(const std::string& text, char sep, const char* flag) {
  std::vector<T> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, sep)) {
    std::istringstream v(item);
    T value{};
    if (!(v >> value) || !(v >> std::ws).eof()) {
      throw Error(ErrorCode::kParseError,
                  std::string("bad value '") + item + "' for " + flag);
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, std::string("empty ") + flag);
  return out;
}

struct RawFlags {
  std::string mode = "0";
  std::string mode_range = "16:256";
  std::string p = "2";
  std::string side = "plus";
  std::string kind = "R";
  std::string format = "json";
  std::string criteria;
  std::vector<std::string> params;
  std::string spec, spec_a, spec_b, out;
  int q = -1;
};

void finish(h::ExperimentConfig& c, const RawFlags& f) {
  c.mode = split_list<int>(f.mode, ',', "--mode");
  const auto range = split_list<int>(f.mode_range, ':', "--mode-range");
  if (range.size() != 2) throw Error(ErrorCode::kParseError, "--mode-range needs LO:HI");
  c.mode_lo = range[0];
  c.mode_hi = range[1];
  c.p_list = split_list<double>(f.p, ',', "--p");
  c.side = calderon::cauchy::side_from_string(f.side);
  if (f.kind.size() != 1) throw Error(ErrorCode::kParseError, "--kind must be R or P");
  c.kind = f.kind[0];
  if (f.format == "json") {
    c.format = h::Format::kJson;
  } else if (f.format == "csv") {
    c.format = h::Format::kCsv;
  } else {
    throw Error(ErrorCode::kParseError, "--format must be json or csv");
  }
  if (!f.criteria.empty()) c.criteria = split_list<int>(f.criteria, ',', "--criteria");
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "--param needs NAME=VALUE");
    c.params[kv.substr(0, eq)] = split_list<double>(kv.substr(eq + 1), ',', "--param").at(0);
  }
  if (!f.spec.empty()) c.spec = f.spec;
  if (!f.spec_a.empty()) c.spec_a = f.spec_a;
  if (!f.spec_b.empty()) c.spec_b = f.spec_b;
  if (!f.out.empty()) c.out = f.out;
  if (f.q >= 0) c.q = f.q;
}

void write_text(const std::string& text, const std::optional<std::filesystem::path>& out) {
  if (!out) {
    std::cout << text;
    return;
  }
  std::ofstream os(*out, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIoError, "cannot open " + out->string() + " for writing");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calderon projectors and Grassmannian points of model elliptic operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", h::kVersion);

  h::ExperimentConfig config;
  RawFlags flags;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "Output path (stdout when omitted)");
    sub->add_option("--format", flags.format, "json or csv")->capture_default_str();
  };
  auto pair_flags = [&](CLI::App* sub) {
    sub->add_option("--spec-a", flags.spec_a, "First spec file")->required();
    sub->add_option("--spec-b", flags.spec_b, "Second spec file")->required();
    sub->add_option("--cutoff", config.cutoff, "Mode cutoff M (|m|_inf <= M)")
        ->capture_default_str();
    sub->add_option("--alpha", config.alpha, "Sobolev alpha")->capture_default_str();
    common(sub);
  };

  auto* gallery = app.add_subcommand("gallery", "List the gallery operators");
  common(gallery);

  auto* make_spec = app.add_subcommand("make-spec", "Write a gallery operator as a spec file");
  make_spec->add_option("--gallery", config.gallery, "Gallery name")->required();
  make_spec->add_option("--param", flags.params, "Parameter NAME=VALUE (repeatable)");
  common(make_spec);

  auto* ellipticity = app.add_subcommand("ellipticity", "Ellipticity and Agmon ray check");
  ellipticity->add_option("--spec", flags.spec, "Spec file")->required();
  ellipticity->add_option("--samples", config.samples, "Cosphere samples")->capture_default_str();
  ellipticity->add_option("--cutoff", config.cutoff, "Defect scan cutoff")->capture_default_str();
  common(ellipticity);

  auto* projector = app.add_subcommand("projector", "Calderon or orthogonal projector at one mode");
  projector->add_option("--spec", flags.spec, "Spec file")->required();
  projector->add_option("--mode", flags.mode, "Mode, comma separated for n = 3")
      ->capture_default_str();
  projector->add_option("--side", flags.side, "plus or minus")->capture_default_str();
  projector->add_option("--kind", flags.kind, "R (Calderon) or P (W-orthogonal)")
      ->capture_default_str();
  projector->add_option("--alpha", config.alpha, "Sobolev alpha")->capture_default_str();
  common(projector);

  auto* compare = app.add_subcommand("compare", "Compare two truncated points");
  pair_flags(compare);

  auto* schatten = app.add_subcommand("schatten", "Singular value decay of a pair");
  pair_flags(schatten);
  schatten->add_option("--p", flags.p, "Schatten exponents, comma separated")
      ->capture_default_str();
  schatten->add_option("--q", flags.q, "Agreement order override");

  auto* index = app.add_subcommand("index", "Fredholm index of a pair");
  pair_flags(index);
  index->add_option("--tol", config.tol, "Cross-Gram threshold")->capture_default_str();
  index->add_flag("--allow-unsafe-tail", config.allow_unsafe_tail,
                  "Report instead of failing on an unsafe tail");

  auto* growth = app.add_subcommand("growth", "Log-log orders of R entries");
  growth->add_option("--spec", flags.spec, "Spec file")->required();
  growth->add_option("--side", flags.side, "plus or minus")->capture_default_str();
  growth->add_option("--mode-range", flags.mode_range, "LO:HI")->capture_default_str();
  common(growth);

  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance criteria");
  acceptance->add_option("--criteria", flags.criteria, "Subset, comma separated");
  common(acceptance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? h::kExitOk : h::kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();

  try {
    finish(config, flags);
    const auto bundle = h::run(config);
    const auto& sub = config.subcommand;
    if (sub == "gallery" || sub == "make-spec") {
      if (config.format == h::Format::kJson && sub == "gallery" && config.out) {
        write_text(h::bundle_to_json(bundle, false).dump(2) + "\n", config.out);
      } else {
        write_text(*bundle.text, config.out);
      }
    } else if (sub == "acceptance") {
      std::cout << *bundle.text;
      if (config.out) write_text(h::bundle_to_json(bundle).dump(2) + "\n", config.out);
    } else if (config.format == h::Format::kCsv) {
      if (config.out) {
        h::emit_csv(bundle, *config.out);
      } else if (bundle.csv) {
        std::cout << *bundle.csv;
      } else {
        throw Error(ErrorCode::kIoError, "report has no tabular form");
      }
    } else {
      write_text(h::bundle_to_json(bundle).dump(2) + "\n", config.out);
    }
    return bundle.pass ? h::kExitOk : h::kExitChecksFailed;
  } catch (const Error& e) {
    std::cout << h::error_record(e).dump() << "\n";
    std::cerr << "calderon: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kParseError;
    return usage ? h::kExitUsage : h::kExitModuleError;
  } catch (const std::exception& e) {
    std::cout << h::error_record(e).dump() << "\n";
    std::cerr << "calderon: " << e.what() << "\n";
    return h::kExitModuleError;
  }
}
