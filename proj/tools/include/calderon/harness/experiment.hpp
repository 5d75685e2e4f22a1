#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "calderon/cauchy/companion.hpp"
#include "calderon/symbol/gallery.hpp"

namespace calderon::harness {

inline constexpr const char* kVersion = "calderon 0.1.0";

enum class Format { kJson, kCsv };

struct ExperimentConfig {
  std::string subcommand;
  std::optional<std::filesystem::path> spec;
  std::optional<std::filesystem::path> spec_a;
  std::optional<std::filesystem::path> spec_b;
  int cutoff = 16;
  double alpha = 0.5;
  double tol = 1e-6;
  std::vector<double> p_list{2.0};
  std::optional<std::filesystem::path> out;
  Format format = Format::kJson;

  // projector
  std::vector<int> mode{0};
  cauchy::Side side = cauchy::Side::kPlus;
  char kind = 'R';
  // growth
  int mode_lo = 16;
  int mode_hi = 256;
  // schatten: agreement order override
  std::optional<int> q;
  // index
  bool allow_unsafe_tail = false;
  // ellipticity
  int samples = 256;
  // make-spec
  std::string gallery;
  symbol::GalleryParams params;
  // acceptance: run only these criteria (all when empty)
  std::vector<int> criteria;
};

// Throws Error(kOutOfRange) for cutoff < 4 on point-based subcommands,
// alpha <= 0 and similar config violations.
void validate(const ExperimentConfig& config);

struct ReportBundle {
  std::string version = kVersion;
  nlohmann::ordered_json config;
  std::vector<std::pair<std::string, double>> timing;  // seconds per phase
  nlohmann::ordered_json reports;
  bool pass = true;
  // Present for subcommands with a tabular form.
  std::optional<std::string> csv;
  // Plain-text payload (gallery listing).
  std::optional<std::string> text;
};

ReportBundle run(const ExperimentConfig& config);

// Deterministic structured-text form; timing is omitted unless requested.
nlohmann::ordered_json bundle_to_json(const ReportBundle& bundle,
                                      bool with_timing = true);

// Writes the CSV table of the bundle. Throws Error(kIoError) when the
// bundle has no table or the file cannot be written.
void emit_csv(const ReportBundle& bundle, const std::filesystem::path& path);

// {"error": {"code": ..., "message": ...}}
nlohmann::ordered_json error_record(const std::exception& e);

// 0 ok, 1 checks failed, 2 module error, 3 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitModuleError = 2;
inline constexpr int kExitUsage = 3;

}  // namespace calderon::harness
