#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::symbol {

// Spec document layout:
//   {"name": ..., "n": 2, "r": 1, "k": 1,
//    "terms": [{"dn": 1, "dtau": [0], "re": [[1.0]], "im": [[0.0]]}, ...],
//    "agmon_hint": null | angle,
//    "chiral_blocks": null | {"L": [...], "R": [...]}}
// Doubles are written in shortest round-trip form, so parse(dump(spec)) is
// bit-exact.
nlohmann::ordered_json spec_to_json(const OperatorSpec& spec);
OperatorSpec spec_from_json(const nlohmann::json& doc);

std::string dump_spec(const OperatorSpec& spec);
OperatorSpec parse_spec(const std::string& text);

OperatorSpec read_spec_file(const std::filesystem::path& path);
void write_spec_file(const OperatorSpec& spec, const std::filesystem::path& path);

// {"re": [[...]], "im": [[...]]} helpers shared with the report writers.
nlohmann::ordered_json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& re, const nlohmann::json& im);

}  // namespace calderon::symbol
