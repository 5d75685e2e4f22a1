#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "calderon/grassmann/compare.hpp"
#include "calderon/grassmann/fredholm.hpp"
#include "calderon/grassmann/point.hpp"
#include "calderon/grassmann/schatten.hpp"

namespace calderon::grassmann {

nlohmann::ordered_json point_to_json(const GrassmannPoint& pt);
nlohmann::ordered_json compare_to_json(const CompareReport& rep);
nlohmann::ordered_json schatten_to_json(const SchattenReport& rep);
nlohmann::ordered_json index_to_json(const IndexReport& rep);

// "j,s_j,bound" rows for the nonzero singular values; bound is C j^target
// and left empty for finite-rank reports.
std::string schatten_csv(const SchattenReport& rep);

}  // namespace calderon::grassmann
