#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "calderon/cauchy/growth.hpp"
#include "calderon/cauchy/sobolev.hpp"

namespace calderon::cauchy {

// {"m": [...], "kind": "Pplus", "alpha": 0.5 | null, "matrix": {"re", "im"}}
// plus "r" and "k" when a weight is attached.
nlohmann::ordered_json projector_to_json(const BlockProjector& p);
BlockProjector projector_from_json(const nlohmann::json& doc);

// Slopes as numbers, or the string "NONE" for vanishing blocks.
nlohmann::ordered_json growth_to_json(const GrowthFit& fit);
// "q,jj,slope" rows.
std::string growth_csv(const GrowthFit& fit);

}  // namespace calderon::cauchy
