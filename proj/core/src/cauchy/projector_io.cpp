#include "calderon/cauchy/projector_io.hpp"

#include <sstream>
#include <string>

#include "calderon/error.hpp"
#include "calderon/symbol/spec_io.hpp"

namespace calderon::cauchy {

nlohmann::ordered_json projector_to_json(const BlockProjector& p) {
  nlohmann::ordered_json out;
  out["m"] = p.m.components();
  out["kind"] = std::string(to_string(p.kind));
  if (p.weight) {
    out["alpha"] = p.weight->alpha;
    out["r"] = p.weight->r;
    out["k"] = p.weight->k;
  } else {
    out["alpha"] = nullptr;
  }
  out["matrix"] = symbol::matrix_to_json(p.matrix);
  return out;
}

BlockProjector projector_from_json(const nlohmann::json& doc) {
  try {
    BlockProjector p;
    p.m = Mode(doc.at("m").get<std::vector<int>>());
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "Rplus") {
      p.kind = BlockProjector::Kind::kRplus;
    } else if (kind == "Rminus") {
      p.kind = BlockProjector::Kind::kRminus;
    } else if (kind == "Pplus") {
      p.kind = BlockProjector::Kind::kPplus;
    } else if (kind == "Pminus") {
      p.kind = BlockProjector::Kind::kPminus;
    } else {
      throw Error(ErrorCode::kParseError, "unknown projector kind '" + kind + "'");
    }
    p.matrix = symbol::matrix_from_json(doc.at("matrix").at("re"),
                                        doc.at("matrix").at("im"));
    if (!doc.at("alpha").is_null()) {
      p.weight = sobolev_weights(p.m, doc.at("k").get<int>(),
                                 doc.at("alpha").get<double>(),
                                 doc.at("r").get<int>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed projector record: ") + e.what());
  }
}

}  // namespace calderon::cauchy

namespace calderon::cauchy {

nlohmann::ordered_json growth_to_json(const GrowthFit& fit) {
  nlohmann::ordered_json out;
  out["modes"] = fit.modes;
  auto slopes = nlohmann::ordered_json::array();
  auto widths = nlohmann::ordered_json::array();
  for (const auto& row : fit.slopes) {
    auto srow = nlohmann::ordered_json::array();
    auto wrow = nlohmann::ordered_json::array();
    for (const auto& e : row) {
      if (e) {
        srow.push_back(e->slope);
        wrow.push_back(e->half_width);
      } else {
        srow.push_back("NONE");
        wrow.push_back(nullptr);
      }
    }
    slopes.push_back(std::move(srow));
    widths.push_back(std::move(wrow));
  }
  out["slopes"] = std::move(slopes);
  out["half_widths"] = std::move(widths);
  return out;
}

std::string growth_csv(const GrowthFit& fit) {
  std::ostringstream os;
  os.precision(17);
  os << "q,jj,slope\n";
  for (std::size_t q = 0; q < fit.slopes.size(); ++q) {
    for (std::size_t j = 0; j < fit.slopes[q].size(); ++j) {
      os << q << ',' << j << ',';
      if (fit.slopes[q][j]) {
        os << fit.slopes[q][j]->slope;
      } else {
        os << "NONE";
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace calderon::cauchy
