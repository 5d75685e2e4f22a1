#include "calderon/grassmann/report_io.hpp"

#include <cmath>
#include <sstream>

namespace calderon::grassmann {

using ojson = nlohmann::ordered_json;

namespace {

ojson modes_json(const std::vector<Mode>& modes) {
  ojson out = ojson::array();
  for (const Mode& m : modes) out.push_back(m.components());
  return out;
}

std::string side_name(const std::optional<ChiralSide>& side) {
  if (!side) return "full";
  return *side == ChiralSide::kLeft ? "L" : "R";
}

}  // namespace

ojson point_to_json(const GrassmannPoint& pt) {
  ojson out;
  out["label"] = pt.label;
  out["n"] = pt.n;
  out["r"] = pt.r;
  out["k"] = pt.k;
  out["cutoff"] = pt.cutoff;
  out["alpha"] = pt.alpha;
  out["chiral"] = side_name(pt.chiral);
  out["retained_modes"] = pt.modes.size();
  out["nontrivial_modes"] = pt.nontrivial_count();
  ojson dims = ojson::array();
  for (std::size_t i = 0; i < pt.modes.size(); ++i) {
    dims.push_back({{"m", pt.modes[i].components()}, {"dim", pt.frames[i].cols()}});
  }
  out["frame_dims"] = std::move(dims);
  out["defects"] = modes_json(pt.defects);
  return out;
}

ojson compare_to_json(const CompareReport& rep) {
  ojson out;
  out["a"] = rep.label_a;
  out["b"] = rep.label_b;
  out["n"] = rep.n;
  out["cutoff"] = rep.cutoff;
  out["alpha"] = rep.alpha;
  out["agreement"] = rep.agreement.to_string();
  ojson modes = ojson::array();
  for (const auto& c : rep.modes) {
    modes.push_back({{"m", c.m.components()},
                     {"dim_a", c.dim_a},
                     {"dim_b", c.dim_b},
                     {"angles", c.angles},
                     {"difference_norm", c.difference_norm}});
  }
  out["modes"] = std::move(modes);
  out["skipped"] = modes_json(rep.skipped);
  out["singular_values"] = rep.singular_values;
  out["q_singular_values"] = rep.q_singular_values;
  ojson shells = ojson::array();
  for (const auto& s : rep.shells) {
    shells.push_back({{"lo", s.lo}, {"hi", s.hi}, {"max_norm", s.max_norm}});
  }
  out["shells"] = std::move(shells);
  out["max_consistency_error"] = rep.max_consistency_error;
  return out;
}

ojson schatten_to_json(const SchattenReport& rep) {
  ojson out;
  out["rank"] = rep.rank;
  out["target"] = rep.target;
  if (rep.finite_rank) {
    out["slope"] = "FINITE_RANK";
  } else if (rep.fit) {
    out["slope"] = rep.fit->slope;
    out["slope_half_width"] = rep.fit->half_width;
    out["window"] = {rep.window_lo, rep.window_hi};
    out["constant"] = rep.constant;
    out["tail_excess"] = rep.tail_excess;
    out["bound_holds"] = rep.bound_holds;
  }
  ojson sums = ojson::array();
  for (const auto& p : rep.partial_sums) {
    sums.push_back({{"p", p.p},
                    {"checkpoints", p.checkpoints},
                    {"sums", p.sums},
                    {"converging", p.converging}});
  }
  out["partial_sums"] = std::move(sums);
  out["s"] = rep.s;
  return out;
}

ojson index_to_json(const IndexReport& rep) {
  ojson out;
  out["a"] = rep.label_a;
  out["b"] = rep.label_b;
  out["tol"] = rep.tol;
  out["kernel"] = rep.kernel;
  out["cokernel"] = rep.cokernel;
  out["index"] = rep.index;
  out["tail_gap"] = rep.tail_gap;
  out["tail_safe"] = rep.tail_safe;
  ojson modes = ojson::array();
  for (const auto& m : rep.modes) {
    modes.push_back({{"m", m.m.components()},
                     {"dim_a", m.dim_a},
                     {"dim_b", m.dim_b},
                     {"kernel", m.kernel},
                     {"cokernel", m.cokernel}});
  }
  out["modes"] = std::move(modes);
  return out;
}

std::string schatten_csv(const SchattenReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "j,s_j,bound\n";
  const double gamma = -rep.target;
  for (std::size_t j = 1; j <= rep.s.size(); ++j) {
    os << j << ',' << rep.s[j - 1] << ',';
    if (!rep.finite_rank && rep.fit) {
      os << rep.constant * std::pow(static_cast<double>(j), -gamma);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace calderon::grassmann
