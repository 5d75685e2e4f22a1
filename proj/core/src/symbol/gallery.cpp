#include "calderon/symbol/gallery.hpp"

#include <cmath>
#include <sstream>

#include "calderon/error.hpp"

namespace calderon::symbol {

namespace {

CMatrix pauli(int which) {
  CMatrix s(2, 2);
  switch (which) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

const GalleryEntry& find_entry(std::string_view name) {
  for (const auto& e : gallery_entries()) {
    if (e.name == name) return e;
  }
  if (name == "custom") {
    throw Error(ErrorCode::kInvalidSpec,
                "custom operators are defined by a coefficient table; load a "
                "spec file instead");
  }
  throw Error(ErrorCode::kUnknownGallery,
              "unknown gallery operator '" + std::string(name) + "'");
}

GalleryParams resolve(const GalleryEntry& entry, const GalleryParams& given) {
  GalleryParams out = entry.defaults;
  for (const auto& [key, value] : given) {
    if (!out.contains(key)) {
      throw Error(ErrorCode::kInvalidSpec, "operator '" + entry.name +
                                               "' has no parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidSpec,
                  "parameter '" + key + "' must be finite");
    }
    out[key] = value;
  }
  return out;
}

std::string format_params(const GalleryParams& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : p) {
    os << (first ? "" : ", ") << key << '=' << value;
    first = false;
  }
  return os.str();
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"dbar", {{"mu", 0.5}}, "d_n + i d_tau + mu  (n=2, r=1, k=1)",
       "Hardy-space / Krichever reference point; mode m decays iff m < mu"},
      {"twisted_dbar", {{"mu", 0.5}, {"d", 3.0}},
       "d_n + i d_tau + mu + d  (n=2, r=1, k=1)",
       "chiral index: nonzero Fredholm index against dbar (= d), killed by "
       "the self-adjoint double"},
      {"laplace_mass", {{"mu", 1.0}},
       "-d_n^2 - d_tau^2 + mu  (n=2, r=1, k=2)",
       "closed-form Calderon projector, block orders q-j of R+, "
       "Schatten decay with agreement order q=1"},
      {"dirac2", {{"mu", 1.0}, {"v", 0.0}},
       "s1 d_n + s2 d_tau + i(mu s3 + v)  (n=2, r=2, k=1)",
       "Dirac-type operator; Hilbert-Schmidt projector difference for "
       "zeroth-order perturbations"},
      {"dirac3", {{"mu", 1.0}, {"v", 0.0}},
       "s1 d_n + s2 d_1 + s3 d_2 + (mu + i v)  (n=3, r=2, k=1)",
       "Schatten class p > 2 for zeroth-order perturbations on T^2"},
  };
  return entries;
}

OperatorSpec build_gallery(std::string_view name, const GalleryParams& params) {
  const GalleryEntry& entry = find_entry(name);
  const GalleryParams p = resolve(entry, params);

  OperatorSpec spec(entry.name, 2, 1, 1);
  if (name == "dbar" || name == "twisted_dbar") {
    double zeroth = p.at("mu");
    if (name == "twisted_dbar") zeroth += p.at("d");
    spec.add_term(1, {0}, 1.0);
    spec.add_term(0, {1}, kI);
    spec.add_term(0, {0}, zeroth);
  } else if (name == "laplace_mass") {
    spec = OperatorSpec(entry.name, 2, 1, 2);
    spec.add_term(2, {0}, -1.0);
    spec.add_term(0, {2}, -1.0);
    spec.add_term(0, {0}, p.at("mu"));
  } else if (name == "dirac2") {
    spec = OperatorSpec(entry.name, 2, 2, 1);
    const CMatrix id = CMatrix::Identity(2, 2);
    spec.add_term(1, {0}, pauli(1));
    spec.add_term(0, {1}, pauli(2));
    spec.add_term(0, {0}, CMatrix(kI * (p.at("mu") * pauli(3) + p.at("v") * id)));
    spec.chiral_blocks = ChiralBlocks{{0}, {1}};
  } else if (name == "dirac3") {
    spec = OperatorSpec(entry.name, 3, 2, 1);
    spec.add_term(1, {0, 0}, pauli(1));
    spec.add_term(0, {1, 0}, pauli(2));
    spec.add_term(0, {0, 1}, pauli(3));
    spec.add_term(0, {0, 0}, cdouble(p.at("mu"), p.at("v")));
    spec.chiral_blocks = ChiralBlocks{{0}, {1}};
  }
  if (p != entry.defaults) spec.set_name(entry.name + "(" + format_params(p) + ")");
  spec.validate();
  return spec;
}

std::string list_gallery() {
  std::ostringstream os;
  for (const auto& e : gallery_entries()) {
    os << e.name << '(' << format_params(e.defaults) << ")\n"
       << "    operator:  " << e.formula << '\n'
       << "    exercises: " << e.exercises << '\n';
  }
  os << "custom\n"
     << "    operator:  coefficient table from a spec file\n"
     << "    exercises: arbitrary constant-coefficient elliptic systems\n";
  return os.str();
}

}  // namespace calderon::symbol
