#include "calderon/symbol/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "calderon/error.hpp"

namespace calderon::symbol {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "spec document: " + what);
}

}  // namespace

ojson matrix_to_json(const CMatrix& m) {
  ojson re = ojson::array();
  ojson im = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row_re = ojson::array();
    ojson row_im = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  ojson out;
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

CMatrix matrix_from_json(const nlohmann::json& re, const nlohmann::json& im) {
  if (!re.is_array() || !im.is_array() || re.size() != im.size()) {
    parse_error("re/im must be arrays of equal shape");
  }
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = rows == 0 ? Eigen::Index{0}
                              : static_cast<Eigen::Index>(re.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& rr = re.at(static_cast<std::size_t>(i));
    const auto& ri = im.at(static_cast<std::size_t>(i));
    if (!rr.is_array() || !ri.is_array() ||
        static_cast<Eigen::Index>(rr.size()) != cols ||
        static_cast<Eigen::Index>(ri.size()) != cols) {
      parse_error("ragged coefficient matrix");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = cdouble(rr.at(static_cast<std::size_t>(j)).get<double>(),
                        ri.at(static_cast<std::size_t>(j)).get<double>());
    }
  }
  return m;
}

ojson spec_to_json(const OperatorSpec& spec) {
  ojson doc;
  doc["name"] = spec.name();
  doc["n"] = spec.n();
  doc["r"] = spec.r();
  doc["k"] = spec.k();
  ojson terms = ojson::array();
  for (const auto& [key, c] : spec.terms()) {
    ojson t;
    t["dn"] = key.dn;
    t["dtau"] = key.dtau;
    ojson m = matrix_to_json(c);
    t["re"] = std::move(m["re"]);
    t["im"] = std::move(m["im"]);
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  doc["agmon_hint"] = spec.agmon_hint ? ojson(*spec.agmon_hint) : ojson(nullptr);
  if (spec.chiral_blocks) {
    ojson cb;
    cb["L"] = spec.chiral_blocks->left;
    cb["R"] = spec.chiral_blocks->right;
    doc["chiral_blocks"] = std::move(cb);
  } else {
    doc["chiral_blocks"] = nullptr;
  }
  return doc;
}

OperatorSpec spec_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) parse_error("top level must be an object");
    OperatorSpec spec(doc.at("name").get<std::string>(), doc.at("n").get<int>(),
                      doc.at("r").get<int>(), doc.at("k").get<int>());
    for (const auto& t : doc.at("terms")) {
      spec.add_term(t.at("dn").get<int>(), t.at("dtau").get<std::vector<int>>(),
                    matrix_from_json(t.at("re"), t.at("im")));
    }
    if (doc.contains("agmon_hint") && !doc["agmon_hint"].is_null()) {
      spec.agmon_hint = doc["agmon_hint"].get<double>();
    }
    if (doc.contains("chiral_blocks") && !doc["chiral_blocks"].is_null()) {
      const auto& cb = doc["chiral_blocks"];
      spec.chiral_blocks = ChiralBlocks{cb.at("L").get<std::vector<int>>(),
                                        cb.at("R").get<std::vector<int>>()};
    }
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

std::string dump_spec(const OperatorSpec& spec) {
  return spec_to_json(spec).dump(2) + "\n";
}

OperatorSpec parse_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
  return spec_from_json(doc);
}

OperatorSpec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open spec file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

void write_spec_file(const OperatorSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write spec file " + path.string());
  }
  out << dump_spec(spec);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

}  // namespace calderon::symbol
