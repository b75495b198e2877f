#include "hecke/json_io.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

nlohmann::json matrix_to_json(const SparseMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.to_dense()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

SparseMatrix matrix_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw ParseError("matrix must have " + std::to_string(dim) + " rows");
  SparseMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("matrix row must have " + std::to_string(dim) + " entries");
    }
    SparseVector sv;
    for (std::size_t c = 0; c < dim; ++c) {
      Scalar v = scalar_from_json(row[c]);
      if (!v.is_zero()) sv.emplace_back(c, std::move(v));
    }
    out.set_row(r, std::move(sv));
  }
  return out;
}

std::vector<Scalar> scalars_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

}  // namespace

nlohmann::json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

nlohmann::json to_json(const KElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [ms, c] : x.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& s : ms.segments()) mono.push_back(s.str());
    out.push_back({{"coeff", c}, {"monomial", std::move(mono)}});
  }
  return out;
}

KElement kelement_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("KElement must be an array of terms");
  KElement out;
  for (const auto& term : j) {
    if (!term.contains("coeff") || !term.contains("monomial") || !term["monomial"].is_array()) {
      throw ParseError("KElement term needs coeff and monomial");
    }
    std::vector<Segment> segs;
    for (const auto& s : term["monomial"]) segs.push_back(Segment::parse(s.get<std::string>()));
    out.add_term(Multisegment(std::move(segs)), term["coeff"].get<std::int64_t>());
  }
  return out;
}

nlohmann::json to_json(const Weight& w) {
  nlohmann::json l = nlohmann::json::array(), r = nlohmann::json::array();
  for (const auto& v : w.left()) l.push_back(v.str());
  for (const auto& v : w.right()) r.push_back(v.str());
  return {{"lambdaL", l}, {"lambdaR", r}};
}

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambdaL") || !j.contains("lambdaR")) {
    throw ParseError("weight needs lambdaL and lambdaR");
  }
  return Weight(scalars_from_json(j["lambdaL"], "lambdaL"), scalars_from_json(j["lambdaR"], "lambdaR"));
}

nlohmann::json to_json(const KHCElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [sym, c] : x.terms()) {
    nlohmann::json w = to_json(weight_of(sym));
    w["coeff"] = c;
    out.push_back(std::move(w));
  }
  return out;
}

nlohmann::json to_json(const HModule& mod) {
  nlohmann::json s = nlohmann::json::array(), y = nlohmann::json::array();
  for (const auto& a : mod.s_matrices()) s.push_back(matrix_to_json(a));
  for (const auto& a : mod.y_matrices()) y.push_back(matrix_to_json(a));
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : mod.eigen_candidates()) cands.push_back(c.str());
  return {{"m", mod.m()},          {"dim", mod.dim()}, {"labels", mod.labels()},
          {"eigen_candidates", cands}, {"S", s},          {"Y", y}};
}

HModule hmodule_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("payload") && j["payload"].contains("module")) {
    return hmodule_from_json(j["payload"]["module"]);
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("dim")) {
    throw ParseError("module JSON needs m and dim");
  }
  const auto m = j["m"].get<std::size_t>();
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<SparseMatrix> s, y;
  if (j.contains("S")) {
    for (const auto& a : j["S"]) s.push_back(matrix_from_json(a, dim));
  }
  if (j.contains("Y")) {
    for (const auto& a : j["Y"]) y.push_back(matrix_from_json(a, dim));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::vector<Scalar> cands;
  if (j.contains("eigen_candidates")) cands = scalars_from_json(j["eigen_candidates"], "eigen_candidates");
  try {
    return HModule(m, dim, std::move(s), std::move(y), std::move(labels), std::move(cands));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const WeightMultiset& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [wt, k] : w) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& c : wt) v.push_back(c.str());
    out.push_back({{"weight", std::move(v)}, {"multiplicity", k}});
  }
  return out;
}

nlohmann::json to_json(const std::vector<std::pair<Scalar, std::size_t>>& spectrum) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, k] : spectrum) out.push_back({{"eigenvalue", c.str()}, {"multiplicity", k}});
  return out;
}

nlohmann::json to_json(const KCommutativityReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json perm = nlohmann::json::array();
    for (auto p : c.perm) perm.push_back(p + 1);
    out.push_back({{"case", {{"weight", to_json(r.weight)},
                             {"i", r.index},
                             {"direction", to_string(r.direction)},
                             {"w", perm},
                             {"symbol", to_json(weight_of(c.symbol))}}},
                   {"pathA", to_json(c.path_a)},
                   {"pathB", to_json(c.path_b)},
                   {"equal", c.equal}});
  }
  return out;
}

}  // namespace hecke
