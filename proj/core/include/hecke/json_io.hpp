#pragma once

#include <nlohmann/json.hpp>

#include "hecke/hmodule.hpp"
#include "hecke/kring.hpp"
#include "hecke/realside.hpp"

namespace hecke {

// Every scalar is written as its canonical string (see Scalar::str), so the
// output is exact and byte-stable.

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// List of {"coeff": integer, "monomial": [segment strings]}.
nlohmann::json to_json(const KElement& x);
KElement kelement_from_json(const nlohmann::json& j);

/// {"lambdaL": [...], "lambdaR": [...]}
nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KHCElement& x);

/// {"m", "dim", "labels", "eigen_candidates", "S": [matrices], "Y": [matrices]}
/// with every matrix a row-major array of rows of scalar strings.
nlohmann::json to_json(const HModule& mod);
/// Accepts either a module object or a report whose payload holds "module".
HModule hmodule_from_json(const nlohmann::json& j);

/// [{"weight": [...], "multiplicity": k}, ...]
nlohmann::json to_json(const WeightMultiset& w);

nlohmann::json to_json(const std::vector<std::pair<Scalar, std::size_t>>& spectrum);

/// One entry per basis symbol: {"case", "pathA", "pathB", "equal"}.
nlohmann::json to_json(const KCommutativityReport& r);

}  // namespace hecke
