#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hecke {

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

/// Machine-readable outcome of one verification case.
struct Report {
  std::string case_id;
  /// "module" or "kgroup": which level of the check actually ran.
  std::string level = "module";
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Check> checks;
  /// Extra output (a constructed module, K-group paths, ...).
  nlohmann::json payload;
  /// Omitted from serialized output unless set, so reports stay reproducible.
  std::optional<double> wall_ms;

  bool pass() const;
  const Check* first_failure() const;
  Check& add(std::string name, nlohmann::json expected, nlohmann::json actual, bool pass);
  /// Adds a check whose pass flag is expected == actual.
  Check& expect_equal(std::string name, nlohmann::json expected, nlohmann::json actual);
};

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace hecke
