#include "hecke/report.hpp"

#include <algorithm>

namespace hecke {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

Check& Report::add(std::string name, nlohmann::json expected, nlohmann::json actual, bool ok) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  return checks.back();
}

Check& Report::expect_equal(std::string name, nlohmann::json expected, nlohmann::json actual) {
  const bool ok = expected == actual;
  return add(std::move(name), std::move(expected), std::move(actual), ok);
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  nlohmann::json out = {
      {"case", r.case_id}, {"level", r.level}, {"inputs", r.inputs}, {"checks", checks}, {"pass", r.pass()}};
  if (!r.payload.is_null()) out["payload"] = r.payload;
  if (r.wall_ms) out["wall_ms"] = *r.wall_ms;
  return out;
}

std::string to_text(const Report& r) {
  std::string out = (r.pass() ? "PASS " : "FAIL ") + r.case_id + " [" + r.level + "]\n";
  for (const auto& c : r.checks) {
    out += std::string(c.pass ? "  ok   " : "  FAIL ") + c.name;
    if (!c.pass) out += ": expected " + c.expected.dump() + ", got " + c.actual.dump();
    out += "\n";
  }
  return out;
}

}  // namespace hecke
