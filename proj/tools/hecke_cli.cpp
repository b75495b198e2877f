// Command-line front end: every subcommand prints a Report (or a list of
// them) and exits 0 when all checks pass, 1 on a failed check, 2 on bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/error.hpp"
#include "hecke/json_io.hpp"
#include "hecke/verify.hpp"

namespace {

using hecke::HModule;
using hecke::Report;
using hecke::Scalar;
using hecke::Segment;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Scalar> parse_scalars(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

// "[0,1],[2,2]" keeps the given order, unlike Multisegment::parse.
std::vector<Segment> parse_segment_list(const std::string& text) {
  std::vector<Segment> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto open = text.find('[', pos);
    if (open == std::string::npos) {
      if (text.find_first_not_of(" ,", pos) != std::string::npos) {
        throw hecke::ParseError("unexpected text in segment list: " + text);
      }
      break;
    }
    const auto close = text.find(']', open);
    if (close == std::string::npos) throw hecke::ParseError("unterminated segment in: " + text);
    out.push_back(Segment::parse(text.substr(open, close - open + 1)));
    pos = close + 1;
  }
  if (out.empty()) throw hecke::ParseError("no segments in: " + text);
  return out;
}

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return json::parse(in);
}

struct Options {
  std::string format = "json";
  bool timing = false;
  std::size_t dim_cap = hecke::default_dim_cap();

  std::string module_path;
  std::string segments;
  std::string lambda_left;
  std::string lambda_right;
  std::string weight_path;
  std::string a;
  std::size_t i = 0;
  std::string direction = "both";
  bool module_level = false;

  std::string left_path, right_path, left_segments, right_segments;

  hecke::SuiteConfig suite;
};

hecke::Weight weight_from(const Options& o) {
  if (!o.weight_path.empty()) return hecke::weight_from_json(read_json(o.weight_path));
  if (o.lambda_left.empty() || o.lambda_right.empty()) {
    throw UsageError("a weight needs --lambdaL and --lambdaR, or --weight FILE");
  }
  return hecke::Weight(parse_scalars(o.lambda_left), parse_scalars(o.lambda_right));
}

HModule module_from(const std::string& path, const std::string& segments, const Options& o) {
  if (!path.empty()) return hecke::hmodule_from_json(read_json(path));
  if (!segments.empty()) return hecke::steinberg_product(parse_segment_list(segments), o.dim_cap);
  return hecke::gamma_module(weight_from(o), o.dim_cap);
}

HModule module_from(const Options& o) {
  if (o.module_path.empty() && o.segments.empty() && o.weight_path.empty() && o.lambda_left.empty()) {
    throw UsageError("a module needs --module FILE, --segments LIST, or a weight");
  }
  return module_from(o.module_path, o.segments, o);
}

Scalar a_from(const Options& o) {
  if (o.a.empty()) throw UsageError("--a is required");
  return Scalar::parse(o.a);
}

Report module_report(const std::string& id, const HModule& mod) {
  Report rep = hecke::check_relations(mod);
  rep.case_id = id;
  rep.payload = {{"module", hecke::to_json(mod)}};
  return rep;
}

std::vector<Report> run_relations(const Options& o) {
  Report rep = hecke::check_relations(module_from(o));
  rep.case_id = "relations";
  return {rep};
}

std::vector<Report> run_gamma(const Options& o) {
  const auto w = weight_from(o);
  Report rep = module_report("gamma " + w.str(), hecke::gamma_module(w, o.dim_cap));
  rep.inputs = {{"weight", hecke::to_json(w)}};
  return {rep};
}

std::vector<Report> run_jacquet(const Options& o, bool co) {
  const HModule mod = module_from(o);
  const Scalar a = a_from(o);
  const HModule out = co ? hecke::cojacquet(mod, a) : hecke::jacquet(mod, a);
  Report rep = module_report(std::string(co ? "cojac" : "jac") + " a=" + a.str(), out);
  rep.inputs = {{"a", a.str()}, {"dim", mod.dim()}};
  return {rep};
}

std::vector<Report> run_induce(const Options& o) {
  const HModule left = module_from(o.left_path, o.left_segments, o);
  const HModule right = module_from(o.right_path, o.right_segments, o);
  Report rep = module_report("induce", hecke::induce(left, right, o.dim_cap));
  rep.inputs = {{"left_dim", left.dim()}, {"right_dim", right.dim()}};
  return {rep};
}

std::vector<Report> run_dual(const Options& o) {
  const HModule mod = module_from(o);
  Report rep = module_report("dual", hecke::hermitian_dual_mod(mod));
  if (!o.a.empty()) {
    for (const auto& c : hecke::verify_dual_suite(mod, a_from(o)).checks) rep.checks.push_back(c);
  }
  return {rep};
}

std::vector<Report> run_kcheck(const Options& o) {
  const auto w = weight_from(o);
  if (o.i == 0) throw UsageError("--i is required (1-based)");
  std::vector<hecke::Direction> dirs;
  if (o.direction == "both") {
    dirs = {hecke::Direction::RaiseRight, hecke::Direction::LowerLeft};
  } else {
    dirs = {hecke::direction_from_string(o.direction)};
  }
  std::vector<Report> out;
  for (auto dir : dirs) {
    const auto kr = hecke::verify_kgroup_commutativity(w, o.i, dir);
    Report rep;
    rep.case_id = "kcheck " + w.str() + " i=" + std::to_string(o.i) + " " + hecke::to_string(dir);
    rep.level = "kgroup";
    rep.inputs = {{"weight", hecke::to_json(w)}, {"i", o.i}, {"direction", hecke::to_string(dir)}};
    for (const auto& c : kr.cases) {
      std::string perm;
      for (auto p : c.perm) perm += std::to_string(p + 1);
      rep.add("pathA == pathB w=" + perm, hecke::to_json(c.path_b), hecke::to_json(c.path_a), c.equal);
    }
    rep.payload = hecke::to_json(kr);
    out.push_back(std::move(rep));
  }
  if (o.module_level) out.push_back(hecke::verify_theorem_main_module(w, o.i, o.dim_cap));
  return out;
}

std::vector<Report> run_suite(Options o) {
  o.suite.dim_cap = o.dim_cap;
  try {
    o.suite.validate();
  } catch (const hecke::Error& e) {
    throw UsageError(e.what());
  }
  return hecke::run_suite(o.suite);
}

int emit(const std::vector<Report>& reports, const Options& o) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (o.format == "text") {
    for (const auto& r : reports) std::cout << hecke::to_text(r);
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
  } else if (reports.size() == 1) {
    std::cout << hecke::to_json(reports.front()).dump(2) << '\n';
  } else {
    json all = json::array();
    for (const auto& r : reports) all.push_back(hecke::to_json(r));
    std::cout << json{{"pass", pass}, {"reports", all}}.dump(2) << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

void add_module_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--module", o.module_path, "module JSON file, or - for stdin");
  cmd->add_option("--segments", o.segments, "Steinberg product, e.g. \"[0,1],[2,2]\"");
  cmd->add_option("--lambdaL", o.lambda_left, "comma-separated lambdaL");
  cmd->add_option("--lambdaR", o.lambda_right, "comma-separated lambdaR");
  cmd->add_option("--weight", o.weight_path, "weight JSON file with lambdaL and lambdaR");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with graded Hecke algebra modules and their Jacquet functors"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "record wall time in each report");
  app.add_option("--dim-cap", o.dim_cap, "largest module dimension to construct (env HECKE_DIM_CAP)");

  auto* relations = app.add_subcommand("relations", "check the defining relations of a module");
  add_module_source(relations, o);

  auto* gamma = app.add_subcommand("gamma", "build the module attached to a weight");
  gamma->add_option("--lambdaL", o.lambda_left, "comma-separated lambdaL");
  gamma->add_option("--lambdaR", o.lambda_right, "comma-separated lambdaR");
  gamma->add_option("--weight", o.weight_path, "weight JSON file");

  auto* jac = app.add_subcommand("jac", "generalized y1-eigenspace restricted to the last m-1 generators");
  add_module_source(jac, o);
  jac->add_option("--a", o.a, "eigenvalue");
  auto* cojac = app.add_subcommand("cojac", "generalized ym-eigenspace restricted to the first m-1 generators");
  add_module_source(cojac, o);
  cojac->add_option("--a", o.a, "eigenvalue");

  auto* induce = app.add_subcommand("induce", "induced module of a left and a right factor");
  induce->add_option("--left", o.left_path, "left module JSON");
  induce->add_option("--right", o.right_path, "right module JSON");
  induce->add_option("--left-segments", o.left_segments, "left factor as a Steinberg product");
  induce->add_option("--right-segments", o.right_segments, "right factor as a Steinberg product");

  auto* dual = app.add_subcommand("dual", "Hermitian dual of a module");
  add_module_source(dual, o);
  dual->add_option("--a", o.a, "also compare Jacquet dimensions at this eigenvalue");

  auto* kcheck = app.add_subcommand("kcheck", "compare both paths of the translation square in the K-group");
  kcheck->add_option("--lambdaL", o.lambda_left, "comma-separated lambdaL");
  kcheck->add_option("--lambdaR", o.lambda_right, "comma-separated lambdaR");
  kcheck->add_option("--weight", o.weight_path, "weight JSON file");
  kcheck->add_option("--i", o.i, "1-based coordinate");
  kcheck->add_option("--direction", o.direction, "raise, lower or both")
      ->check(CLI::IsMember({"raise", "lower", "both", "raise-right", "lower-left"}));
  kcheck->add_flag("--module-level", o.module_level, "also run the module-level comparison");

  auto* suite = app.add_subcommand("suite", "run every randomized check");
  suite->add_option("--seed", o.suite.seed);
  suite->add_option("--cases", o.suite.case_count);
  suite->add_option("--n-max", o.suite.n_max);
  suite->add_option("--m-max", o.suite.m_max);
  suite->add_option("--entry-range", o.suite.entry_range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::vector<Report> reports;
    if (*relations) reports = run_relations(o);
    else if (*gamma) reports = run_gamma(o);
    else if (*jac) reports = run_jacquet(o, false);
    else if (*cojac) reports = run_jacquet(o, true);
    else if (*induce) reports = run_induce(o);
    else if (*dual) reports = run_dual(o);
    else if (*kcheck) reports = run_kcheck(o);
    else reports = run_suite(o);
    if (o.timing) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      for (auto& r : reports) r.wall_ms = ms.count();
    }
    return emit(reports, o);
  } catch (const hecke::InvarianceViolation& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const hecke::CandidateSetIncomplete& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
  } catch (const hecke::Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  }
  return kExitUsage;
}
