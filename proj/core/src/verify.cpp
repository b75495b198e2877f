#include "hecke/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hecke/error.hpp"
#include "hecke/json_io.hpp"

namespace hecke {

namespace {

std::size_t multinomial(const std::vector<std::int64_t>& parts) {
  mpz_class num = 1;
  std::int64_t total = 0;
  for (auto p : parts) {
    if (p < 0) return 0;
    for (std::int64_t k = 1; k <= p; ++k) {
      ++total;
      num *= total;
      num /= k;
    }
  }
  return num.fits_ulong_p() ? static_cast<std::size_t>(num.get_ui())
                            : std::numeric_limits<std::size_t>::max();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return multinomial({static_cast<std::int64_t>(k), static_cast<std::int64_t>(n - k)});
}

std::vector<std::int64_t> lengths_of(const std::vector<Segment>& segs) {
  std::vector<std::int64_t> out;
  for (const auto& s : segs) out.push_back(static_cast<std::int64_t>(s.length()));
  return out;
}

nlohmann::json segments_json(const std::vector<Segment>& segs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : segs) out.push_back(s.str());
  return out;
}

KElement product_class(const std::vector<Segment>& segs) {
  KElement x = KElement::unit();
  for (const auto& s : segs) x = x * KElement::steinberg(s);
  return x;
}

// Copies the checks of `sub` into `agg` under a case prefix.
void absorb(Report& agg, const Report& sub) {
  const std::string prefix = sub.case_id + (sub.level == "kgroup" ? " [kgroup]" : "") + ": ";
  for (const auto& c : sub.checks) agg.add(prefix + c.name, c.expected, c.actual, c.pass);
  if (agg.checks.size() == sub.checks.size()) {
    agg.level = sub.level;
  } else if (agg.level != sub.level) {
    agg.level = "mixed";
  }
}

// Every generalized weight (c_1..c_m) of M gives (-conj c_m, ..., -conj c_1)
// on the Hermitian dual.
WeightMultiset dual_weights(const WeightMultiset& w) {
  WeightMultiset out;
  for (const auto& [wt, k] : w) {
    std::vector<Scalar> d;
    for (auto it = wt.rbegin(); it != wt.rend(); ++it) d.push_back(-it->conj());
    out[d] += k;
  }
  return out;
}

// Mostly picks a coordinate with positive mu so both paths are usually nonzero.
std::size_t pick_index(CaseGenerator& gen, const Weight& w) {
  std::vector<std::size_t> live;
  const auto mu = w.mu();
  for (std::size_t k = 0; k < w.n(); ++k) {
    if (mu[k] > 0) live.push_back(k + 1);
  }
  if (live.empty() || gen.uniform(4) == 0) return 1 + gen.uniform(w.n());
  return live[gen.uniform(live.size())];
}

Report kgroup_fallback(const Weight& w, std::size_t i, std::string case_id, const char* why) {
  Report rep;
  rep.case_id = std::move(case_id);
  rep.level = "kgroup";
  rep.inputs = {{"weight", to_json(w)}, {"i", i}, {"reason", why}};
  Permutation id(w.n());
  std::iota(id.begin(), id.end(), std::size_t{0});
  const auto kr = verify_kgroup_commutativity(w, i, Direction::RaiseRight, {id});
  for (const auto& c : kr.cases) {
    rep.add("Jac o Gamma = Gamma o T", to_json(c.path_b), to_json(c.path_a), c.equal);
  }
  return rep;
}

}  // namespace

void SuiteConfig::validate() const {
  if (n_max == 0) throw Error("n_max must be positive");
  if (translation_classes.empty()) throw Error("at least one translation class is required");
  if (entry_range < 0) throw Error("entry_range must be non-negative");
  std::size_t f = 1;
  for (std::size_t k = 2; k <= m_max; ++k) {
    f *= k;
    if (f > dim_cap) {
      throw Error("m_max = " + std::to_string(m_max) + " allows modules beyond dim_cap = " +
                  std::to_string(dim_cap));
    }
  }
}

CaseGenerator::CaseGenerator(const SuiteConfig& config, std::uint64_t salt)
    : config_(config), rng_(config.seed * 0x9E3779B97F4A7C15ULL + salt) {}

std::uint64_t CaseGenerator::uniform(std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % n;
}

std::int64_t CaseGenerator::uniform_int(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
}

const Scalar& CaseGenerator::translation_class() {
  return config_.translation_classes[uniform(config_.translation_classes.size())];
}

Weight CaseGenerator::weight(bool allow_negative, std::optional<std::size_t> m) {
  const std::size_t n = 1 + uniform(config_.n_max);
  const std::size_t total = m ? *m : uniform(config_.m_max + 1);
  std::vector<Scalar> right;
  for (std::size_t k = 0; k < n; ++k) {
    right.push_back(translation_class() + Scalar(uniform_int(-config_.entry_range, config_.entry_range)));
  }
  if (n > 1 && uniform(3) == 0) {
    const auto a = uniform(n), b = uniform(n);
    right[b] = right[a];
  }
  std::vector<std::int64_t> mu(n, 0);
  for (std::size_t t = 0; t < total; ++t) ++mu[uniform(n)];
  if (allow_negative && uniform(4) == 0) mu[uniform(n)] = -1 - static_cast<std::int64_t>(uniform(2));
  std::vector<Scalar> left;
  for (std::size_t k = 0; k < n; ++k) left.push_back(right[k] + Scalar(mu[k]));
  return Weight(std::move(left), std::move(right));
}

Segment CaseGenerator::segment(std::size_t max_length) {
  Scalar start = translation_class() + Scalar(uniform_int(-config_.entry_range, config_.entry_range));
  if (uniform(2) == 0) start += Scalar::half();
  const auto len = static_cast<long>(1 + uniform(max_length));
  return Segment::make(start, start + Scalar(len - 1));
}

std::vector<Segment> CaseGenerator::segments(std::size_t m_total, std::size_t max_count) {
  std::vector<Segment> out;
  std::size_t left = std::max<std::size_t>(1, m_total);
  const std::size_t count = 1 + uniform(max_count);
  for (std::size_t k = 0; k < count && left > 0; ++k) {
    out.push_back(segment(left));
    left -= out.back().length();
  }
  return out;
}

KElement CaseGenerator::kelement(std::size_t max_terms, std::size_t max_segments, std::size_t max_length) {
  KElement x;
  const std::size_t terms = 1 + uniform(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Segment> segs;
    const std::size_t count = uniform(max_segments + 1);
    for (std::size_t k = 0; k < count; ++k) segs.push_back(segment(max_length));
    std::int64_t c = 0;
    while (c == 0) c = uniform_int(-3, 3);
    x.add_term(Multisegment(std::move(segs)), c);
  }
  return x;
}

Report verify_theorem_main_k(const SuiteConfig& config) {
  CaseGenerator gen(config, 1);
  Report rep;
  rep.case_id = "theorem_main_k";
  rep.level = "kgroup";
  std::size_t triples = 0, repeated = 0, multi_class = 0, zero = 0;
  for (std::size_t c = 0; c < config.case_count; ++c) {
    const Weight w = gen.weight(true);
    const std::size_t i = pick_index(gen, w);
    const auto sorted = [](std::vector<Scalar> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto l = sorted(w.left());
    const auto r = sorted(w.right());
    if (std::adjacent_find(l.begin(), l.end()) != l.end() ||
        std::adjacent_find(r.begin(), r.end()) != r.end()) {
      ++repeated;
    }
    if (integral_weyl_classes(w.left()).size() > 1) ++multi_class;
    for (auto dir : {Direction::RaiseRight, Direction::LowerLeft}) {
      const auto kr = verify_kgroup_commutativity(w, i, dir);
      for (const auto& kc : kr.cases) {
        ++triples;
        if (kc.path_a.is_zero()) ++zero;
        std::string perm;
        for (auto p : kc.perm) perm += std::to_string(p + 1);
        rep.add(w.str() + " i=" + std::to_string(i) + " " + to_string(dir) + " w=" + perm,
                to_json(kc.path_b), to_json(kc.path_a), kc.equal);
      }
    }
  }
  rep.inputs = {{"seed", config.seed}, {"cases", config.case_count}};
  rep.payload = {{"triples", triples},
                 {"weights_with_repeated_entries", repeated},
                 {"weights_with_several_classes", multi_class},
                 {"zero_paths", zero}};
  return rep;
}

Report verify_theorem_main_module(const Weight& w, std::size_t i, std::size_t dim_cap) {
  if (i < 1 || i > w.n()) throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(w.n()));
  const std::string id = "theorem_main_module " + w.str() + " i=" + std::to_string(i);
  if (gamma_dimension(w) > dim_cap) return kgroup_fallback(w, i, id, "dim_cap exceeded");

  Report rep;
  rep.case_id = id;
  rep.inputs = {{"weight", to_json(w)}, {"i", i}};
  const auto mu = w.mu();
  if (std::any_of(mu.begin(), mu.end(), [](std::int64_t x) { return x < 0; })) {
    // The Gamma image is zero, and so is every summand: lowering one entry
    // cannot clear another negative entry.
    std::size_t expected_dim = 0;
    for (std::size_t k = 0; k < w.n(); ++k) {
      if (w.right()[k] != w.right()[i - 1] || mu[k] < 1) continue;
      auto lowered = mu;
      --lowered[k];
      expected_dim += multinomial(lowered);
    }
    rep.expect_equal("dim Jac", expected_dim, 0);
    rep.payload = {{"gamma_dim", 0}, {"jacquet_dim", 0}};
    return rep;
  }
  const HModule mod = gamma_module(w, dim_cap);
  const Scalar& target = w.right()[i - 1];

  std::size_t expected_dim = 0;
  WeightMultiset expected_fp;
  for (std::size_t k = 0; k < w.n(); ++k) {
    if (w.right()[k] != target || mu[k] < 1) continue;
    auto lowered = mu;
    --lowered[k];
    expected_dim += multinomial(lowered);
    expected_fp = merge(std::move(expected_fp), y_weight_multiset(gamma_module(w.raised_right(k), dim_cap)));
  }

  if (mod.m() == 0) {
    rep.expect_equal("dim Jac", expected_dim, 0);
    return rep;
  }
  const HModule jac = jacquet(mod, target + Scalar::half());
  rep.expect_equal("dim Jac", expected_dim, jac.dim());
  rep.expect_equal("fingerprint", to_json(expected_fp), to_json(y_weight_multiset(jac)));
  const Report rel = check_relations(jac);
  rep.expect_equal("Jacquet module relations", true, rel.pass());
  rep.payload = {{"gamma_dim", mod.dim()}, {"jacquet_dim", jac.dim()}};
  return rep;
}

Report verify_eigenvalue_prop(const Weight& w, std::size_t dim_cap) {
  const std::string id = "eigenvalue_prop " + w.str();
  if (gamma_dimension(w) > dim_cap) {
    Report rep;
    rep.case_id = id;
    rep.level = "kgroup";
    for (std::size_t i = 1; i <= w.n(); ++i) {
      const Report sub = kgroup_fallback(w, i, id, "dim_cap exceeded");
      for (const auto& c : sub.checks) rep.add("i=" + std::to_string(i) + " " + c.name, c.expected, c.actual, c.pass);
    }
    return rep;
  }
  Report rep;
  rep.case_id = id;
  rep.inputs = {{"weight", to_json(w)}};
  const auto mu = w.mu();
  std::map<Scalar, std::size_t> predicted;
  for (std::size_t k = 0; k < w.n(); ++k) {
    if (mu[k] < 1) continue;
    auto lowered = mu;
    --lowered[k];
    if (const auto d = multinomial(lowered); d > 0) predicted[w.right()[k] + Scalar::half()] += d;
  }
  std::vector<std::pair<Scalar, std::size_t>> expected(predicted.begin(), predicted.end());
  const bool zero = std::any_of(mu.begin(), mu.end(), [](std::int64_t x) { return x < 0; });
  const auto actual = zero ? std::vector<std::pair<Scalar, std::size_t>>{} : spectrum_y1(gamma_module(w, dim_cap));
  rep.expect_equal("spectrum of y1", to_json(expected), to_json(actual));
  return rep;
}

Report verify_leibniz_module(const HModule& left, const HModule& right, const Scalar& a,
                             std::size_t dim_cap) {
  Report rep;
  rep.case_id = "leibniz_module a=" + a.str();
  rep.inputs = {{"m1", left.m()}, {"m2", right.m()}, {"a", a.str()}};
  const HModule mod = induce(left, right, dim_cap);
  const std::size_t m1 = left.m(), m2 = right.m(), m = m1 + m2;
  const std::size_t lhs = m == 0 ? 0 : jacquet(mod, a).dim();
  std::size_t rhs = 0;
  if (m1 >= 1) rhs += binomial(m - 1, m1 - 1) * jacquet(left, a).dim() * right.dim();
  if (m2 >= 1) rhs += binomial(m - 1, m1) * left.dim() * jacquet(right, a).dim();
  rep.expect_equal("dim Jac_a(M1 x M2)", rhs, lhs);
  return rep;
}

Report verify_leibniz_module(const std::vector<Segment>& left, const std::vector<Segment>& right,
                             const Scalar& a, std::size_t dim_cap) {
  auto all = lengths_of(left);
  const auto r = lengths_of(right);
  all.insert(all.end(), r.begin(), r.end());
  const std::string id =
      "leibniz " + segments_json(left).dump() + " x " + segments_json(right).dump() + " a=" + a.str();
  if (multinomial(all) > dim_cap) {
    Report rep;
    rep.case_id = id;
    rep.level = "kgroup";
    const KElement x = product_class(left), y = product_class(right);
    rep.expect_equal("jac_k(a, xy) = jac_k(a, x) y + x jac_k(a, y)",
                     to_json(jac_k(a, x) * y + x * jac_k(a, y)), to_json(jac_k(a, x * y)));
    return rep;
  }
  Report rep = verify_leibniz_module(steinberg_product(left, dim_cap), steinberg_product(right, dim_cap),
                                     a, dim_cap);
  rep.case_id = id;
  rep.inputs = {{"left", segments_json(left)}, {"right", segments_json(right)}, {"a", a.str()}};
  return rep;
}

Report verify_dual_suite(const HModule& mod, const Scalar& a) {
  Report rep;
  rep.case_id = "dual a=" + a.str();
  rep.inputs = {{"m", mod.m()}, {"dim", mod.dim()}, {"a", a.str()}};
  const HModule dual = hermitian_dual_mod(mod);
  rep.expect_equal("dual relations", true, check_relations(dual).pass());
  if (mod.m() >= 1) {
    rep.expect_equal("dim Jac_a(M) = dim Jac^{-conj a}(M*)", jacquet(mod, a).dim(),
                     cojacquet(dual, -a.conj()).dim());
  }
  const WeightMultiset fp = y_weight_multiset(mod);
  rep.expect_equal("dual weights", to_json(dual_weights(fp)), to_json(y_weight_multiset(dual)));
  rep.expect_equal("double dual fingerprint", to_json(fp), to_json(y_weight_multiset(hermitian_dual_mod(dual))));
  return rep;
}

Report verify_dual_suite(const std::vector<Segment>& factors, const Scalar& a, std::size_t dim_cap) {
  const std::string id = "dual " + segments_json(factors).dump() + " a=" + a.str();
  if (multinomial(lengths_of(factors)) > dim_cap) {
    Report rep;
    rep.case_id = id;
    rep.level = "kgroup";
    const KElement x = product_class(factors);
    rep.expect_equal("hermitian_dual_k o jac_k(a) = cojac_k(-conj a) o hermitian_dual_k",
                     to_json(cojac_k(-a.conj(), hermitian_dual_k(x))), to_json(hermitian_dual_k(jac_k(a, x))));
    return rep;
  }
  const HModule mod = steinberg_product(factors, dim_cap);
  Report rep = verify_dual_suite(mod, a);
  rep.case_id = id;
  rep.inputs = {{"factors", segments_json(factors)}, {"a", a.str()}};
  std::vector<Segment> reversed;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) reversed.push_back(negate_conjugate(*it));
  rep.expect_equal("product reversal fingerprint",
                   to_json(y_weight_multiset(steinberg_product(reversed, dim_cap))),
                   to_json(y_weight_multiset(hermitian_dual_mod(mod))));
  return rep;
}

Report verify_kring_identities(const SuiteConfig& config) {
  CaseGenerator gen(config, 2);
  Report rep;
  rep.case_id = "kring_identities";
  rep.level = "kgroup";
  for (std::size_t c = 0; c < config.case_count; ++c) {
    const KElement x = gen.kelement(3, 3, 3);
    const KElement y = gen.kelement(2, 2, 3);
    Scalar a = gen.translation_class() + Scalar(gen.uniform_int(-2, 2));
    std::vector<Scalar> starts;
    for (const auto& [ms, k] : x.terms()) {
      for (const auto& s : ms.segments()) starts.push_back(s.start());
    }
    if (!starts.empty() && gen.uniform(4) != 0) a = starts[gen.uniform(starts.size())];
    const std::string tag = "case " + std::to_string(c) + " a=" + a.str() + ": ";
    rep.expect_equal(tag + "dual o jac = cojac(-conj a) o dual", to_json(cojac_k(-a.conj(), hermitian_dual_k(x))),
                     to_json(hermitian_dual_k(jac_k(a, x))));
    rep.expect_equal(tag + "jac Leibniz", to_json(jac_k(a, x) * y + x * jac_k(a, y)), to_json(jac_k(a, x * y)));
    rep.expect_equal(tag + "cojac Leibniz", to_json(cojac_k(a, x) * y + x * cojac_k(a, y)),
                     to_json(cojac_k(a, x * y)));
    rep.expect_equal(tag + "dual involution", to_json(x), to_json(hermitian_dual_k(hermitian_dual_k(x))));
  }
  rep.inputs = {{"seed", config.seed}, {"cases", config.case_count}};
  return rep;
}

Report verify_relation_suite(const SuiteConfig& config) {
  CaseGenerator gen(config, 3);
  Report rep;
  rep.case_id = "relations";
  std::size_t max_dim = 0;
  auto run = [&](const std::string& name, const HModule& mod) {
    const Report r = check_relations(mod);
    const Check* bad = r.first_failure();
    rep.add(name + " (m=" + std::to_string(mod.m()) + ", dim=" + std::to_string(mod.dim()) + ")", "holds",
            bad ? "fails at " + bad->name : "holds", r.pass());
    max_dim = std::max(max_dim, mod.dim());
  };

  // Largest Gamma image allowed by m_max: m_max length-one segments.
  std::vector<Segment> points;
  for (std::size_t k = 0; k < config.m_max; ++k) {
    const Scalar x = gen.translation_class() + Scalar(gen.uniform_int(-1, 1));
    points.push_back(Segment::make(x, x));
  }
  run("product of points " + segments_json(points).dump(), steinberg_product(points, config.dim_cap));

  const std::size_t per_kind = std::max<std::size_t>(1, config.case_count / 3);
  for (std::size_t c = 0; c < per_kind; ++c) {
    const Segment s = gen.segment(config.m_max);
    run("St" + s.str(), steinberg(s));
  }
  for (std::size_t c = 0; c < per_kind; ++c) {
    const auto segs = gen.segments(config.m_max, 3);
    if (segs.size() < 2) {
      run("St" + segs.front().str(), steinberg(segs.front()));
      continue;
    }
    const std::size_t split = 1 + gen.uniform(segs.size() - 1);
    const HModule left = steinberg_product({segs.begin(), segs.begin() + static_cast<long>(split)}, config.dim_cap);
    const HModule right = steinberg_product({segs.begin() + static_cast<long>(split), segs.end()}, config.dim_cap);
    run("induce " + segments_json(segs).dump() + " split " + std::to_string(split),
        induce(left, right, config.dim_cap));
  }
  for (std::size_t c = 0; rep.checks.size() < std::max<std::size_t>(config.case_count, 3); ++c) {
    const Weight w = gen.weight();
    if (gamma_dimension(w) > config.dim_cap) continue;
    const HModule mod = gamma_module(w, config.dim_cap);
    run("gamma " + w.str(), mod);
    if (c % 4 == 0) run("dual of gamma " + w.str(), hermitian_dual_mod(mod));
  }
  rep.inputs = {{"seed", config.seed}, {"modules", rep.checks.size()}};
  rep.payload = {{"max_dim", max_dim}};
  return rep;
}

Report verify_dimension_formula(const SuiteConfig& config) {
  CaseGenerator gen(config, 4);
  Report rep;
  rep.case_id = "dimension_formula";
  while (rep.checks.size() < config.case_count) {
    const Weight w = gen.weight();
    const std::size_t predicted = multinomial(w.mu());
    if (predicted > config.dim_cap) continue;
    rep.expect_equal("dim gamma " + w.str(), predicted, gamma_module(w, config.dim_cap).dim());
  }
  rep.inputs = {{"seed", config.seed}, {"cases", config.case_count}};
  return rep;
}

Report verify_jacquet_base_case(const SuiteConfig& config) {
  CaseGenerator gen(config, 5);
  Report rep;
  rep.case_id = "jacquet_base_case";
  for (std::size_t c = 0; c < config.case_count; ++c) {
    const Segment s = gen.segment(config.m_max);
    const HModule st = steinberg(s);
    const HModule hit = jacquet(st, s.start());
    const HModule expected = steinberg(truncate_left(s));
    rep.expect_equal("Jac_start St" + s.str(), to_json(y_weight_multiset(expected)),
                     to_json(y_weight_multiset(hit)));
    Scalar other = s.start() + Scalar(1 + static_cast<long>(gen.uniform(3)));
    if (gen.uniform(2) == 0) other = gen.translation_class() + Scalar::half() + Scalar(gen.uniform_int(-3, 3));
    if (other == s.start()) other += Scalar(1);
    rep.expect_equal("dim Jac_" + other.str() + " St" + s.str(), 0, jacquet(st, other).dim());
  }
  rep.inputs = {{"seed", config.seed}, {"cases", config.case_count}};
  return rep;
}

std::vector<Report> run_suite(const SuiteConfig& config) {
  config.validate();
  std::vector<Report> out;
  out.push_back(verify_relation_suite(config));
  out.push_back(verify_dimension_formula(config));
  out.push_back(verify_jacquet_base_case(config));

  {
    CaseGenerator gen(config, 6);
    Report agg;
    agg.case_id = "eigenvalue_prop";
    for (std::size_t c = 0; c < config.case_count; ++c) absorb(agg, verify_eigenvalue_prop(gen.weight(), config.dim_cap));
    out.push_back(std::move(agg));
  }
  out.push_back(verify_theorem_main_k(config));
  {
    CaseGenerator gen(config, 7);
    Report agg;
    agg.case_id = "theorem_main_module";
    for (std::size_t c = 0; c < config.case_count; ++c) {
      const Weight w = gen.weight();
      absorb(agg, verify_theorem_main_module(w, pick_index(gen, w), config.dim_cap));
    }
    out.push_back(std::move(agg));
  }
  {
    CaseGenerator gen(config, 8);
    Report agg;
    agg.case_id = "leibniz_module";
    for (std::size_t c = 0; c < config.case_count; ++c) {
      auto segs = gen.segments(config.m_max, 3);
      const std::size_t split = gen.uniform(segs.size() + 1);
      std::vector<Segment> left(segs.begin(), segs.begin() + static_cast<long>(split));
      std::vector<Segment> right(segs.begin() + static_cast<long>(split), segs.end());
      Scalar a = segs[gen.uniform(segs.size())].start();
      if (gen.uniform(4) == 0) a += Scalar(1);
      absorb(agg, verify_leibniz_module(left, right, a, config.dim_cap));
    }
    out.push_back(std::move(agg));
  }
  {
    CaseGenerator gen(config, 9);
    Report agg;
    agg.case_id = "dual_suite";
    for (std::size_t c = 0; c < config.case_count; ++c) {
      auto segs = gen.segments(config.m_max, 3);
      if (c % 4 == 0) {
        // Force a genuinely complex case.
        const Scalar shift(mpq_class(0), mpq_class(1, 2));
        for (auto& s : segs) s = Segment::make(s.start() + shift, s.end() + shift);
      }
      Scalar a = segs[gen.uniform(segs.size())].start();
      if (gen.uniform(4) == 0) a += Scalar(1);
      absorb(agg, verify_dual_suite(segs, a, config.dim_cap));
    }
    out.push_back(std::move(agg));
  }
  out.push_back(verify_kring_identities(config));
  std::stable_sort(out.begin(), out.end(),
                   [](const Report& a, const Report& b) { return a.case_id < b.case_id; });
  return out;
}

}  // namespace hecke
