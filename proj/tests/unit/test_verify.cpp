#include <doctest.h>

#include "hecke/error.hpp"
#include "hecke/json_io.hpp"
#include "hecke/verify.hpp"
#include "oracles.hpp"

using hecke::HModule;
using hecke::Scalar;
using hecke::Segment;
using hecke::Weight;

namespace {

Scalar s(const char* t) { return Scalar::parse(t); }
Segment seg(const char* a, const char* b) { return hecke::make_segment(s(a), s(b)); }

const hecke::Check* find(const hecke::Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("module-level theorem on fixed weights") {
  const auto r = hecke::verify_theorem_main_module(Weight({s("2"), s("1")}, {s("0"), s("0")}), 1, 2000);
  CHECK(r.pass());
  CHECK(r.level == "module");
  REQUIRE(find(r, "dim Jac") != nullptr);
  CHECK(find(r, "dim Jac")->actual == 3);

  const auto dropped = hecke::verify_theorem_main_module(Weight({s("2"), s("1")}, {s("0"), s("5")}), 2, 2000);
  CHECK(dropped.pass());
  CHECK(find(dropped, "dim Jac")->actual == 0);

  const auto none = hecke::verify_theorem_main_module(Weight({s("2"), s("1/3")}, {s("0"), s("1/3")}), 2, 2000);
  CHECK(none.pass());
  CHECK(find(none, "dim Jac")->actual == 0);

  CHECK_THROWS_AS(hecke::verify_theorem_main_module(Weight({s("1")}, {s("0")}), 2, 2000), hecke::IndexOutOfRange);
}

TEST_CASE("checks degrade to the K level above the cap") {
  const Weight big({s("3"), s("3")}, {s("0"), s("0")});
  const auto r = hecke::verify_theorem_main_module(big, 1, 10);
  CHECK(r.level == "kgroup");
  CHECK(r.pass());
  CHECK(hecke::verify_eigenvalue_prop(big, 10).level == "kgroup");
  const auto l = hecke::verify_leibniz_module({seg("0", "2")}, {seg("0", "2")}, Scalar(0), 10);
  CHECK(l.level == "kgroup");
  CHECK(l.pass());
  const auto d = hecke::verify_dual_suite({seg("0", "2"), seg("1", "3")}, Scalar(0), 10);
  CHECK(d.level == "kgroup");
  CHECK(d.pass());
}

TEST_CASE("y1 spectrum verifier") {
  CHECK(hecke::verify_eigenvalue_prop(Weight({s("2"), s("1")}, {s("0"), s("0")}), 2000).pass());
  CHECK(hecke::verify_eigenvalue_prop(Weight({s("2"), s("1")}, {s("0"), s("-3")}), 2000).pass());
  CHECK(hecke::verify_eigenvalue_prop(Weight({s("2"), s("-1")}, {s("0"), s("0")}), 2000).pass());
  CHECK(hecke::verify_eigenvalue_prop(Weight({s("1+i/2"), s("1/3")}, {s("i/2"), s("-2/3")}), 2000).pass());
}

TEST_CASE("Leibniz rule for Jacquet dimensions") {
  const auto r = hecke::verify_leibniz_module(hecke::steinberg(seg("0", "1")), hecke::steinberg(seg("0", "0")),
                                              Scalar(0), 2000);
  CHECK(r.pass());
  CHECK(r.checks.front().actual == 3);
  const auto off = hecke::verify_leibniz_module(hecke::steinberg(seg("0", "1")), hecke::steinberg(seg("0", "0")),
                                                Scalar(4), 2000);
  CHECK(off.pass());
  CHECK(off.checks.front().actual == 0);
  const auto triv = hecke::verify_leibniz_module(hecke::steinberg(seg("0", "1")), HModule::trivial(), Scalar(0), 2000);
  CHECK(triv.pass());
  CHECK(triv.checks.front().actual == 1);
  CHECK(hecke::verify_leibniz_module(std::vector<Segment>{}, std::vector<Segment>{seg("1", "2")}, Scalar(1), 2000).pass());
  CHECK_THROWS_AS(hecke::verify_leibniz_module(hecke::steinberg(seg("0", "3")), hecke::steinberg(seg("0", "3")),
                                               Scalar(0), 5),
                  hecke::DimensionCap);
}

TEST_CASE("Hermitian dual suite") {
  const auto g = hecke::verify_dual_suite(hecke::gamma_module(Weight({s("2"), s("1")}, {s("0"), s("0")})), s("1/2"));
  CHECK(g.pass());
  const auto* dims = find(g, "dim Jac_a(M) = dim Jac^{-conj a}(M*)");
  REQUIRE(dims != nullptr);
  CHECK(dims->actual == 3);
  const auto gauss = hecke::verify_dual_suite({seg("1/2+i/2", "3/2+i/2"), seg("1/2+i/2", "1/2+i/2")},
                                              s("1/2+i/2"), 2000);
  CHECK(gauss.pass());
  const auto empty = hecke::jacquet(hecke::steinberg(seg("0", "1")), Scalar(5));
  CHECK(hecke::verify_dual_suite(empty, Scalar(0)).pass());
}

TEST_CASE("aggregate suites pass and are deterministic") {
  hecke::SuiteConfig config;
  config.case_count = 12;
  const auto a = hecke::run_suite(config);
  const auto b = hecke::run_suite(config);
  REQUIRE(a.size() == 9);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CAPTURE(a[k].case_id);
    CHECK(a[k].pass());
    CHECK(hecke::to_json(a[k]).dump() == hecke::to_json(b[k]).dump());
    if (k > 0) CHECK(a[k - 1].case_id < a[k].case_id);
  }
  config.seed = 8;
  CHECK(hecke::to_json(hecke::run_suite(config)[0]).dump() != hecke::to_json(a[0]).dump());
}

TEST_CASE("suite pieces") {
  hecke::SuiteConfig config;
  config.case_count = 20;
  CHECK(hecke::verify_dimension_formula(config).checks.size() == 20);
  CHECK(hecke::verify_jacquet_base_case(config).pass());
  CHECK(hecke::verify_kring_identities(config).pass());
  const auto rel = hecke::verify_relation_suite(config);
  CHECK(rel.pass());
  CHECK(rel.checks.size() >= 20);
  const auto k = hecke::verify_theorem_main_k(config);
  CHECK(k.pass());
  CHECK(k.payload["triples"] == k.checks.size());
}

TEST_CASE("config validation and case generation") {
  hecke::SuiteConfig config;
  config.m_max = 7;
  config.dim_cap = 720;
  CHECK_THROWS_AS(config.validate(), hecke::Error);
  config.m_max = 6;
  CHECK_NOTHROW(config.validate());
  config.translation_classes.clear();
  CHECK_THROWS_AS(config.validate(), hecke::Error);

  hecke::SuiteConfig c2;
  hecke::CaseGenerator g1(c2, 5), g2(c2, 5);
  for (int k = 0; k < 50; ++k) {
    const auto w1 = g1.weight(), w2 = g2.weight();
    CHECK(w1 == w2);
    CHECK(w1.n() <= c2.n_max);
    REQUIRE(w1.m_of().has_value());
    CHECK(*w1.m_of() <= static_cast<std::int64_t>(c2.m_max));
    const auto u = g1.uniform(7);
    CHECK(u == g2.uniform(7));
    CHECK(u < 7);
  }
  CHECK(g1.weight(false, 4).m_of() == 4);
}
