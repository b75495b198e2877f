#include <doctest.h>

#include <algorithm>
#include <set>

#include "hecke/error.hpp"
#include "hecke/realside.hpp"

using hecke::Direction;
using hecke::KElement;
using hecke::KHCElement;
using hecke::Multisegment;
using hecke::Scalar;
using hecke::Segment;
using hecke::Weight;

namespace {

Scalar s(const char* t) { return Scalar::parse(t); }
Segment seg(const char* a, const char* b) { return hecke::make_segment(s(a), s(b)); }
KElement st(const char* a, const char* b) { return KElement::steinberg(seg(a, b)); }
std::vector<Scalar> v(std::initializer_list<const char*> xs) {
  std::vector<Scalar> out;
  for (auto x : xs) out.push_back(s(x));
  return out;
}
Weight w(std::initializer_list<const char*> l, std::initializer_list<const char*> r) { return Weight(v(l), v(r)); }

}  // namespace

TEST_CASE("weights") {
  const Weight x = w({"2", "1"}, {"0", "0"});
  CHECK(x.mu() == std::vector<std::int64_t>{2, 1});
  CHECK(x.m_of() == 3);
  CHECK(x.segment(0) == seg("1/2", "3/2"));
  CHECK(x.nu() == v({"2", "1"}));
  CHECK(x.raised_right(1) == w({"2", "1"}, {"0", "1"}));
  CHECK(x.lowered_left(0) == w({"1", "1"}, {"0", "0"}));
  CHECK(x.permuted_left({1, 0}) == w({"1", "2"}, {"0", "0"}));
  CHECK_FALSE(w({"0", "1"}, {"1", "0"}).m_of().has_value());
  CHECK(w({"0", "1"}, {"1", "0"}).mu_total() == 0);
  CHECK_THROWS_AS(w({"1/2"}, {"0"}), hecke::NonIntegralWeight);
  CHECK_THROWS_AS(w({"i"}, {"0"}), hecke::NonIntegralWeight);
  CHECK_THROWS_AS(w({"1", "2"}, {"0"}), hecke::NonIntegralWeight);
  CHECK(hecke::weight_of(hecke::canonical_symbol(x)) == x.permuted_left({1, 0}));
  CHECK(hecke::canonical_symbol(w({"1", "2"}, {"0", "0"})) == hecke::canonical_symbol(w({"2", "1"}, {"0", "0"})));
}

TEST_CASE("integral_weyl_classes") {
  using Classes = std::vector<std::vector<std::size_t>>;
  CHECK(hecke::integral_weyl_classes(v({"2", "1", "1/3"})) == Classes{{0, 1}, {2}});
  CHECK(hecke::integral_weyl_classes(v({"0", "i", "1"})) == Classes{{0, 2}, {1}});
  CHECK(hecke::integral_weyl_classes(v({"5", "5", "5"})) == Classes{{0, 1, 2}});
}

TEST_CASE("gamma_k") {
  const Weight x = w({"2", "1"}, {"0", "0"});
  CHECK(hecke::gamma_k(x, 3) == st("1/2", "3/2") * st("1/2", "1/2"));
  CHECK(hecke::gamma_k(x, 2).is_zero());
  CHECK(hecke::gamma_k(w({"0", "0", "0"}, {"0", "0", "0"}), 0) == KElement::unit());
  CHECK(hecke::gamma_k(w({"3", "-1"}, {"0", "0"}), 2).is_zero());
  KHCElement sum = KHCElement::principal_series(x, 2);
  sum += KHCElement::principal_series(w({"1", "1"}, {"0", "0"}));
  CHECK(hecke::gamma_k(sum, 3) == 2 * (st("1/2", "3/2") * st("1/2", "1/2")));
  CHECK(hecke::gamma_k(sum, 2) == st("1/2", "1/2") * st("1/2", "1/2"));
}

TEST_CASE("translation") {
  const Weight x = w({"2", "1"}, {"0", "0"});
  KHCElement expected = KHCElement::principal_series(w({"2", "1"}, {"1", "0"}));
  expected += KHCElement::principal_series(w({"2", "1"}, {"0", "1"}));
  CHECK(hecke::translate_weight(x, 1, Direction::RaiseRight) == expected);
  CHECK(hecke::translate_k(KHCElement::principal_series(x), 1, Direction::RaiseRight) == expected);
  CHECK(hecke::translate_weight(w({"2", "1"}, {"0", "5"}), 1, Direction::RaiseRight) ==
        KHCElement::principal_series(w({"2", "1"}, {"1", "5"})));
  CHECK(hecke::translate_weight(w({"2", "2"}, {"0", "1"}), 1, Direction::LowerLeft) ==
        KHCElement::principal_series(w({"1", "2"}, {"0", "1"})) +
            KHCElement::principal_series(w({"2", "1"}, {"0", "1"})));
  CHECK_THROWS_AS(hecke::translate_weight(x, 3, Direction::RaiseRight), hecke::IndexOutOfRange);
  CHECK_THROWS_AS(hecke::translate_weight(x, 0, Direction::LowerLeft), hecke::IndexOutOfRange);
  CHECK_THROWS_AS(hecke::translate_k(KHCElement::principal_series(x), 3, Direction::RaiseRight),
                  hecke::IndexOutOfRange);
}

TEST_CASE("direction names") {
  CHECK(hecke::direction_from_string("raise") == Direction::RaiseRight);
  CHECK(hecke::direction_from_string("lower-left") == Direction::LowerLeft);
  CHECK(hecke::direction_from_string(hecke::to_string(Direction::LowerLeft)) == Direction::LowerLeft);
  CHECK_THROWS_AS(hecke::direction_from_string("sideways"), hecke::Error);
}

TEST_CASE("multisegment_of") {
  const Weight x = w({"2", "1"}, {"0", "0"});
  const Multisegment expected{seg("1/2", "3/2"), seg("1/2", "1/2")};
  CHECK(hecke::multisegment_of({0, 1}, x) == expected);
  CHECK(hecke::multisegment_of({1, 0}, x) == expected);
  CHECK(hecke::multisegment_of({0, 1}, w({"0", "-1"}, {"0", "0"})).empty());
  CHECK_THROWS_AS(hecke::multisegment_of({1, 0}, w({"1", "1/3"}, {"0", "1/3"})), hecke::NonIntegralDifference);
}

TEST_CASE("integral Weyl group") {
  CHECK(hecke::integral_weyl_group(v({"0", "1", "2"})).size() == 6);
  CHECK(hecke::integral_weyl_group(v({"0", "1/3", "2"})).size() == 2);
  CHECK(hecke::integral_weyl_group(v({"0", "i", "1/3"})).size() == 1);
  const auto sampled = hecke::integral_weyl_group(v({"0", "1", "2", "3", "4", "5", "6"}), 50, 3);
  CHECK(sampled.size() == 50);
  CHECK(std::set<hecke::Permutation>(sampled.begin(), sampled.end()).size() == 50);
  CHECK(std::find(sampled.begin(), sampled.end(), hecke::Permutation{0, 1, 2, 3, 4, 5, 6}) != sampled.end());
  CHECK(hecke::integral_weyl_group(v({"0", "1", "2", "3", "4", "5", "6"}), 50, 3) == sampled);
}

TEST_CASE("K-level commutativity on the worked example") {
  const Weight x = w({"2", "1"}, {"0", "0"});
  const auto rep = hecke::verify_kgroup_commutativity(x, 1, Direction::RaiseRight);
  REQUIRE(rep.cases.size() == 1);  // both orderings give the same symbol
  CHECK(rep.all_equal());
  CHECK(rep.cases[0].path_a == st("3/2", "3/2") * st("1/2", "1/2") + st("1/2", "3/2"));
  CHECK(rep.cases[0].path_b == rep.cases[0].path_a);
}

TEST_CASE("K-level commutativity edge cases") {
  // Zero total: both paths vanish.
  const auto zero = hecke::verify_kgroup_commutativity(w({"0", "0"}, {"0", "0"}), 2, Direction::RaiseRight);
  CHECK(zero.all_equal());
  for (const auto& c : zero.cases) CHECK(c.path_a.is_zero());
  // Mixed translation classes.
  for (auto dir : {Direction::RaiseRight, Direction::LowerLeft}) {
    for (std::size_t i = 1; i <= 3; ++i) {
      CHECK(hecke::verify_kgroup_commutativity(w({"2", "1", "1+i/2"}, {"0", "0", "i/2"}), i, dir).all_equal());
      CHECK(hecke::verify_kgroup_commutativity(w({"3", "1", "2"}, {"1", "0", "1"}), i, dir).all_equal());
    }
  }
  CHECK_THROWS_AS(hecke::verify_kgroup_commutativity(w({"1"}, {"0"}), 2, Direction::RaiseRight),
                  hecke::IndexOutOfRange);
}
