#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "hecke/error.hpp"
#include "hecke/hmodule.hpp"
#include "oracles.hpp"

using hecke::HModule;
using hecke::Scalar;
using hecke::Segment;
using hecke::SparseMatrix;
using hecke::Weight;

namespace {

Scalar s(const char* t) { return Scalar::parse(t); }
Segment seg(const char* a, const char* b) { return hecke::make_segment(s(a), s(b)); }

HModule perturbed_y(const HModule& mod, std::size_t j, const Scalar& shift) {
  auto y = mod.y_matrices();
  y[j - 1] += SparseMatrix::scalar(mod.dim(), shift);
  return HModule(mod.m(), mod.dim(), mod.s_matrices(), y, mod.labels(), mod.eigen_candidates());
}

}  // namespace

TEST_CASE("steinberg modules") {
  const HModule st = hecke::steinberg(seg("1/2", "5/2"));
  CHECK(st.m() == 3);
  CHECK(st.dim() == 1);
  CHECK(st.s(1).at(0, 0) == Scalar(-1));
  CHECK(st.s(2).at(0, 0) == Scalar(-1));
  CHECK(st.y(1).at(0, 0) == s("1/2"));
  CHECK(st.y(2).at(0, 0) == s("3/2"));
  CHECK(st.y(3).at(0, 0) == s("5/2"));
  CHECK(hecke::steinberg(Segment()) == HModule::trivial());
  CHECK(HModule::trivial().m() == 0);
  CHECK(HModule::trivial().dim() == 1);
  const HModule gi = hecke::steinberg(seg("i", "i"));
  CHECK(gi.m() == 1);
  CHECK(gi.y(1).at(0, 0) == Scalar::imaginary_unit());
  CHECK(hecke::check_relations(st).pass());
}

TEST_CASE("evaluation modules") {
  CHECK(hecke::evaluation(Scalar(0)).y(1).at(0, 0) == Scalar(0));
  CHECK(hecke::evaluation(s("3/2")).y(1).at(0, 0) == s("3/2"));
  CHECK(hecke::evaluation(s("3/2")) .m() == 1);
}

TEST_CASE("module construction validates shapes") {
  CHECK_THROWS_AS(HModule(2, 1, {}, {SparseMatrix::identity(1), SparseMatrix::identity(1)}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HModule(1, 2, {}, {SparseMatrix::identity(1)}, {}, {}), std::invalid_argument);
  const HModule ok(1, 2, {}, {SparseMatrix::identity(2)}, {}, {Scalar(1), Scalar(1)});
  CHECK(ok.labels() == std::vector<std::string>{"e0", "e1"});
  CHECK(ok.eigen_candidates() == std::vector<Scalar>{Scalar(1)});
}

TEST_CASE("induction") {
  const HModule m = hecke::induce(hecke::steinberg(seg("0", "1")), hecke::steinberg(seg("0", "0")));
  CHECK(m.m() == 3);
  CHECK(m.dim() == 3);
  CHECK(hecke::check_relations(m).pass());

  const HModule st = hecke::steinberg(seg("1", "3"));
  CHECK(hecke::induce(st, HModule::trivial()).s_matrices() == st.s_matrices());
  CHECK(hecke::induce(st, HModule::trivial()).y_matrices() == st.y_matrices());
  CHECK(hecke::induce(HModule::trivial(), st).y_matrices() == st.y_matrices());
  CHECK_THROWS_AS(hecke::induce(st, st, 10), hecke::DimensionCap);
}

TEST_CASE("two points: the 2x2 matrices and their characteristic polynomial") {
  for (const auto& [a, b] : {std::pair{s("0"), s("5")}, std::pair{s("1/2"), s("1/2")}, std::pair{s("i"), s("-2")}}) {
    const HModule m = hecke::induce(hecke::steinberg(Segment::make(a, a)), hecke::steinberg(Segment::make(b, b)));
    REQUIRE(m.dim() == 2);
    const auto y1 = m.y(1).to_dense();
    const Scalar trace = y1[0][0] + y1[1][1];
    const Scalar det = y1[0][0] * y1[1][1] - y1[0][1] * y1[1][0];
    CHECK(trace == a + b);
    CHECK(det == a * b);
    const auto y2 = m.y(2).to_dense();
    CHECK(y2[0][0] + y2[1][1] == a + b);
    CHECK(hecke::check_relations(m).pass());
  }
}

TEST_CASE("gamma modules") {
  const HModule g = hecke::gamma_module(Weight({Scalar(2), Scalar(1)}, {Scalar(0), Scalar(0)}));
  CHECK(g.m() == 3);
  CHECK(g.dim() == 3);
  CHECK(hecke::check_relations(g).pass());
  CHECK(hecke::gamma_module(Weight({Scalar(1), Scalar(1)}, {Scalar(0), Scalar(0)})).dim() == 2);
  CHECK(hecke::gamma_module(Weight({Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)})) == HModule::trivial());
  CHECK_THROWS_AS(hecke::gamma_module(Weight({Scalar(2), Scalar(-1)}, {Scalar(0), Scalar(0)})), hecke::NegativeMu);
  CHECK_THROWS_AS(hecke::gamma_module(Weight({Scalar(3), Scalar(3)}, {Scalar(0), Scalar(0)}), 19),
                  hecke::DimensionCap);
  CHECK(hecke::gamma_dimension(Weight({Scalar(3), Scalar(3)}, {Scalar(0), Scalar(0)})) == 20);
  CHECK(hecke::gamma_dimension(Weight({Scalar(3), Scalar(-3)}, {Scalar(0), Scalar(0)})) == 0);
}

TEST_CASE("relations on random products, with dimension checks") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> start(-2, 2), len(1, 3), count(1, 3);
  const Scalar offsets[] = {Scalar(0), s("1/3"), s("i/2")};
  for (int k = 0; k < 25; ++k) {
    std::vector<Segment> segs;
    std::vector<std::int64_t> lengths;
    std::size_t m = 0;
    for (long c = count(rng); c > 0 && m < 5; --c) {
      const Scalar a = offsets[static_cast<std::size_t>(start(rng) + 2) % 3] + Scalar(start(rng));
      const long l = std::min<long>(len(rng), 5 - static_cast<long>(m));
      segs.push_back(Segment::make(a, a + Scalar(l - 1)));
      lengths.push_back(l);
      m += static_cast<std::size_t>(l);
    }
    const HModule mod = hecke::steinberg_product(segs);
    CHECK(mod.m() == m);
    CHECK(mod.dim() == oracle::multinomial(lengths));
    CHECK(hecke::check_relations(mod).pass());
  }
}

TEST_CASE("a perturbed module fails at the first cross relation") {
  const HModule g = hecke::gamma_module(Weight({Scalar(2), Scalar(1)}, {Scalar(0), Scalar(0)}));
  const auto rep = hecke::check_relations(perturbed_y(g, 2, Scalar(1)));
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "s1y1-y2s1=1");

  auto s = g.s_matrices();
  s[0] = Scalar(2) * s[0];
  const HModule bad_s(g.m(), g.dim(), s, g.y_matrices(), g.labels(), g.eigen_candidates());
  CHECK(hecke::check_relations(bad_s).first_failure()->name == "s1^2=1");
}

TEST_CASE("dimension cap from the environment") {
  ::setenv("HECKE_DIM_CAP", "17", 1);
  CHECK(hecke::default_dim_cap() == 17);
  ::setenv("HECKE_DIM_CAP", "junk", 1);
  CHECK(hecke::default_dim_cap() == hecke::kDefaultDimCap);
  ::unsetenv("HECKE_DIM_CAP");
  CHECK(hecke::default_dim_cap() == hecke::kDefaultDimCap);
}
