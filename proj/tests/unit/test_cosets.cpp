#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hecke/cosets.hpp"
#include "oracles.hpp"

using hecke::CosetBasis;
using hecke::Permutation;

namespace {

// Composition in one-line notation: (p * q)(k) = p(q(k)).
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[q[k]];
  return out;
}

Permutation simple(std::size_t m, std::size_t i) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::swap(p[i], p[i + 1]);
  return p;
}

Permutation from_word(std::size_t m, const std::vector<std::size_t>& word) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (auto i : word) p = compose(p, simple(m, i));
  return p;
}

}  // namespace

TEST_CASE("lengths and reduced words") {
  CHECK(hecke::permutation_length({0, 1, 2}) == 0);
  CHECK(hecke::permutation_length({2, 1, 0}) == 3);
  for (std::size_t m = 1; m <= 5; ++m) {
    Permutation p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      const auto word = hecke::reduced_word(p);
      CHECK(word.size() == hecke::permutation_length(p));
      CHECK(from_word(m, word) == p);
    } while (std::next_permutation(p.begin(), p.end()));
    const auto w0 = hecke::longest_element_word(m);
    CHECK(w0.size() == m * (m - 1) / 2);
    Permutation rev(m);
    for (std::size_t k = 0; k < m; ++k) rev[k] = m - 1 - k;
    CHECK(from_word(m, w0) == rev);
  }
}

TEST_CASE("coset representatives") {
  for (std::size_t m1 = 0; m1 <= 4; ++m1) {
    for (std::size_t m2 = 0; m2 <= 4; ++m2) {
      const CosetBasis basis(m1, m2);
      const std::size_t m = m1 + m2;
      CHECK(basis.size() == oracle::binomial(m, m1));
      CHECK(hecke::permutation_length(basis.rep(0)) == 0);
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& d = basis.rep(idx);
        CHECK(std::is_sorted(d.begin(), d.begin() + static_cast<long>(m1)));
        CHECK(std::is_sorted(d.begin() + static_cast<long>(m1), d.end()));
        CHECK(basis.index_of(d) == idx);
        CHECK(from_word(m, basis.word(idx)) == d);
        if (idx > 0) {
          CHECK(hecke::permutation_length(basis.rep(idx - 1)) <= hecke::permutation_length(d));
          const auto [i, parent] = basis.peel(idx);
          CHECK(compose(simple(m, i), basis.rep(parent)) == d);
          CHECK(hecke::permutation_length(basis.rep(parent)) + 1 == hecke::permutation_length(d));
        }
        for (std::size_t i = 0; i + 1 < m; ++i) {
          const auto act = basis.left_multiply(i, idx);
          const Permutation sd = compose(simple(m, i), d);
          if (act.crosses) {
            CHECK(basis.rep(act.target) == sd);
          } else {
            CHECK(compose(d, simple(m, act.parabolic)) == sd);
            CHECK(act.parabolic != m1 - 1);
          }
        }
      }
    }
  }
}
