#include <doctest.h>

#include <random>

#include "hecke/sparse.hpp"
#include "oracles.hpp"

using hecke::Scalar;
using hecke::SparseMatrix;

namespace {

oracle::Dense random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
  std::uniform_int_distribution<long> val(-3, 3), pct(0, 99);
  oracle::Dense out(r, std::vector<Scalar>(c));
  for (auto& row : out) {
    for (auto& x : row) {
      if (pct(rng) < density) x = Scalar(mpq_class(val(rng)), mpq_class(val(rng) % 2));
    }
  }
  return out;
}

// Upper triangular with a few repeated diagonal values, so generalized
// eigenspaces are larger than eigenspaces.
oracle::Dense random_triangular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> val(-2, 2), diag(0, 2);
  oracle::Dense out(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r) {
    out[r][r] = Scalar(diag(rng));
    for (std::size_t c = r + 1; c < n; ++c) out[r][c] = Scalar(val(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("sparse arithmetic agrees with dense") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 40; ++k) {
    const auto a = random_dense(rng, 4, 5, 40), b = random_dense(rng, 5, 3, 40);
    const auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK((sa * sb).to_dense() == oracle::multiply(a, b));
    CHECK(sa.transpose().transpose() == sa);
    CHECK(sa.conjugate_transpose().at(1, 2) == sa.at(2, 1).conj());
    CHECK((sa + sa - sa) == sa);
    CHECK((Scalar(2) * sa).at(0, 0) == Scalar(2) * a[0][0]);
  }
  CHECK(SparseMatrix::identity(3) == SparseMatrix::scalar(3, Scalar(1)));
  CHECK(SparseMatrix::scalar(3, Scalar(0)).nonzeros() == 0);
}

TEST_CASE("vector helpers and row selection") {
  hecke::SparseVector y{{0, Scalar(1)}, {2, Scalar(2)}};
  hecke::axpy(y, Scalar(-2), {{2, Scalar(1)}, {3, Scalar(1)}});
  CHECK(y == hecke::SparseVector{{0, Scalar(1)}, {3, Scalar(-2)}});
  const auto m = SparseMatrix::from_dense({{1, 2}, {3, 4}, {5, 6}});
  CHECK(m.select_rows({2, 0}).to_dense() == oracle::Dense{{5, 6}, {1, 2}});
  CHECK(m.apply({{1, Scalar(1)}}) == hecke::SparseVector{{0, Scalar(2)}, {1, Scalar(4)}, {2, Scalar(6)}});
  CHECK(SparseMatrix::from_columns(3, {{{0, Scalar(1)}}, {{2, Scalar(5)}}}).to_dense() ==
        oracle::Dense{{1, 0}, {0, 0}, {0, 5}});
}

TEST_CASE("kronecker products with identities") {
  const auto a = SparseMatrix::from_dense({{1, 2}, {3, 4}});
  CHECK(a.kron_identity_right(2).to_dense() ==
        oracle::Dense{{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}});
  CHECK(a.kron_identity_left(2).to_dense() ==
        oracle::Dense{{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 1, 2}, {0, 0, 3, 4}});
  CHECK(a.kron_identity_right(1) == a);
}

TEST_CASE("kernel dimension matches rank-nullity") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 60; ++k) {
    const auto a = random_dense(rng, 4, 6, 35);
    const auto sub = hecke::kernel(SparseMatrix::from_dense(a));
    CHECK(sub.dim() == 6 - oracle::rank(a));
    CHECK((SparseMatrix::from_dense(a) * sub.basis).nonzeros() == 0);
    CHECK(sub.basis.select_rows(sub.coordinate_rows) == SparseMatrix::identity(sub.dim()));
  }
}

TEST_CASE("generalized eigenspaces match the dense power oracle") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const auto a = random_triangular(rng, 6);
    const auto sa = SparseMatrix::from_dense(a);
    std::size_t total = 0;
    for (long c = 0; c <= 2; ++c) {
      const auto sub = hecke::generalized_eigenspace(sa, Scalar(c));
      CHECK(sub.dim() == oracle::generalized_eigenspace_dim(a, Scalar(c)));
      total += sub.dim();
      SparseMatrix restricted;
      CHECK(hecke::restrict_to(sa, sub, restricted, true));
      CHECK(sub.basis * restricted == sa * sub.basis);
    }
    CHECK(total == 6);
  }
}

TEST_CASE("restrict_to reports a non-invariant subspace") {
  const auto a = SparseMatrix::from_dense({{0, 0}, {1, 0}});
  hecke::Subspace sub{SparseMatrix::from_dense({{1}, {0}}), {0}};
  SparseMatrix out;
  CHECK_FALSE(hecke::restrict_to(a, sub, out, true));
}
