#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/kring.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

using Permutation = std::vector<std::size_t>;  // one-line notation, 0-based

/// A weight (lambdaL, lambdaR) in C^n x C^n with mu = lambdaL - lambdaR
/// integral. Construction enforces integrality.
class Weight {
 public:
  /// Throws NonIntegralWeight if some lambdaL[k] - lambdaR[k] is not an
  /// integer, or if the lengths differ or are zero.
  Weight(std::vector<Scalar> left, std::vector<Scalar> right);

  std::size_t n() const { return left_.size(); }
  const std::vector<Scalar>& left() const { return left_; }
  const std::vector<Scalar>& right() const { return right_; }

  std::vector<std::int64_t> mu() const;
  std::vector<Scalar> nu() const;
  /// Sum of mu, when every mu_k >= 0.
  std::optional<std::int64_t> m_of() const;
  /// Sum of mu regardless of sign.
  std::int64_t mu_total() const;

  /// [lambdaR_k + 1/2, lambdaL_k - 1/2].
  Segment segment(std::size_t k) const;

  /// (lambdaL[perm[k]])_k, lambdaR unchanged.
  Weight permuted_left(const Permutation& perm) const;
  /// lambdaR + e_k (0-based k).
  Weight raised_right(std::size_t k) const;
  /// lambdaL - e_k (0-based k).
  Weight lowered_left(std::size_t k) const;

  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Scalar> left_;
  std::vector<Scalar> right_;
};

/// Principal-series symbol: the coordinate pairs (lambdaL_k, lambdaR_k)
/// sorted lexicographically.
using HCSymbol = std::vector<std::pair<Scalar, Scalar>>;

HCSymbol canonical_symbol(const Weight& w);
Weight weight_of(const HCSymbol& sym);

/// Integer combination of principal series X(lambda) in the Harish-Chandra
/// K-group, keyed by canonical symbol.
class KHCElement {
 public:
  using Terms = std::map<HCSymbol, std::int64_t>;

  KHCElement() = default;
  static KHCElement principal_series(const Weight& w, std::int64_t coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const HCSymbol& sym, std::int64_t coeff);
  std::int64_t coefficient(const Weight& w) const;

  KHCElement& operator+=(const KHCElement& rhs);
  friend KHCElement operator+(KHCElement a, const KHCElement& b) { return a += b; }
  friend bool operator==(const KHCElement&, const KHCElement&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

enum class Direction { RaiseRight, LowerLeft };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

/// Partition of {0..n-1}: k ~ l iff values[k] - values[l] is an integer.
/// Classes are listed in order of their smallest member.
std::vector<std::vector<std::size_t>> integral_weyl_classes(const std::vector<Scalar>& values);

/// The image under Gamma_{n,m}: each symbol with all mu_k >= 0 and sum m maps
/// to the monomial of its segments; every other symbol maps to 0.
KElement gamma_k(const KHCElement& x, std::int64_t m);
KElement gamma_k(const Weight& w, std::int64_t m);

/// Translation in the K-group. For each symbol, `i` (1-based) indexes the
/// symbol's own canonical coordinate list; RaiseRight sums X(L, R + e_k) over
/// k with R_k = R_i, LowerLeft sums X(L - e_k, R) over k with L_k = L_i.
/// Throws IndexOutOfRange.
KHCElement translate_k(const KHCElement& x, std::size_t i, Direction dir);

/// Same as translate_k but with `i` (1-based) indexing the coordinates of w
/// as given, before canonicalization.
KHCElement translate_weight(const Weight& w, std::size_t i, Direction dir);

/// {[lambdaR_i + 1/2, lambdaL_{w(i)} - 1/2]}, Empty segments dropped.
/// Throws NonIntegralDifference if perm mixes translation classes.
Multisegment multisegment_of(const Permutation& perm, const Weight& w);

/// Permutations of {0..n-1} preserving the integral classes of `values`.
/// Exhaustive when the group order is at most `limit`; otherwise `limit`
/// elements drawn with the given seed (identity always included).
std::vector<Permutation> integral_weyl_group(const std::vector<Scalar>& values,
                                             std::size_t limit = 720,
                                             std::uint64_t seed = 0);

struct KCommutativityCase {
  Permutation perm;
  HCSymbol symbol;
  KElement path_a;  // Jacquet after Gamma
  KElement path_b;  // Gamma after translation
  bool equal = false;
};

struct KCommutativityReport {
  Weight weight;
  std::size_t index = 0;  // 1-based
  Direction direction = Direction::RaiseRight;
  std::vector<KCommutativityCase> cases;

  bool all_equal() const;
};

/// Checks Jac o Gamma == Gamma o T on the basis {X(w lambdaL, lambdaR)} of the
/// block of `w`, deduplicated by canonical symbol. When `perms` is empty the
/// integral Weyl group is enumerated. Throws IndexOutOfRange.
KCommutativityReport verify_kgroup_commutativity(const Weight& w, std::size_t i, Direction dir,
                                                 const std::vector<Permutation>& perms = {});

}  // namespace hecke
