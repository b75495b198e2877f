#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hecke/realside.hpp"
#include "hecke/report.hpp"
#include "hecke/segment.hpp"
#include "hecke/sparse.hpp"

namespace hecke {

/// Basis vectors beyond this count raise DimensionCap. The environment
/// variable HECKE_DIM_CAP overrides the default.
inline constexpr std::size_t kDefaultDimCap = 2000;
std::size_t default_dim_cap();

/// A finite-dimensional module over the graded Hecke algebra H_m, given by
/// exact matrices of s_1..s_{m-1} and y_1..y_m. Immutable once built.
class HModule {
 public:
  /// Throws std::invalid_argument if a matrix count or shape is wrong.
  HModule(std::size_t m, std::size_t dim, std::vector<SparseMatrix> s, std::vector<SparseMatrix> y,
          std::vector<std::string> labels, std::vector<Scalar> eigen_candidates);

  /// The one-dimensional H_0-module.
  static HModule trivial();

  std::size_t m() const { return m_; }
  std::size_t dim() const { return dim_; }
  /// 1-based accessors.
  const SparseMatrix& s(std::size_t i) const { return s_.at(i - 1); }
  const SparseMatrix& y(std::size_t j) const { return y_.at(j - 1); }
  const std::vector<SparseMatrix>& s_matrices() const { return s_; }
  const std::vector<SparseMatrix>& y_matrices() const { return y_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted, duplicate-free.
  const std::vector<Scalar>& eigen_candidates() const { return candidates_; }

  friend bool operator==(const HModule&, const HModule&) = default;

 private:
  std::size_t m_;
  std::size_t dim_;
  std::vector<SparseMatrix> s_;
  std::vector<SparseMatrix> y_;
  std::vector<std::string> labels_;
  std::vector<Scalar> candidates_;
};

/// Sign character of S_m with y_j acting by a + j - 1; Empty gives the
/// trivial H_0-module.
HModule steinberg(const Segment& seg);

/// The H_1-module y -> c.
HModule evaluation(const Scalar& c);

/// Parabolic induction M1 x M2 on the basis d (x) (v1 (x) v2), d running over
/// minimal left coset representatives of S_m / (S_m1 x S_m2).
/// Throws DimensionCap.
HModule induce(const HModule& left, const HModule& right, std::size_t dim_cap = default_dim_cap());

/// Left-nested product St(D1) x ... x St(Dr), Empty factors skipped.
HModule steinberg_product(const std::vector<Segment>& segments,
                          std::size_t dim_cap = default_dim_cap());

/// Gamma image of X(lambda): the product of St([lambdaR_k + 1/2, lambdaL_k - 1/2]).
/// Throws NegativeMu and DimensionCap.
HModule gamma_module(const Weight& w, std::size_t dim_cap = default_dim_cap());

/// m! / (mu_1! ... mu_n!), the dimension of gamma_module(w); 0 when some
/// mu_k < 0.
std::size_t gamma_dimension(const Weight& w);

/// Evaluates every defining relation as an exact matrix identity, stopping
/// at the first failure.
Report check_relations(const HModule& mod);

/// Generalized a-eigenspace of y_1 as an H_{m-1}-module through
/// y_i -> y_{i+1}, s_i -> s_{i+1}. Throws InvarianceViolation.
HModule jacquet(const HModule& mod, const Scalar& a);

/// Generalized a-eigenspace of y_m as an H_{m-1}-module through
/// y_i -> y_i, s_i -> s_i. Throws InvarianceViolation.
HModule cojacquet(const HModule& mod, const Scalar& a);

/// Conjugate-linear dual twisted by s_i* = s_i, y_i* = -w0 y_{m+1-i} w0^-1.
HModule hermitian_dual_mod(const HModule& mod);

/// Simultaneous generalized weights of y_1..y_m with multiplicities.
using WeightMultiset = std::map<std::vector<Scalar>, std::size_t>;

/// Throws CandidateSetIncomplete.
WeightMultiset y_weight_multiset(const HModule& mod);

/// Generalized eigenvalues of y_1 with the dimensions of their eigenspaces.
/// Throws CandidateSetIncomplete.
std::vector<std::pair<Scalar, std::size_t>> spectrum_y1(const HModule& mod);

/// Total multiplicity of a WeightMultiset.
std::size_t total(const WeightMultiset& w);
WeightMultiset merge(WeightMultiset a, const WeightMultiset& b);

}  // namespace hecke
