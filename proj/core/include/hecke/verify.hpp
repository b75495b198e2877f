#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hecke/hmodule.hpp"
#include "hecke/kring.hpp"
#include "hecke/realside.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::size_t n_max = 4;
  std::size_t m_max = 5;
  /// lambdaR entries are offset + an integer in [-entry_range, entry_range].
  std::int64_t entry_range = 2;
  std::vector<Scalar> translation_classes = {Scalar(0), Scalar(1, 3),
                                             Scalar(mpq_class(0), mpq_class(1, 2))};
  std::size_t dim_cap = default_dim_cap();
  std::size_t case_count = 50;

  /// Throws Error when m_max! exceeds dim_cap or a field is out of range.
  void validate() const;
};

/// Deterministic random inputs for the suites. Draws depend only on the
/// seed, not on the standard library's distribution implementations.
class CaseGenerator {
 public:
  CaseGenerator(const SuiteConfig& config, std::uint64_t salt);

  std::uint64_t uniform(std::uint64_t n);
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  const Scalar& translation_class();

  /// Integral weight of rank in [1, n_max] with mu >= 0 summing to at most
  /// m_max (or exactly `m` when given). With `allow_negative`, one mu_k may
  /// be pushed below zero.
  Weight weight(bool allow_negative = false, std::optional<std::size_t> m = std::nullopt);
  Segment segment(std::size_t max_length);
  /// Segments of total length at most `m_total`, at least one nonempty.
  std::vector<Segment> segments(std::size_t m_total, std::size_t max_count);
  KElement kelement(std::size_t max_terms, std::size_t max_segments, std::size_t max_length);

 private:
  const SuiteConfig& config_;
  std::mt19937_64 rng_;
};

/// Theorem at the K-group level over case_count random (lambda, i), every
/// basis vector X(w lambdaL, lambdaR), both directions.
Report verify_theorem_main_k(const SuiteConfig& config);

/// Jacquet module of the Gamma image at lambdaR_i + 1/2 against the
/// translation summands, by dimension and y-weight fingerprint. Falls back to
/// the K-level check when the module exceeds dim_cap. `i` is 1-based.
Report verify_theorem_main_module(const Weight& w, std::size_t i, std::size_t dim_cap);

/// Spectrum of y_1 on the Gamma image against the multinomial prediction.
Report verify_eigenvalue_prop(const Weight& w, std::size_t dim_cap);

/// dim Jac_a(M1 x M2) = C(m-1, m1-1) dim Jac_a(M1) dim M2
///                      + C(m-1, m1) dim M1 dim Jac_a(M2).
Report verify_leibniz_module(const HModule& left, const HModule& right, const Scalar& a,
                             std::size_t dim_cap);
/// Same for products of Steinberg modules; degrades to the K-level Leibniz
/// identity past dim_cap.
Report verify_leibniz_module(const std::vector<Segment>& left, const std::vector<Segment>& right,
                             const Scalar& a, std::size_t dim_cap);

/// dim Jac_a(M) = dim Jac^{-conj a}(M*), relations of M*, and the double-dual
/// fingerprint.
Report verify_dual_suite(const HModule& mod, const Scalar& a);
/// Adds the product-reversal rule for M = St(D1) x ... x St(Dr); degrades to
/// the K-level intertwining identity past dim_cap.
Report verify_dual_suite(const std::vector<Segment>& factors, const Scalar& a, std::size_t dim_cap);

/// hermitian_dual_k o jac_k(a) = cojac_k(-conj a) o hermitian_dual_k and the
/// Leibniz rule on random K-ring elements.
Report verify_kring_identities(const SuiteConfig& config);

/// Defining relations over a corpus of Steinberg, induced and Gamma modules.
Report verify_relation_suite(const SuiteConfig& config);

/// dim gamma_module(lambda) = m! / prod mu_k! on random weights.
Report verify_dimension_formula(const SuiteConfig& config);

/// Jac_c(St(D)) is St(D minus its start) for c = start, else 0.
Report verify_jacquet_base_case(const SuiteConfig& config);

/// Every suite above, with module-level cases drawn from the config.
std::vector<Report> run_suite(const SuiteConfig& config);

}  // namespace hecke
