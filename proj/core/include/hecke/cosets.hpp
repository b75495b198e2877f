#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hecke/realside.hpp"

namespace hecke {

/// Length (number of inversions) of a permutation.
std::size_t permutation_length(const Permutation& p);

/// A reduced word for p, as 0-based simple reflection indices i (s_i swaps
/// i and i+1), with p = s_{w[0]} s_{w[1]} ... s_{w[l-1]}. Letters are
/// peeled from the left, taking the smallest left descent each time.
std::vector<std::size_t> reduced_word(const Permutation& p);

/// A reduced word for the longest element of S_m.
std::vector<std::size_t> longest_element_word(std::size_t m);

/// Minimal-length representatives d of the left cosets d (S_m1 x S_m2) in
/// S_m: d is increasing on positions [0, m1) and on [m1, m). Ordered by
/// length, then lexicographically, so the identity comes first.
class CosetBasis {
 public:
  CosetBasis(std::size_t m1, std::size_t m2);

  std::size_t m1() const { return m1_; }
  std::size_t m2() const { return m2_; }
  std::size_t size() const { return reps_.size(); }
  const Permutation& rep(std::size_t idx) const { return reps_[idx]; }
  const std::vector<std::size_t>& word(std::size_t idx) const { return words_[idx]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// Result of s_i * d in S_m: either another representative, or d * s_p
  /// with s_p in the parabolic subgroup (p the 0-based position).
  struct SimpleAction {
    bool crosses = false;
    std::size_t target = 0;    // representative index when crosses
    std::size_t parabolic = 0; // p when !crosses
  };
  SimpleAction left_multiply(std::size_t i, std::size_t idx) const;

  /// First letter of the reduced word of rep(idx), and the index of the
  /// representative s_i * rep(idx). Requires idx != identity.
  std::pair<std::size_t, std::size_t> peel(std::size_t idx) const;

 private:
  std::size_t m1_;
  std::size_t m2_;
  std::vector<Permutation> reps_;
  std::vector<std::vector<std::size_t>> words_;
  std::map<Permutation, std::size_t> index_;
};

}  // namespace hecke
