#include "hecke/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke {

namespace {

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = k;
  return inv;
}

// s_i * p: swap the values i and i+1.
Permutation left_simple(std::size_t i, Permutation p) {
  for (auto& v : p) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return p;
}

}  // namespace

std::size_t permutation_length(const Permutation& p) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
  }
  return inv;
}

std::vector<std::size_t> reduced_word(const Permutation& p) {
  std::vector<std::size_t> word;
  Permutation cur = p;
  while (true) {
    const Permutation inv = inverse(cur);
    std::size_t i = 0;
    while (i + 1 < cur.size() && inv[i] < inv[i + 1]) ++i;
    if (i + 1 >= cur.size()) break;
    word.push_back(i);
    cur = left_simple(i, std::move(cur));
  }
  return word;
}

std::vector<std::size_t> longest_element_word(std::size_t m) {
  std::vector<std::size_t> word;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t j = k; j-- > 0;) word.push_back(j);
  }
  return word;
}

CosetBasis::CosetBasis(std::size_t m1, std::size_t m2) : m1_(m1), m2_(m2) {
  const std::size_t m = m1 + m2;
  // Choose the value set of the first block.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m1), true);
  do {
    Permutation d;
    d.reserve(m);
    for (std::size_t v = 0; v < m; ++v) {
      if (pick[v]) d.push_back(v);
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (!pick[v]) d.push_back(v);
    }
    reps_.push_back(std::move(d));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  std::sort(reps_.begin(), reps_.end(), [](const Permutation& a, const Permutation& b) {
    const auto la = permutation_length(a);
    const auto lb = permutation_length(b);
    return la != lb ? la < lb : a < b;
  });
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    index_.emplace(reps_[k], k);
    words_.push_back(reduced_word(reps_[k]));
  }
}

std::optional<std::size_t> CosetBasis::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CosetBasis::SimpleAction CosetBasis::left_multiply(std::size_t i, std::size_t idx) const {
  const Permutation& d = reps_.at(idx);
  const Permutation inv = inverse(d);
  const std::size_t p = inv.at(i);
  const std::size_t q = inv.at(i + 1);
  const bool p_first = p < m1_;
  const bool q_first = q < m1_;
  if (p_first != q_first) {
    return {true, index_.at(left_simple(i, d)), 0};
  }
  // Consecutive values inside one increasing block sit in adjacent positions.
  if (q != p + 1) throw std::logic_error("coset representative is not minimal");
  return {false, 0, p};
}

std::pair<std::size_t, std::size_t> CosetBasis::peel(std::size_t idx) const {
  const auto& w = words_.at(idx);
  if (w.empty()) throw std::logic_error("cannot peel the identity coset");
  return {w.front(), index_.at(left_simple(w.front(), reps_[idx]))};
}

}  // namespace hecke
