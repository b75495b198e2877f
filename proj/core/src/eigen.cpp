#include "hecke/cosets.hpp"
#include "hecke/error.hpp"
#include "hecke/hmodule.hpp"

namespace hecke {

namespace {

enum class End { First, Last };

// Generalized eigenspace of y_1 (or y_m) with the remaining generators
// restricted to it.
HModule eigen_restriction(const HModule& mod, const Scalar& a, End end) {
  const std::size_t m = mod.m();
  if (m == 0) throw Error("Jacquet functor needs m >= 1");
  const std::string which = end == End::First ? "jacquet" : "cojacquet";

  const SparseMatrix& y = end == End::First ? mod.y(1) : mod.y(m);
  const Subspace sub = generalized_eigenspace(y, a);

  auto restricted = [&](const SparseMatrix& g, const std::string& name) {
    SparseMatrix out;
    if (!restrict_to(g, sub, out, true)) {
      throw InvarianceViolation(which + " at " + a.str() + ": eigenspace not stable under " + name);
    }
    return out;
  };

  std::vector<SparseMatrix> s, yy;
  const std::size_t shift = end == End::First ? 1 : 0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    s.push_back(restricted(mod.s(i + shift), "s" + std::to_string(i + shift)));
  }
  for (std::size_t j = 1; j < m; ++j) {
    yy.push_back(restricted(mod.y(j + shift), "y" + std::to_string(j + shift)));
  }
  std::vector<std::string> labels;
  for (auto r : sub.coordinate_rows) labels.push_back(mod.labels()[r]);
  return HModule(m - 1, sub.dim(), std::move(s), std::move(yy), std::move(labels),
                 mod.eigen_candidates());
}

// Ordered product of S matrices along a word.
SparseMatrix word_matrix(const HModule& mod, const std::vector<std::size_t>& word, bool reversed) {
  SparseMatrix out = SparseMatrix::identity(mod.dim());
  if (reversed) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = out * mod.s(*it + 1);
  } else {
    for (auto letter : word) out = out * mod.s(letter + 1);
  }
  return out;
}

void split(const std::vector<SparseMatrix>& ops, std::size_t first, std::size_t dim,
           const std::vector<Scalar>& candidates, std::vector<Scalar>& prefix, WeightMultiset& out) {
  if (dim == 0) return;
  if (first == ops.size()) {
    out[prefix] += dim;
    return;
  }
  std::size_t found = 0;
  for (const auto& c : candidates) {
    if (found == dim) break;
    const Subspace sub = generalized_eigenspace(ops[first], c);
    if (sub.dim() == 0) continue;
    found += sub.dim();
    std::vector<SparseMatrix> rest(ops.size());
    for (std::size_t k = first + 1; k < ops.size(); ++k) restrict_to(ops[k], sub, rest[k], false);
    prefix.push_back(c);
    split(rest, first + 1, sub.dim(), candidates, prefix, out);
    prefix.pop_back();
  }
  if (found != dim) {
    throw CandidateSetIncomplete("eigenspaces of y" + std::to_string(first + 1) + " over " +
                                 std::to_string(candidates.size()) + " candidates span " +
                                 std::to_string(found) + " of " + std::to_string(dim) +
                                 " dimensions");
  }
}

}  // namespace

HModule jacquet(const HModule& mod, const Scalar& a) { return eigen_restriction(mod, a, End::First); }

HModule cojacquet(const HModule& mod, const Scalar& a) { return eigen_restriction(mod, a, End::Last); }

HModule hermitian_dual_mod(const HModule& mod) {
  const std::size_t m = mod.m();
  const auto w0_word = longest_element_word(m);
  const SparseMatrix w0 = word_matrix(mod, w0_word, false);
  const SparseMatrix w0_inv = word_matrix(mod, w0_word, true);

  std::vector<SparseMatrix> s, y;
  for (std::size_t i = 1; i < m; ++i) s.push_back(mod.s(i).conjugate_transpose());
  for (std::size_t i = 1; i <= m; ++i) {
    const SparseMatrix star = Scalar(-1) * (w0 * mod.y(m + 1 - i) * w0_inv);
    y.push_back(star.conjugate_transpose());
  }
  std::vector<std::string> labels;
  for (const auto& l : mod.labels()) labels.push_back("*" + l);
  std::vector<Scalar> candidates;
  for (const auto& c : mod.eigen_candidates()) candidates.push_back(-c.conj());
  return HModule(m, mod.dim(), std::move(s), std::move(y), std::move(labels), std::move(candidates));
}

WeightMultiset y_weight_multiset(const HModule& mod) {
  WeightMultiset out;
  std::vector<Scalar> prefix;
  split(mod.y_matrices(), 0, mod.dim(), mod.eigen_candidates(), prefix, out);
  return out;
}

std::vector<std::pair<Scalar, std::size_t>> spectrum_y1(const HModule& mod) {
  std::vector<std::pair<Scalar, std::size_t>> out;
  if (mod.m() == 0 || mod.dim() == 0) return out;
  std::size_t found = 0;
  for (const auto& c : mod.eigen_candidates()) {
    if (found == mod.dim()) break;
    const std::size_t d = generalized_eigenspace(mod.y(1), c).dim();
    if (d == 0) continue;
    found += d;
    out.emplace_back(c, d);
  }
  if (found != mod.dim()) {
    throw CandidateSetIncomplete("eigenspaces of y1 span " + std::to_string(found) + " of " +
                                 std::to_string(mod.dim()) + " dimensions");
  }
  return out;
}

std::size_t total(const WeightMultiset& w) {
  std::size_t t = 0;
  for (const auto& [k, v] : w) t += v;
  return t;
}

WeightMultiset merge(WeightMultiset a, const WeightMultiset& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

}  // namespace hecke
