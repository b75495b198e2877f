#include <map>
#include <optional>
#include <tuple>

#include "hecke/cosets.hpp"
#include "hecke/error.hpp"
#include "hecke/hmodule.hpp"

namespace hecke {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Column c of a row-major matrix.
std::vector<SparseVector> columns_of(const SparseMatrix& a) {
  std::vector<SparseVector> cols(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) cols[c].emplace_back(r, v);
  }
  return cols;
}

// Straightening of y_j past coset representatives. The image of
// y_j (d (x) v) is produced by peeling the first letter s_i of d's reduced
// word and using y_j s_i = s_i y_{s_i(j)} + c, with c = 1 when j = i,
// c = -1 when j = i + 1 and c = 0 otherwise.
class Straightener {
 public:
  Straightener(const CosetBasis& cosets, std::size_t inner_dim,
               const std::vector<std::vector<SparseVector>>& inner_y_cols,
               const std::vector<std::vector<SparseVector>>& s_cols)
      : cosets_(cosets), inner_dim_(inner_dim), inner_y_cols_(inner_y_cols), s_cols_(s_cols) {}

  const SparseVector& image(std::size_t j, std::size_t coset, std::size_t v) {
    const Key key{j, coset, v};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    SparseVector out;
    if (coset == 0) {
      for (const auto& [r, val] : inner_y_cols_[j][v]) out.emplace_back(r, val);
    } else {
      const auto [i, rest] = cosets_.peel(coset);
      const std::size_t jj = j == i ? i + 1 : (j == i + 1 ? i : j);
      const SparseVector& tail = image(jj, rest, v);
      out = apply_s(i, tail);
      if (j == i) axpy(out, Scalar(1), {{rest * inner_dim_ + v, Scalar(1)}});
      if (j == i + 1) axpy(out, Scalar(-1), {{rest * inner_dim_ + v, Scalar(1)}});
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

  SparseVector apply_s(std::size_t i, const SparseVector& x) const {
    SparseVector out;
    for (const auto& [k, val] : x) axpy(out, val, s_cols_[i][k]);
    return out;
  }

  const CosetBasis& cosets_;
  std::size_t inner_dim_;
  const std::vector<std::vector<SparseVector>>& inner_y_cols_;
  const std::vector<std::vector<SparseVector>>& s_cols_;
  std::map<Key, SparseVector> memo_;
};

std::string perm_label(const Permutation& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p[k] + 1);
  return out;
}

}  // namespace

HModule induce(const HModule& left, const HModule& right, std::size_t dim_cap) {
  const std::size_t m1 = left.m();
  const std::size_t m2 = right.m();
  const std::size_t m = m1 + m2;
  const std::size_t d1 = left.dim();
  const std::size_t d2 = right.dim();
  const std::size_t inner = d1 * d2;
  const std::size_t cosets_count = binomial(m, m1);
  if (inner != 0 && cosets_count > dim_cap / inner) {
    throw DimensionCap("induced module would have dimension " +
                       std::to_string(cosets_count * inner) + " > cap " + std::to_string(dim_cap));
  }
  const std::size_t dim = cosets_count * inner;
  const CosetBasis cosets(m1, m2);

  // Action of the parabolic subalgebra on M1 (x) M2, indexed v1 * d2 + v2.
  std::vector<SparseMatrix> inner_s;  // by 0-based position p; unused at p = m1 - 1
  for (std::size_t p = 0; p + 1 < m; ++p) {
    if (p + 1 < m1) {
      inner_s.push_back(left.s(p + 1).kron_identity_right(d2));
    } else if (p >= m1) {
      inner_s.push_back(right.s(p - m1 + 1).kron_identity_left(d1));
    } else {
      inner_s.emplace_back();
    }
  }
  std::vector<std::vector<SparseVector>> inner_y_cols;
  for (std::size_t j = 0; j < m; ++j) {
    inner_y_cols.push_back(columns_of(j < m1 ? left.y(j + 1).kron_identity_right(d2)
                                             : right.y(j - m1 + 1).kron_identity_left(d1)));
  }
  std::vector<std::vector<SparseVector>> inner_s_cols;
  for (const auto& a : inner_s) inner_s_cols.push_back(columns_of(a));

  // s_i (d (x) v) is either (s_i d) (x) v or d (x) (s_p v).
  std::vector<std::vector<SparseVector>> s_cols(m == 0 ? 0 : m - 1, std::vector<SparseVector>(dim));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      const auto act = cosets.left_multiply(i, c);
      for (std::size_t v = 0; v < inner; ++v) {
        auto& col = s_cols[i][c * inner + v];
        if (act.crosses) {
          col.emplace_back(act.target * inner + v, Scalar(1));
        } else {
          for (const auto& [r, val] : inner_s_cols[act.parabolic][v]) {
            col.emplace_back(c * inner + r, val);
          }
        }
      }
    }
  }

  Straightener straightener(cosets, inner, inner_y_cols, s_cols);
  std::vector<SparseMatrix> y;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<SparseVector> cols(dim);
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      for (std::size_t v = 0; v < inner; ++v) cols[c * inner + v] = straightener.image(j, c, v);
    }
    y.push_back(SparseMatrix::from_columns(dim, cols));
  }
  std::vector<SparseMatrix> s;
  for (std::size_t i = 0; i + 1 < m; ++i) s.push_back(SparseMatrix::from_columns(dim, s_cols[i]));

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (std::size_t v1 = 0; v1 < d1; ++v1) {
      for (std::size_t v2 = 0; v2 < d2; ++v2) {
        labels.push_back("d=" + perm_label(cosets.rep(c)) + ";(" + left.labels()[v1] + ")x(" +
                         right.labels()[v2] + ")");
      }
    }
  }
  std::vector<Scalar> candidates = left.eigen_candidates();
  candidates.insert(candidates.end(), right.eigen_candidates().begin(),
                    right.eigen_candidates().end());
  return HModule(m, dim, std::move(s), std::move(y), std::move(labels), std::move(candidates));
}

}  // namespace hecke
