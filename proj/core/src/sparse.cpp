#include "hecke/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hecke {

namespace {

// Dense scratch row reused across the rows of one product.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), touched_flag_(n, false) {}

  void add(std::size_t idx, const Scalar& a, const Scalar& b) {
    if (!touched_flag_[idx]) {
      touched_flag_[idx] = true;
      touched_.push_back(idx);
      values_[idx] = a * b;
    } else {
      values_[idx] += a * b;
    }
  }

  SparseVector drain() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    out.reserve(touched_.size());
    for (auto idx : touched_) {
      touched_flag_[idx] = false;
      if (!values_[idx].is_zero()) out.emplace_back(idx, std::move(values_[idx]));
      values_[idx] = Scalar();
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> values_;
  std::vector<bool> touched_flag_;
  std::vector<std::size_t> touched_;
};

const Scalar* find_entry(const SparseVector& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

void check_same_shape(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

}  // namespace

void axpy(SparseVector& y, const Scalar& c, const SparseVector& x) {
  if (c.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, c * ix->second);
      ++ix;
    } else {
      Scalar v = std::move(iy->second);
      v += c * ix->second;
      if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseMatrix SparseMatrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

SparseMatrix SparseMatrix::scalar(std::size_t n, const Scalar& c) {
  SparseMatrix out(n, n);
  if (c.is_zero()) return out;
  for (std::size_t k = 0; k < n; ++k) out.data_[k].emplace_back(k, c);
  return out;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  SparseMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) {
      if (r >= rows) throw std::out_of_range("column entry outside the matrix");
      if (!v.is_zero()) out.data_[r].emplace_back(c, v);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_zero()) out.data_[r].emplace_back(c, rows[r][c]);
    }
  }
  return out;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Scalar* p = find_entry(data_.at(r), c);
  return p ? *p : Scalar();
}

void SparseMatrix::set_row(std::size_t r, SparseVector row) { data_.at(r) = std::move(row); }

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  }
  return out;
}

SparseMatrix SparseMatrix::conjugate_transpose() const {
  SparseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v.conj());
  }
  return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  SparseMatrix out(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) out.data_[k] = data_.at(rows[k]);
  return out;
}

SparseMatrix SparseMatrix::kron_identity_right(std::size_t n) const {
  SparseMatrix out(rows_ * n, cols_ * n);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      auto& row = out.data_[r * n + k];
      row.reserve(data_[r].size());
      for (const auto& [c, v] : data_[r]) row.emplace_back(c * n + k, v);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::kron_identity_left(std::size_t n) const {
  SparseMatrix out(rows_ * n, cols_ * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < rows_; ++r) {
      auto& row = out.data_[k * rows_ + r];
      row.reserve(data_[r].size());
      for (const auto& [c, v] : data_[r]) row.emplace_back(k * cols_ + c, v);
    }
  }
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<const Scalar*> lookup(cols_, nullptr);
  for (const auto& [idx, val] : v) lookup.at(idx) = &val;
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc;
    bool hit = false;
    for (const auto& [c, a] : data_[r]) {
      if (lookup[c]) {
        acc += a * *lookup[c];
        hit = true;
      }
    }
    if (hit && !acc.is_zero()) out.emplace_back(r, std::move(acc));
  }
  return out;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t r = 0; r < rows_; ++r) axpy(data_[r], Scalar(1), rhs.data_[r]);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t r = 0; r < rows_; ++r) axpy(data_[r], Scalar(-1), rhs.data_[r]);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_) {
    for (auto& e : r) e.second *= c;
  }
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  Accumulator acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) acc.add(c, av, bv);
    }
    out.data_[r] = acc.drain();
  }
  return out;
}

Subspace kernel(const SparseMatrix& a) {
  const std::size_t n = a.cols();
  // Pivot rows keyed by pivot column, kept fully reduced: no pivot row has a
  // nonzero entry in another row's pivot column.
  std::map<std::size_t, SparseVector> pivots;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector row = a.row(r);
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, v] : row) {
      if (pivots.count(c)) hits.emplace_back(c, v);
    }
    for (const auto& [c, v] : hits) axpy(row, -v, pivots.at(c));
    if (row.empty()) continue;

    const std::size_t p = row.front().first;
    const Scalar inv = Scalar(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    for (auto& [c, prow] : pivots) {
      if (const Scalar* hit = find_entry(prow, p)) {
        const Scalar coeff = -*hit;
        axpy(prow, coeff, row);
      }
    }
    pivots.emplace(p, std::move(row));
  }

  Subspace out;
  std::vector<std::size_t> free_index(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivots.count(c)) {
      free_index[c] = out.coordinate_rows.size();
      out.coordinate_rows.push_back(c);
    }
  }
  out.basis = SparseMatrix(n, out.coordinate_rows.size());
  for (std::size_t k = 0; k < out.coordinate_rows.size(); ++k) {
    out.basis.set_row(out.coordinate_rows[k], SparseVector{{k, Scalar(1)}});
  }
  for (const auto& [p, prow] : pivots) {
    SparseVector krow;
    for (const auto& [c, v] : prow) {
      if (c != p) krow.emplace_back(free_index[c], -v);
    }
    out.basis.set_row(p, std::move(krow));
  }
  return out;
}

Subspace generalized_eigenspace(const SparseMatrix& a, const Scalar& c) {
  const SparseMatrix shifted = a - SparseMatrix::scalar(a.rows(), c);
  SparseMatrix power = shifted;
  Subspace sub = kernel(power);
  while (sub.dim() > 0 && sub.dim() < a.rows()) {
    power = shifted * power;
    Subspace next = kernel(power);
    if (next.dim() == sub.dim()) break;
    sub = std::move(next);
  }
  return sub;
}

bool restrict_to(const SparseMatrix& a, const Subspace& sub, SparseMatrix& out, bool verify) {
  const SparseMatrix image = a * sub.basis;
  out = image.select_rows(sub.coordinate_rows);
  if (!verify) return true;
  return sub.basis * out == image;
}

}  // namespace hecke
