#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Sorted (index, value) pairs with no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// y += c * x
void axpy(SparseVector& y, const Scalar& c, const SparseVector& x);

/// Exact matrix over Scalar stored as sparse rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix scalar(std::size_t n, const Scalar& c);
  /// Builds from column vectors (each sorted, zero-free).
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
  /// Builds from a dense row-major array.
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  Scalar at(std::size_t r, std::size_t c) const;
  /// Replaces row r (must be sorted and zero-free).
  void set_row(std::size_t r, SparseVector row);

  SparseMatrix transpose() const;
  SparseMatrix conjugate_transpose() const;
  /// Rows selected in the given order.
  SparseMatrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Kronecker products with an identity: A (x) I_n and I_n (x) A.
  SparseMatrix kron_identity_right(std::size_t n) const;
  SparseMatrix kron_identity_left(std::size_t n) const;

  SparseVector apply(const SparseVector& v) const;

  std::vector<std::vector<Scalar>> to_dense() const;

  SparseMatrix& operator+=(const SparseMatrix& rhs);
  SparseMatrix& operator-=(const SparseMatrix& rhs);
  SparseMatrix& operator*=(const Scalar& c);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& c, SparseMatrix a) { return a *= c; }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// A subspace of Scalar^n given by a basis K (n x d) in reduced column form:
/// at the coordinate rows, K restricts to the d x d identity, so the
/// coordinates of a vector in the subspace are its entries at those rows.
struct Subspace {
  SparseMatrix basis;
  std::vector<std::size_t> coordinate_rows;

  std::size_t dim() const { return coordinate_rows.size(); }
};

/// Null space of A via exact reduced row echelon form.
Subspace kernel(const SparseMatrix& a);

/// Generalized eigenspace ker (A - c)^k, with k raised until the kernel
/// stops growing.
Subspace generalized_eigenspace(const SparseMatrix& a, const Scalar& c);

/// The matrix of A on an A-invariant subspace, in the subspace's basis.
/// When `verify` is set, checks K X == A K and returns false on mismatch
/// (leaving `out` unspecified).
bool restrict_to(const SparseMatrix& a, const Subspace& sub, SparseMatrix& out, bool verify);

}  // namespace hecke
