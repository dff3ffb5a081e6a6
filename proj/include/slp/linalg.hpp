#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slp/field.hpp"

namespace slp {

/// Dense row-major matrix over a single FieldSpec. Empty shapes (0 x n,
/// n x 0) are legal and have rank 0.
class DenseMatrix {
 public:
  DenseMatrix() : DenseMatrix(FieldSpec::rationals(), 0, 0) {}
  DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  /// Throws FieldMismatch if entries disagree with `field`, std::invalid_argument
  /// on a size mismatch.
  DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(const FieldSpec& field, std::size_t n);
  /// Builds a matrix from integer rows; handy in tests and fixtures.
  static DenseMatrix from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows);
  static DenseMatrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  DenseMatrix transpose() const;
  DenseMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  /// Copies `block` into this matrix with its top-left corner at (row0, col0).
  void set_block(std::size_t row0, std::size_t col0, const DenseMatrix& block);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  bool is_zero() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Scalar& c, const DenseMatrix& m);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  DenseMatrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are taken column by column, using the
/// first row at or below the current pivot row with a nonzero entry.
RrefResult rref_rank(const DenseMatrix& m);

/// Rank by forward elimination only; same value as rref_rank(m).rank.
std::size_t rank(const DenseMatrix& m);

/// Null-space basis, one vector per free column of the rref.
std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m);

/// Throws std::invalid_argument on a non-square matrix.
Scalar determinant(const DenseMatrix& m);

/// Closed form for det(1 / (u_i + v_j)). Throws std::domain_error when some
/// u_i + v_j vanishes and std::invalid_argument on length mismatch.
Scalar cauchy_determinant(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

/// The matrix (1 / (u_i + v_j)) itself.
DenseMatrix cauchy_matrix(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

struct AntiTriangularResult {
  /// Set on success: anti-diagonal nonzero, everything strictly below it zero.
  std::optional<DenseMatrix> transformed;
  /// Set on failure: 1-based index i of the lower-left block
  /// F_i = (f_kl), k = i..n, l = 1..n-i+1, whose determinant vanishes.
  std::optional<std::size_t> failed_index;
  bool ok() const { return transformed.has_value(); }
};

/// Brings a square matrix into lower anti-triangular shape using only
/// "column i -= d * column j" with j < i. The elimination works from the
/// bottom row upwards, so a failure names the first vanishing block it meets,
/// i.e. the largest i with det(F_i) = 0.
AntiTriangularResult anti_triangularize(const DenseMatrix& f);

/// det(F_i) for the lower-left block described above (1-based i).
Scalar lower_left_minor(const DenseMatrix& f, std::size_t i);

}  // namespace slp
