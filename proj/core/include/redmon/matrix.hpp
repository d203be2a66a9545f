#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "redmon/scalar.hpp"

namespace redmon {

// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  // Integer literal rows over `field`, e.g. Matrix::of({{1, 2}, {3, 4}}).
  static Matrix of(std::initializer_list<std::initializer_list<long>> rows,
                   Field field = Field::rationals());
  static Matrix identity(std::size_t n, Field field = Field::rationals());
  static Matrix zero(std::size_t rows, std::size_t cols, Field field = Field::rationals());
  static Matrix diagonal(std::span<const Scalar> diag);
  static Matrix diagonal(std::initializer_list<long> diag, Field field = Field::rationals());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_diagonal() const;
  Matrix column(std::size_t j) const;

  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Matrix operator*(const Scalar& s, Matrix a);

// Rank by fraction-free (Bareiss) elimination over Q, Gaussian elimination
// over F_p.
std::size_t rank(const Matrix& a);
Scalar det(const Matrix& a);
std::optional<Matrix> invert(const Matrix& a);

// Incremental row-rank accumulator. Rows are reduced against an echelon basis
// as they arrive; over Q each stored row is kept as a primitive integer
// vector so coefficients never carry denominators.
class RowRankAccumulator {
 public:
  RowRankAccumulator(std::size_t cols, Field field);

  // Returns true when the row increased the rank.
  bool add_row(std::span<const Scalar> row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  bool add_integer_row(std::vector<BigInt> row);
  bool add_residue_row(std::vector<std::uint64_t> row);

  std::size_t cols_;
  Field field_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<BigInt>> int_basis_;
  std::vector<std::vector<std::uint64_t>> mod_basis_;
};

}  // namespace redmon
