#include "redmon/matrix.hpp"

#include <string>
#include <utility>

#include "redmon/error.hpp"

namespace redmon {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DomainError("matrix entry count " + std::to_string(entries_.size()) + " != rows*cols " +
                      std::to_string(rows * cols));
  }
  if (!entries_.empty()) field_ = entries_.front().field();
  for (const Scalar& s : entries_) {
    if (!(s.field() == field_)) throw DomainError("matrix entries span more than one field");
  }
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainError("ragged matrix literal");
    for (long v : row) entries.push_back(Scalar::from_integer(field, BigInt(v)));
  }
  Matrix m(r, c, std::move(entries));
  m.field_ = field;
  return m;
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, Field field) {
  return Matrix(rows, cols, field);
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  const Field f = diag.empty() ? Field::rationals() : diag.front().field();
  Matrix m(diag.size(), diag.size(), f);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!(diag[i].field() == f)) throw DomainError("matrix entries span more than one field");
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<long> diag, Field field) {
  std::vector<Scalar> d;
  for (long v : diag) d.push_back(Scalar::from_integer(field, BigInt(v)));
  Matrix m = diagonal(std::span<const Scalar>(d));
  m.field_ = field;
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(rows_, 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (Scalar& e : entries_) e *= s;
  return *this;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw DomainError("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
  }
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  require_same_field(a, b);
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch in sum");
  require_same_field(a, b);
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch in difference");
  require_same_field(a, b);
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  }
  return c;
}

Matrix operator*(const Scalar& s, Matrix a) {
  a *= s;
  return a;
}

}  // namespace redmon
