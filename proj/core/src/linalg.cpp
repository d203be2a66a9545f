#include <numeric>
#include <utility>

#include "redmon/error.hpp"
#include "redmon/matrix.hpp"

namespace redmon {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;
using ModRows = std::vector<std::vector<std::uint64_t>>;

// Clears denominators row by row; returns the integer matrix and the
// per-row scale factors (row_int = scale * row).
IntRows integerize(const Matrix& a, std::vector<BigInt>* scales = nullptr) {
  IntRows out(a.rows(), std::vector<BigInt>(a.cols()));
  if (scales) scales->assign(a.rows(), BigInt(1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigRational& q = a(i, j).rational();
      out[i][j] = q.get_num() * (l / q.get_den());
    }
    if (scales) (*scales)[i] = l;
  }
  return out;
}

ModRows residues(const Matrix& a) {
  ModRows out(a.rows(), std::vector<std::uint64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).residue();
  }
  return out;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

struct BareissResult {
  std::size_t rank = 0;
  BigInt last_pivot = 1;
  int sign = 1;
};

// Fraction-free elimination in place. After processing, every division by
// the previous pivot is exact (entries are minors of the input).
BareissResult bareiss(IntRows& m, std::size_t cols) {
  BareissResult res;
  BigInt prev = 1;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      res.sign = -res.sign;
    }
    const BigInt& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = piv * m[i][j] - lead * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

struct ModResult {
  std::size_t rank = 0;
  std::uint64_t det = 1;
};

ModResult gauss_mod(ModRows& m, std::size_t cols, std::uint64_t p) {
  ModResult res;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      res.det = (p - res.det) % p;
    }
    res.det = res.det * m[r][c] % p;
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  if (a.field().is_rational()) {
    IntRows m = integerize(a);
    return bareiss(m, a.cols()).rank;
  }
  ModRows m = residues(a);
  return gauss_mod(m, a.cols(), a.field().modulus()).rank;
}

Scalar det(const Matrix& a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar::one(a.field());
  if (a.field().is_rational()) {
    std::vector<BigInt> scales;
    IntRows m = integerize(a, &scales);
    BareissResult r = bareiss(m, n);
    if (r.rank < n) return Scalar::zero(a.field());
    BigInt denom = 1;
    for (const BigInt& s : scales) denom *= s;
    return Scalar(r.sign * r.last_pivot, denom);
  }
  ModRows m = residues(a);
  ModResult r = gauss_mod(m, n, a.field().modulus());
  if (r.rank < n) return Scalar::zero(a.field());
  return Scalar::residue(a.field(), r.det);
}

std::optional<Matrix> invert(const Matrix& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const Field f = a.field();
  Matrix work = a;
  Matrix inv = Matrix::identity(n, f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(p, j), work(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Scalar s = work(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work(i, c).is_zero()) continue;
      const Scalar factor = work(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

RowRankAccumulator::RowRankAccumulator(std::size_t cols, Field field) : cols_(cols), field_(field) {}

bool RowRankAccumulator::add_row(std::span<const Scalar> row) {
  if (row.size() != cols_) throw DomainError("row length does not match accumulator width");
  if (field_.is_rational()) {
    BigInt l = 1;
    for (const Scalar& s : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rational().get_den_mpz_t());
    std::vector<BigInt> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigRational& q = row[j].rational();
      v[j] = q.get_num() * (l / q.get_den());
    }
    return add_integer_row(std::move(v));
  }
  std::vector<std::uint64_t> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(row[j].field() == field_)) throw DomainError("field mismatch in accumulator row");
    v[j] = row[j].residue();
  }
  return add_residue_row(std::move(v));
}

namespace {

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

bool RowRankAccumulator::add_integer_row(std::vector<BigInt> v) {
  make_primitive(v);
  BigInt g, lhs, rhs, tmp;
  for (std::size_t b = 0; b < int_basis_.size(); ++b) {
    const std::size_t pc = pivots_[b];
    if (v[pc] == 0) continue;
    const std::vector<BigInt>& base = int_basis_[b];
    // v <- (base[pc]/g) v - (v[pc]/g) base
    mpz_gcd(g.get_mpz_t(), base[pc].get_mpz_t(), v[pc].get_mpz_t());
    mpz_divexact(lhs.get_mpz_t(), base[pc].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs.get_mpz_t(), v[pc].get_mpz_t(), g.get_mpz_t());
    for (std::size_t j = 0; j < cols_; ++j) {
      if (base[j] == 0) {
        if (v[j] != 0) v[j] *= lhs;
        continue;
      }
      mpz_mul(tmp.get_mpz_t(), rhs.get_mpz_t(), base[j].get_mpz_t());
      mpz_mul(v[j].get_mpz_t(), v[j].get_mpz_t(), lhs.get_mpz_t());
      v[j] -= tmp;
    }
    v[pc] = 0;
    make_primitive(v);
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      pivots_.push_back(j);
      int_basis_.push_back(std::move(v));
      return true;
    }
  }
  return false;
}

bool RowRankAccumulator::add_residue_row(std::vector<std::uint64_t> v) {
  const std::uint64_t p = field_.modulus();
  for (std::size_t b = 0; b < mod_basis_.size(); ++b) {
    const std::size_t pc = pivots_[b];
    if (v[pc] == 0) continue;
    // Basis rows are normalized to pivot 1.
    const std::uint64_t f = v[pc];
    const auto& base = mod_basis_[b];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (base[j] != 0) v[j] = (v[j] + (p - f) * base[j]) % p;
    }
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      const std::uint64_t inv = inv_mod(v[j], p);
      for (std::size_t k = j; k < cols_; ++k) v[k] = v[k] * inv % p;
      pivots_.push_back(j);
      mod_basis_.push_back(std::move(v));
      return true;
    }
  }
  return false;
}

}  // namespace redmon
