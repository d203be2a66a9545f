#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "redmon/error.hpp"
#include "redmon/matrix.hpp"
#include "redmon/rng.hpp"
#include "test_util.hpp"

using namespace redmon;
using redmon::testing::random_low_rank;
using redmon::testing::random_matrix;

namespace {

oracle::QMatrix to_q(const Matrix& m) {
  oracle::QMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rational();
  }
  return out;
}

}  // namespace

TEST(Scalar, FieldParsing) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("fp:7").modulus(), 7u);
  EXPECT_THROW(Field::parse("fp:8"), DomainError);
  EXPECT_THROW(Field::parse("z"), DomainError);
  EXPECT_THROW(Field::prime(1), DomainError);
}

TEST(Scalar, RationalArithmetic) {
  const Scalar half(BigInt(1), BigInt(2));
  const Scalar third(BigInt(1), BigInt(3));
  EXPECT_EQ(half + third, Scalar(BigInt(5), BigInt(6)));
  EXPECT_EQ(half * third, Scalar(BigInt(1), BigInt(6)));
  EXPECT_EQ(half / third, Scalar(BigInt(3), BigInt(2)));
  EXPECT_EQ(half.inverse(), Scalar(2));
  EXPECT_EQ(Scalar(-2).pow(5), Scalar(-32));
  EXPECT_THROW(Scalar(0).inverse(), DomainError);
  EXPECT_EQ(Scalar(BigInt(-4), BigInt(6)).to_string(), "-2/3");
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  const Scalar three = Scalar::from_integer(f, 3);
  EXPECT_EQ(three * three.inverse(), Scalar::one(f));
  EXPECT_EQ(Scalar::from_integer(f, -1).residue(), 6u);
  EXPECT_EQ(three.pow(6), Scalar::one(f));
  EXPECT_THROW(three + Scalar(1), DomainError);
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
  SplitMix64 rng(11);
  for (const Field f : {Field::rationals(), Field::prime(101)}) {
    for (int t = 0; t < 200; ++t) {
      const Scalar a = Scalar::from_integer(f, rng.uniform(-50, 50));
      const Scalar b = Scalar::from_integer(f, rng.uniform(-50, 50));
      const Scalar c = Scalar::from_integer(f, rng.uniform(-50, 50));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a - a, Scalar::zero(f));
      if (!b.is_zero()) {
        EXPECT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(Matrix, SpecExamples) {
  const Matrix a = Matrix::of({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  EXPECT_EQ(Matrix::identity(3) * a, a);
  EXPECT_EQ(Matrix::of({{1, 2}, {3, 4}}) * Matrix::of({{0, 1}, {1, 0}}), Matrix::of({{2, 1}, {4, 3}}));
  EXPECT_TRUE((a * Matrix::zero(3, 3)).is_zero());
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(transpose(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_EQ(transpose(Matrix::of({{1, 2}})), Matrix::of({{1}, {2}}));
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
  EXPECT_EQ(rank(Matrix::zero(3, 4)), 0u);
  EXPECT_EQ(rank(Matrix::of({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(det(Matrix::identity(4)), Scalar(1));
  EXPECT_EQ(det(Matrix::diagonal({2, 3})), Scalar(6));
  EXPECT_EQ(det(Matrix::of({{0, 1}, {-1, 0}})), Scalar(1));
  EXPECT_EQ(invert(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_FALSE(invert(Matrix::zero(3, 3)).has_value());
  const Scalar q[] = {Scalar(BigInt(1), BigInt(2)), Scalar(BigInt(1), BigInt(4))};
  EXPECT_EQ(invert(Matrix::diagonal({2, 4})), Matrix::diagonal(q));
}

TEST(Matrix, Errors) {
  EXPECT_THROW(Matrix::of({{1, 2}}) * Matrix::of({{1, 2}}), DomainError);
  EXPECT_THROW(det(Matrix::of({{1, 2}})), DomainError);
  EXPECT_THROW(invert(Matrix::of({{1, 2}})), DomainError);
  EXPECT_THROW(Matrix::identity(2) * Matrix::identity(2, Field::prime(5)), DomainError);
}

TEST(Matrix, DeterminantIsMultiplicative) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
    const Matrix a = random_matrix(rng, n, n, 5);
    const Matrix b = random_matrix(rng, n, n, 5);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  SplitMix64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
    const Matrix a = t % 3 == 0 ? random_low_rank(rng, n, n, n > 1 ? n - 1 : 1, 4) : random_matrix(rng, n, n, 6);
    EXPECT_EQ(det(a).rational(), oracle::leibniz_det(to_q(a)));
  }
}

TEST(Matrix, RankOfProductIsBounded) {
  SplitMix64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 4));
    const Matrix a = random_low_rank(rng, n, n, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n))), 3);
    const Matrix b = random_low_rank(rng, n, n, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n))), 3);
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
  }
}

TEST(Matrix, InvertibilityCriteriaAgree) {
  SplitMix64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
    const Matrix a = t % 2 ? random_matrix(rng, n, n, 2) : random_low_rank(rng, n, n, n, 1);
    const auto inv = invert(a);
    const bool full = rank(a) == n;
    EXPECT_EQ(inv.has_value(), full);
    EXPECT_EQ(!det(a).is_zero(), full);
    if (inv) {
      EXPECT_EQ(a * *inv, Matrix::identity(n));
      EXPECT_EQ(*inv * a, Matrix::identity(n));
    }
  }
}

TEST(Matrix, TransposeReversesProducts) {
  SplitMix64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(rng, 3, 4, 5);
    const Matrix b = random_matrix(rng, 4, 2, 5);
    EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
  }
}

TEST(Matrix, RankAgreesWithNaiveEliminationAndAccumulator) {
  SplitMix64 rng(123);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform(0, 7));
    const std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform(0, 7));
    const std::size_t r = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
    const Matrix a = random_low_rank(rng, rows, cols, r, 4);
    const std::size_t expected = oracle::naive_rank(to_q(a));
    EXPECT_EQ(rank(a), expected);
    EXPECT_EQ(rank(transpose(a)), expected);
    RowRankAccumulator acc(cols, Field::rationals());
    for (std::size_t i = 0; i < rows; ++i) acc.add_row(a.row(i));
    EXPECT_EQ(acc.rank(), expected);
  }
}

TEST(Matrix, AccumulatorReportsIndependence) {
  RowRankAccumulator acc(3, Field::rationals());
  const Scalar r1[] = {1, 2, 3};
  const Scalar r2[] = {2, 4, 6};
  const Scalar r3[] = {0, 1, Scalar(BigInt(1), BigInt(2))};
  EXPECT_TRUE(acc.add_row(r1));
  EXPECT_FALSE(acc.add_row(r2));
  EXPECT_TRUE(acc.add_row(r3));
  EXPECT_EQ(acc.rank(), 2u);
}

TEST(Matrix, PrimeFieldRankAndInverse) {
  const Field f = Field::prime(5);
  // Over Q this has det 5; mod 5 it is singular.
  const Matrix a = Matrix::of({{1, 2}, {3, 11}}, f);
  EXPECT_EQ(rank(a), 1u);
  EXPECT_TRUE(det(a).is_zero());
  EXPECT_EQ(rank(Matrix::of({{1, 2}, {3, 11}})), 2u);
  SplitMix64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(rng, 4, 4, 10, Field::prime(31));
    const auto inv = invert(m);
    EXPECT_EQ(inv.has_value(), !det(m).is_zero());
    if (inv) {
      EXPECT_EQ(m * *inv, Matrix::identity(4, Field::prime(31)));
    }
    RowRankAccumulator acc(4, Field::prime(31));
    for (std::size_t i = 0; i < 4; ++i) acc.add_row(m.row(i));
    EXPECT_EQ(acc.rank(), rank(m));
  }
}
