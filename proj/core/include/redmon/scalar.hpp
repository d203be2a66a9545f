#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace redmon {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Field descriptor: the rationals (modulus 0) or a prime field F_p, p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  // Accepts "q" or "fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of Q (kept in lowest terms, positive denominator) or of F_p.
// Binary operations require both operands to live in the same field.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(long value) : q_(value) {}  // NOLINT: integer literals are scalars
  explicit Scalar(const BigRational& value);
  explicit Scalar(const BigInt& value) : q_(value) {}
  Scalar(const BigInt& num, const BigInt& den);

  static Scalar zero(Field f) { return from_integer(f, 0); }
  static Scalar one(Field f) { return from_integer(f, 1); }
  static Scalar from_integer(Field f, const BigInt& value);
  static Scalar residue(Field f, std::uint64_t r);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Rational view; only valid over Q.
  const BigRational& rational() const;
  // Residue in [0, p); only valid over F_p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "3", "-1/2" over Q; the residue over F_p.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  Field field_;
  BigRational q_;
  std::uint32_t r_ = 0;
};

}  // namespace redmon
