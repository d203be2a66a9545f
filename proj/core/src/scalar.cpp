#include "redmon/scalar.hpp"

#include <charconv>

#include "redmon/error.hpp"

namespace redmon {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw DomainError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw DomainError("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last || p >= (1ull << 31)) {
      throw DomainError("malformed field descriptor '" + text + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw DomainError("malformed field descriptor '" + text + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const BigRational& value) : q_(value) { q_.canonicalize(); }

Scalar::Scalar(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = BigRational(num, den);
  q_.canonicalize();
}

Scalar Scalar::from_integer(Field f, const BigInt& value) {
  if (f.is_rational()) return Scalar(value);
  BigInt m = value % f.modulus();
  if (m < 0) m += f.modulus();
  return residue(f, m.get_ui());
}

Scalar Scalar::residue(Field f, std::uint64_t r) {
  if (f.is_rational()) return Scalar(BigInt(std::to_string(r)));
  Scalar s;
  s.field_ = f;
  s.r_ = static_cast<std::uint32_t>(r % f.modulus());
  return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const BigRational& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainError("rational view of a prime-field element");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainError("residue of a rational element");
  return r_;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw DomainError("field mismatch: " + field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.modulus() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + rhs.r_) % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + field_.modulus() - rhs.r_) % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * rhs.r_) % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_.is_rational()) {
    Scalar s;
    s.q_ = 1 / q_;
    return s;
  }
  // Fermat: r^(p-2).
  return pow(field_.modulus() - 2);
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace redmon
