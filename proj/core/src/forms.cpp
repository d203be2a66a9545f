#include "redmon/forms.hpp"

#include <string>

#include "redmon/error.hpp"

namespace redmon {

namespace {

void check_form(FormKind kind, std::size_t n, Field field) {
  if (n == 0) throw DomainError("form dimension must be positive");
  if (kind == FormKind::Symplectic && n % 2 != 0) {
    throw DomainError("symplectic form requires even n (got n=" + std::to_string(n) + ")");
  }
  if (kind == FormKind::Orthogonal && field.characteristic() == 2) {
    throw DomainError("orthogonal form requires characteristic != 2");
  }
}

}  // namespace

Scalar pairing_sign(FormKind kind, std::size_t i, std::size_t n, Field field) {
  if (kind == FormKind::Orthogonal || i < n / 2) return Scalar::one(field);
  return -Scalar::one(field);
}

Matrix gram_matrix(FormKind kind, std::size_t n, Field field) {
  check_form(kind, n, field);
  Matrix j(n, n, field);
  for (std::size_t i = 0; i < n; ++i) j(i, paired_index(i, n)) = pairing_sign(kind, i, n, field);
  return j;
}

Scalar form_eval(FormKind kind, std::size_t n, std::span<const Scalar> v, std::span<const Scalar> w) {
  if (v.size() != n || w.size() != n) throw DomainError("form_eval: vector length must equal n");
  if (n == 0) throw DomainError("form dimension must be positive");
  const Field f = v.front().field();
  check_form(kind, n, f);
  Scalar acc = Scalar::zero(f);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& wi = w[paired_index(i, n)];
    if (v[i].is_zero() || wi.is_zero()) continue;
    acc += pairing_sign(kind, i, n, f) * v[i] * wi;
  }
  return acc;
}

}  // namespace redmon
