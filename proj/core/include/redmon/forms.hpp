#pragma once

#include <cstddef>
#include <span>

#include "redmon/matrix.hpp"

namespace redmon {

enum class FormKind { Orthogonal, Symplectic };

// Index of the basis vector paired with `i` (0-based): i' = n-1-i.
constexpr std::size_t paired_index(std::size_t i, std::size_t n) { return n - 1 - i; }

// Gram matrix J of the split form on K^n: the anti-identity for Orthogonal,
// and J(i, i') = +1 for i < n/2, -1 otherwise for Symplectic.
Matrix gram_matrix(FormKind kind, std::size_t n, Field field = Field::rationals());

// v^T J w.
Scalar form_eval(FormKind kind, std::size_t n, std::span<const Scalar> v, std::span<const Scalar> w);

// Value of J(i, i'), i.e. the pairing of e_i with its partner.
Scalar pairing_sign(FormKind kind, std::size_t i, std::size_t n, Field field);

}  // namespace redmon
