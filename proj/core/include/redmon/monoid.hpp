#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redmon/forms.hpp"
#include "redmon/matrix.hpp"

namespace redmon {

enum class MonoidKind { Full, Orthogonal, Symplectic };

std::string to_string(MonoidKind kind);
MonoidKind parse_monoid_kind(const std::string& text);

// Which monoid M inside M_n over `field` is meant: M_n itself, the
// orthogonal monoid OM_n or the symplectic monoid SpM_n.
struct MonoidSpec {
  MonoidKind kind = MonoidKind::Full;
  std::size_t n = 1;
  Field field;

  // Throws DomainError unless n > 0, Symplectic has even n and Orthogonal
  // has characteristic != 2.
  static MonoidSpec make(MonoidKind kind, std::size_t n, Field field = Field::rationals());

  bool has_form() const { return kind != MonoidKind::Full; }
  FormKind form() const;
  Matrix gram() const;
  // Largest rank of a canonical idempotent e_{0..r-1} in M: n for Full,
  // floor(n/2) for the form kinds (whose singular elements have totally
  // isotropic column spaces).
  std::size_t max_idempotent_rank() const;

  friend bool operator==(const MonoidSpec&, const MonoidSpec&) = default;
};

class OrbitClass {
 public:
  enum class Tag { Unit, Singular };

  static OrbitClass unit(int component) { return OrbitClass(Tag::Unit, component, 0); }
  static OrbitClass singular(std::size_t rank) { return OrbitClass(Tag::Singular, 1, rank); }

  Tag tag() const { return tag_; }
  bool is_unit() const { return tag_ == Tag::Unit; }
  // +1 or -1; only meaningful for units.
  int component() const { return component_; }
  // Only meaningful for singular classes.
  std::size_t rank() const { return rank_; }

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;

 private:
  OrbitClass(Tag tag, int component, std::size_t rank) : tag_(tag), component_(component), rank_(rank) {}
  Tag tag_;
  int component_;
  std::size_t rank_;
};

// The unique c with A^T J A = cJ = A J A^T, or nullopt when no single c
// satisfies both equations. c = 0 is a legitimate answer.
std::optional<Scalar> similitude_factor(const MonoidSpec& spec, const Matrix& a);
bool is_member(const MonoidSpec& spec, const Matrix& a);
bool is_unit(const MonoidSpec& spec, const Matrix& a);

// Diagonal 0/1 matrix with ones at the (0-based) positions in `support`.
Matrix idempotent(const MonoidSpec& spec, const std::vector<std::size_t>& support);
// e_{0..r-1}.
Matrix canonical_idempotent(const MonoidSpec& spec, std::size_t rank);

// All idempotents of the diagonal torus closure, ordered by support size
// then lexicographically on the support; the identity comes last.
std::vector<Matrix> idempotents_in_torus_closure(const MonoidSpec& spec);

bool torus_closure_contains(const MonoidSpec& spec, const Matrix& d);

OrbitClass classify_orbit(const MonoidSpec& spec, const Matrix& a);

struct OrbitWitness {
  Matrix g;
  Matrix h;
  Matrix e;
};

// Units g, h and the canonical idempotent e with g * a * h == e.
OrbitWitness orbit_witness(const MonoidSpec& spec, const Matrix& a);

// OM_n^- is reached by composing with the reflection swapping e_1 and e_n.
enum class UnitComponent { Identity, Reflected };

inline constexpr std::int64_t kDefaultEntryBound = 3;

Matrix sample_unit(const MonoidSpec& spec, std::uint64_t seed, std::int64_t entry_bound = kDefaultEntryBound,
                   UnitComponent component = UnitComponent::Identity);

// g * e * h for sampled units g, h. With no rank the idempotent is drawn
// from idempotents_in_torus_closure (so the result may be a unit).
Matrix sample_member(const MonoidSpec& spec, std::uint64_t seed, std::optional<std::size_t> rank = std::nullopt,
                     std::int64_t entry_bound = kDefaultEntryBound);

// Reflection swapping e_1 and e_n (an isometry of the split orthogonal form
// with determinant -1).
Matrix swap_reflection(const MonoidSpec& spec);

}  // namespace redmon
