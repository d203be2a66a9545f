#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "redmon/matrix.hpp"
#include "redmon/monoid.hpp"

namespace redmon {

// Monomial in the n^2 entry variables x_{ij} of M_n; variable index i*n + j.
// Stored as sorted (variable, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t var);
  static Monomial entry(std::size_t i, std::size_t j, std::size_t n) { return variable(i * n + j); }
  // From a multiset of variable indices.
  static Monomial from_variables(const std::vector<std::size_t>& vars);

  std::size_t degree() const;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& rhs) const;
  Scalar evaluate(const Matrix& m) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

// Polynomial in the entry variables; only nonzero coefficients are stored.
class SparsePoly {
 public:
  explicit SparsePoly(Field field = Field::rationals()) : field_(field) {}
  static SparsePoly constant(const Scalar& c);
  static SparsePoly monomial(const Monomial& m, const Scalar& c);
  static SparsePoly entry(std::size_t i, std::size_t j, std::size_t n, Field field = Field::rationals());

  Field field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Scalar& c);

  SparsePoly operator+(const SparsePoly& rhs) const;
  SparsePoly operator-(const SparsePoly& rhs) const;
  SparsePoly operator*(const SparsePoly& rhs) const;
  Scalar evaluate(const Matrix& m) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Field field_;
  std::map<Monomial, Scalar> terms_;
};

// Element of K[M_n] (x) K[M_n].
class TensorPoly {
 public:
  explicit TensorPoly(Field field = Field::rationals()) : field_(field) {}

  Field field() const { return field_; }
  const std::map<std::pair<Monomial, Monomial>, Scalar>& terms() const { return terms_; }
  void add_term(const Monomial& left, const Monomial& right, const Scalar& c);

  TensorPoly operator*(const TensorPoly& rhs) const;
  // sum_i f_i(left) * f'_i(right).
  Scalar evaluate(const Matrix& left, const Matrix& right) const;

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

 private:
  Field field_;
  std::map<std::pair<Monomial, Monomial>, Scalar> terms_;
};

// Delta(x_ij) = sum_k x_ik (x) x_kj, extended multiplicatively and linearly.
TensorPoly comultiply(std::size_t n, const SparsePoly& p);
TensorPoly comultiply(std::size_t n, const Monomial& m, Field field = Field::rationals());
// Evaluation at the identity matrix.
Scalar counit(std::size_t n, const SparsePoly& p);

// Coassociativity and both counit laws, checked symbolically on every
// monomial of degree <= max_degree.
bool check_bialgebra_axioms(std::size_t n, std::size_t max_degree);

// All degree-d monomials in `vars` variables, in increasing order.
std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree);

struct GradedDimOptions {
  std::size_t batch = 32;
  // 0 selects max(4 x number of degree-d monomials, 3 x batch).
  std::size_t point_budget = 0;
  std::int64_t entry_bound = kDefaultEntryBound;
  std::size_t jobs = 1;
  // Orthogonal kind only: sample OM_n^+ instead of both components.
  bool identity_component_only = false;
};

struct GradedDimResult {
  std::size_t dim = 0;
  std::size_t points_used = 0;
  std::size_t monomials = 0;
  // False when the budget ran out before the rank stabilized.
  bool stable = false;
};

// Rank of the evaluation matrix (sampled unit-group points x degree-d
// monomials), grown in batches until two consecutive batches leave the rank
// unchanged, or the rank reaches the monomial count.
GradedDimResult graded_dim(const MonoidSpec& spec, std::int64_t degree, std::uint64_t seed,
                           const GradedDimOptions& options = {});

struct HwcReport {
  MonoidSpec spec;
  std::int64_t degree = 0;
  std::size_t graded_dim = 0;
  BigInt square_sum;
  bool equal = false;
  std::size_t points_used = 0;
  std::uint64_t seed = 0;
};

// Compares dim K[M]_d from the oracle with sum (dim nabla(lambda))^2 over
// the degree-d slice of X(D)^+. Throws DomainError if the oracle did not
// stabilize.
HwcReport verify_hwc_identity(const MonoidSpec& spec, std::int64_t degree, std::uint64_t seed,
                              const GradedDimOptions& options = {});

}  // namespace redmon
