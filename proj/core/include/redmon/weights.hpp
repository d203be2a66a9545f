#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "redmon/monoid.hpp"
#include "redmon/scalar.hpp"

namespace redmon {

enum class RootType { A, C };

// Character of the diagonal torus. Type A (GL_n): a in Z^n, k unused (0).
// Type C (GSp_2m): a in Z^m plus the similitude exponent k; the weight sends
// diag(t_1..t_m, c/t_m..c/t_1) to prod t_i^{a_i} * c^k.
struct Weight {
  RootType type = RootType::A;
  std::vector<std::int64_t> a;
  std::int64_t k = 0;

  static Weight type_a(std::vector<std::int64_t> a) { return {RootType::A, std::move(a), 0}; }
  static Weight type_c(std::vector<std::int64_t> a, std::int64_t k) { return {RootType::C, std::move(a), k}; }

  // Exponent of the scalar matrix z*I: sum(a) for A, sum(a) + 2k for C.
  std::int64_t degree() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight x, const Weight& y) { return x += y; }
  friend Weight operator-(Weight x, const Weight& y) { return x -= y; }
  friend Weight operator*(std::int64_t s, Weight w);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;
};

struct PositiveRoot {
  Weight root;
  // Coroot as a functional on the a-coordinates (never sees k).
  std::vector<std::int64_t> coroot;
};

class RootDatum {
 public:
  static RootDatum type_a(std::size_t n);
  static RootDatum type_c(std::size_t m);
  // TypeA(n) for Full, TypeC(n/2) for Symplectic; Orthogonal is unsupported.
  static RootDatum for_spec(const MonoidSpec& spec);
  // The datum whose coordinate shape matches `w`.
  static RootDatum for_weight(const Weight& w);

  RootType type() const { return type_; }
  // n for type A, m for type C.
  std::size_t rank_parameter() const { return size_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  // Coroots of the simple roots, as functionals on a.
  const std::vector<std::vector<std::int64_t>>& simple_coroots() const { return simple_coroots_; }
  // 2*rho in a-coordinates.
  const std::vector<std::int64_t>& two_rho() const { return two_rho_; }
  // cartan()[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<std::int64_t>> cartan() const;

  Weight zero() const;
  bool matches(const Weight& w) const;
  void require_shape(const Weight& w) const;

  std::int64_t pair(const Weight& w, const std::vector<std::int64_t>& coroot) const;

 private:
  RootDatum(RootType type, std::size_t size);

  RootType type_;
  std::size_t size_;
  std::vector<Weight> simple_;
  std::vector<std::vector<std::int64_t>> simple_coroots_;
  std::vector<PositiveRoot> positive_;
  std::vector<std::int64_t> two_rho_;
};

// Order used for every weight listing: k ascending, then a in descending
// lexicographic order.
struct SliceOrder {
  bool operator()(const Weight& x, const Weight& y) const;
};

using WeightSet = std::set<Weight>;
using Multiplicities = std::map<Weight, BigInt>;

bool is_dominant(const RootDatum& rd, const Weight& w);

// Coefficients of `diff` in the simple-root basis when they are all
// integers, nullopt otherwise (including nonzero degree).
std::optional<std::vector<std::int64_t>> simple_root_coefficients(const RootDatum& rd, const Weight& diff);

// lambda <= mu in the dominance order.
bool dominance_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu);

// Membership in the character monoid X(D) of the diagonal torus closure.
bool xd_contains(const MonoidSpec& spec, const Weight& w);

// Dominant elements of X(D) of degree d, in SliceOrder.
std::vector<Weight> xd_dominant_enumerate(const MonoidSpec& spec, std::int64_t degree);

// Same slice found by scanning the box |a_i| <= d, 0 <= k <= d with
// xd_contains and is_dominant.
std::vector<Weight> xd_dominant_scan(const MonoidSpec& spec, std::int64_t degree);

// Every dominant lambda <= mu, in SliceOrder.
std::vector<Weight> dominant_predecessors(const RootDatum& rd, const Weight& mu);

bool is_saturated(const RootDatum& rd, const WeightSet& set);

// Brute-force check that the degree-d slice of X(D)^+ is closed under
// dominant predecessors.
bool check_xd_plus_saturated(const MonoidSpec& spec, std::int64_t degree);

// Multiplicities outside `keep` become 0; keys are preserved.
Multiplicities truncate_multiplicities(const WeightSet& keep, const Multiplicities& mult);

// Partitions of `total` with at most `parts` parts, each part <= max_part,
// padded with zeros to length `parts`, in descending lexicographic order.
std::vector<std::vector<std::int64_t>> partitions(std::int64_t total, std::size_t parts,
                                                  std::int64_t max_part = -1);

}  // namespace redmon
