#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "redmon/monoid.hpp"
#include "redmon/weights.hpp"

namespace redmon {

// dim of the induced module nabla(lambda) by the Weyl dimension formula,
// evaluated in the doubled-rho convention. Throws DomainError for a
// non-dominant weight.
BigInt dim_nabla(const RootDatum& rd, const Weight& lambda);

// Semistandard Young tableaux of the given shape with entries in 1..n, by
// direct enumeration (at most 12 cells).
std::uint64_t ssyt_count(std::size_t n, const std::vector<std::int64_t>& shape);

struct DimTable {
  MonoidSpec spec;
  std::int64_t degree = 0;
  std::vector<std::pair<Weight, BigInt>> entries;
};

DimTable dim_table(const MonoidSpec& spec, std::int64_t degree);

// Sum of dim_nabla(lambda)^2 over the degree-d slice of X(D)^+.
BigInt graded_square_sum(const MonoidSpec& spec, std::int64_t degree);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace redmon
