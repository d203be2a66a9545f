#include "redmon/repdim.hpp"

#include <functional>

#include "redmon/error.hpp"

namespace redmon {

BigInt dim_nabla(const RootDatum& rd, const Weight& lambda) {
  if (!is_dominant(rd, lambda)) throw DomainError("dim_nabla expects a dominant weight, got " + lambda.to_string());
  const auto& two_rho = rd.two_rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const PositiveRoot& p : rd.positive_roots()) {
    std::int64_t shifted = 0;
    std::int64_t base = 0;
    for (std::size_t i = 0; i < p.coroot.size(); ++i) {
      shifted += (2 * lambda.a[i] + two_rho[i]) * p.coroot[i];
      base += two_rho[i] * p.coroot[i];
    }
    num *= shifted;
    den *= base;
  }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw DomainError("Weyl dimension formula produced a non-integer for " + lambda.to_string());
  return q;
}

std::uint64_t ssyt_count(std::size_t n, const std::vector<std::int64_t>& shape) {
  std::vector<std::int64_t> rows;
  std::int64_t cells = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 0 || (i > 0 && shape[i] > shape[i - 1])) throw DomainError("ssyt_count expects a partition");
    if (shape[i] > 0) rows.push_back(shape[i]);
    cells += shape[i];
  }
  if (rows.size() > n) throw DomainError("partition has more than n parts");
  if (cells > 12) throw DomainError("ssyt_count enumerates shapes with at most 12 cells");
  if (rows.empty()) return 1;

  // Fill row by row: weakly increasing along rows, strictly down columns.
  std::vector<std::vector<std::int64_t>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) t[i].assign(static_cast<std::size_t>(rows[i]), 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      ++count;
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    std::int64_t lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (std::int64_t v = lo; v <= static_cast<std::int64_t>(n); ++v) {
      t[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return count;
}

DimTable dim_table(const MonoidSpec& spec, std::int64_t degree) {
  const RootDatum rd = RootDatum::for_spec(spec);
  DimTable table{spec, degree, {}};
  for (Weight& w : xd_dominant_enumerate(spec, degree)) {
    BigInt d = dim_nabla(rd, w);
    table.entries.emplace_back(std::move(w), std::move(d));
  }
  return table;
}

BigInt graded_square_sum(const MonoidSpec& spec, std::int64_t degree) {
  BigInt total = 0;
  for (const auto& [w, d] : dim_table(spec, degree).entries) total += d * d;
  return total;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace redmon
