#include "redmon/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "redmon/error.hpp"

namespace redmon {

std::int64_t Weight::degree() const {
  const std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  return type == RootType::A ? s : s + 2 * k;
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (type != rhs.type || a.size() != rhs.a.size()) throw DomainError("weight shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += rhs.a[i];
  k += rhs.k;
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (type != rhs.type || a.size() != rhs.a.size()) throw DomainError("weight shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= rhs.a[i];
  k -= rhs.k;
  return *this;
}

Weight operator*(std::int64_t s, Weight w) {
  for (auto& x : w.a) x *= s;
  w.k *= s;
  return w;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  if (type == RootType::C) out += ";" + std::to_string(k);
  return out + ")";
}

RootDatum::RootDatum(RootType type, std::size_t size) : type_(type), size_(size) {
  if (size == 0) throw DomainError("root datum rank must be positive");
  auto unit = [&](std::size_t i) {
    std::vector<std::int64_t> v(size, 0);
    v[i] = 1;
    return v;
  };
  auto diff = [&](std::size_t i, std::size_t j) {
    std::vector<std::int64_t> v(size, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  auto sum = [&](std::size_t i, std::size_t j) {
    std::vector<std::int64_t> v(size, 0);
    v[i] += 1;
    v[j] += 1;
    return v;
  };
  const Weight base = type == RootType::A ? Weight::type_a({}) : Weight::type_c({}, 0);
  auto make = [&](std::vector<std::int64_t> a, std::int64_t k) {
    Weight w = base;
    w.a = std::move(a);
    w.k = k;
    return w;
  };

  // e_i - e_j (i < j) in both types.
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) positive_.push_back({make(diff(i, j), 0), diff(i, j)});
  }
  if (type == RootType::C) {
    // e_i + e_j and 2 e_i carry similitude exponent -1 so that roots have
    // degree 0; their coroots are e_i + e_j and e_i.
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) positive_.push_back({make(sum(i, j), -1), sum(i, j)});
    }
    for (std::size_t i = 0; i < size; ++i) {
      std::vector<std::int64_t> two = unit(i);
      two[i] = 2;
      positive_.push_back({make(two, -1), unit(i)});
    }
  }

  for (std::size_t i = 0; i + 1 < size; ++i) {
    simple_.push_back(make(diff(i, i + 1), 0));
    simple_coroots_.push_back(diff(i, i + 1));
  }
  if (type == RootType::C) {
    std::vector<std::int64_t> two = unit(size - 1);
    two[size - 1] = 2;
    simple_.push_back(make(two, -1));
    simple_coroots_.push_back(unit(size - 1));
  }

  two_rho_.assign(size, 0);
  for (const PositiveRoot& p : positive_) {
    for (std::size_t i = 0; i < size; ++i) two_rho_[i] += p.root.a[i];
  }
}

RootDatum RootDatum::type_a(std::size_t n) { return RootDatum(RootType::A, n); }
RootDatum RootDatum::type_c(std::size_t m) { return RootDatum(RootType::C, m); }

RootDatum RootDatum::for_spec(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidKind::Full: return type_a(spec.n);
    case MonoidKind::Symplectic: return type_c(spec.n / 2);
    case MonoidKind::Orthogonal: break;
  }
  throw DomainError("weight combinatorics are not supported for the orthogonal kind");
}

RootDatum RootDatum::for_weight(const Weight& w) {
  return w.type == RootType::A ? type_a(w.a.size()) : type_c(w.a.size());
}

std::vector<std::vector<std::int64_t>> RootDatum::cartan() const {
  std::vector<std::vector<std::int64_t>> c(simple_.size(), std::vector<std::int64_t>(simple_.size()));
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    for (std::size_t j = 0; j < simple_.size(); ++j) c[i][j] = pair(simple_[j], simple_coroots_[i]);
  }
  return c;
}

Weight RootDatum::zero() const {
  return type_ == RootType::A ? Weight::type_a(std::vector<std::int64_t>(size_, 0))
                              : Weight::type_c(std::vector<std::int64_t>(size_, 0), 0);
}

bool RootDatum::matches(const Weight& w) const {
  return w.type == type_ && w.a.size() == size_ && (type_ == RootType::C || w.k == 0);
}

void RootDatum::require_shape(const Weight& w) const {
  if (!matches(w)) {
    throw DomainError(std::string("weight shape mismatch: expected type ") + (type_ == RootType::A ? "A" : "C") +
                      " with " + std::to_string(size_) + " coordinates, got " + w.to_string());
  }
}

std::int64_t RootDatum::pair(const Weight& w, const std::vector<std::int64_t>& coroot) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += w.a[i] * coroot[i];
  return s;
}

bool SliceOrder::operator()(const Weight& x, const Weight& y) const {
  if (x.type != y.type) return x.type < y.type;
  if (x.k != y.k) return x.k < y.k;
  return x.a > y.a;
}

bool is_dominant(const RootDatum& rd, const Weight& w) {
  rd.require_shape(w);
  for (const auto& coroot : rd.simple_coroots()) {
    if (rd.pair(w, coroot) < 0) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> simple_root_coefficients(const RootDatum& rd, const Weight& diff) {
  rd.require_shape(diff);
  if (diff.degree() != 0) return std::nullopt;
  const std::size_t size = rd.rank_parameter();
  std::vector<std::int64_t> c;
  // Partial sums give the e_i - e_{i+1} coefficients.
  std::int64_t partial = 0;
  for (std::size_t i = 0; i + 1 < size; ++i) {
    partial += diff.a[i];
    c.push_back(partial);
  }
  if (rd.type() == RootType::C) {
    // a_m = -c_{m-1} + 2 c_m and k = -c_m.
    c.push_back(-diff.k);
    const std::int64_t prev = size >= 2 ? c[size - 2] : 0;
    if (2 * c.back() - prev != diff.a[size - 1]) return std::nullopt;
  }
  return c;
}

bool dominance_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  rd.require_shape(lambda);
  rd.require_shape(mu);
  const auto c = simple_root_coefficients(rd, mu - lambda);
  return c && std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
}

bool xd_contains(const MonoidSpec& spec, const Weight& w) {
  const RootDatum rd = RootDatum::for_spec(spec);
  rd.require_shape(w);
  if (spec.kind == MonoidKind::Full) {
    return std::all_of(w.a.begin(), w.a.end(), [](std::int64_t x) { return x >= 0; });
  }
  // Monoid generated by eps_i = (e_i; 0) and eps_{i'} = (-e_i; 1): each
  // negative a_i needs |a_i| copies of eps_{i'}, each contributing 1 to k.
  std::int64_t needed = 0;
  for (std::int64_t x : w.a) needed += std::max<std::int64_t>(0, -x);
  return w.k >= needed && w.degree() >= 0;
}

std::vector<std::vector<std::int64_t>> partitions(std::int64_t total, std::size_t parts, std::int64_t max_part) {
  std::vector<std::vector<std::int64_t>> out;
  if (total < 0) return out;
  if (max_part < 0 || max_part > total) max_part = total;
  std::vector<std::int64_t> cur(parts, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left,
                                                                         std::int64_t cap) {
    if (left == 0) {
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end(), 0);
      out.push_back(cur);
      return;
    }
    if (pos == parts) return;
    for (std::int64_t v = std::min(cap, left); v >= 1; --v) {
      // Remaining parts cannot exceed v each.
      if (v * static_cast<std::int64_t>(parts - pos) < left) break;
      cur[pos] = v;
      rec(pos + 1, left - v, v);
    }
  };
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  rec(0, total, max_part);
  return out;
}

std::vector<Weight> xd_dominant_enumerate(const MonoidSpec& spec, std::int64_t degree) {
  const RootDatum rd = RootDatum::for_spec(spec);
  std::vector<Weight> out;
  if (degree < 0) return out;
  if (spec.kind == MonoidKind::Full) {
    for (auto& p : partitions(degree, spec.n)) out.push_back(Weight::type_a(std::move(p)));
    return out;
  }
  const std::size_t m = spec.n / 2;
  for (std::int64_t k = 0; 2 * k <= degree; ++k) {
    for (auto& p : partitions(degree - 2 * k, m)) out.push_back(Weight::type_c(std::move(p), k));
  }
  return out;
}

std::vector<Weight> xd_dominant_scan(const MonoidSpec& spec, std::int64_t degree) {
  const RootDatum rd = RootDatum::for_spec(spec);
  std::vector<Weight> out;
  if (degree < 0) return out;
  const std::size_t size = rd.rank_parameter();
  Weight w = rd.zero();
  const std::int64_t kmax = spec.kind == MonoidKind::Full ? 0 : degree;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == size) {
      for (std::int64_t k = 0; k <= kmax; ++k) {
        w.k = k;
        if (w.degree() == degree && xd_contains(spec, w) && is_dominant(rd, w)) out.push_back(w);
      }
      w.k = 0;
      return;
    }
    for (std::int64_t v = -degree; v <= degree; ++v) {
      w.a[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), SliceOrder{});
  return out;
}

std::vector<Weight> dominant_predecessors(const RootDatum& rd, const Weight& mu) {
  if (!is_dominant(rd, mu)) throw DomainError("dominant_predecessors expects a dominant weight, got " + mu.to_string());
  std::vector<Weight> out;
  const std::size_t size = rd.rank_parameter();
  if (rd.type() == RootType::A) {
    // lambda <= mu with both dominant forces mu_n <= lambda_i <= mu_1.
    const std::int64_t hi = mu.a.front();
    const std::int64_t lo = mu.a.back();
    const std::int64_t total = mu.degree();
    Weight w = rd.zero();
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t cap,
                                                                           std::int64_t sum) {
      if (pos == size) {
        if (sum == total && dominance_leq(rd, w, mu)) out.push_back(w);
        return;
      }
      for (std::int64_t v = cap; v >= lo; --v) {
        w.a[pos] = v;
        rec(pos + 1, v, sum + v);
      }
    };
    rec(0, hi, 0);
  } else {
    // Dominant type C weights have a_1 >= ... >= a_m >= 0; lambda <= mu
    // bounds lambda_1 <= mu_1 and |lambda.a| <= |mu.a| with equal parity.
    std::int64_t mu_sum = 0;
    for (std::int64_t x : mu.a) mu_sum += x;
    for (std::int64_t s = mu_sum; s >= 0; s -= 2) {
      for (auto& p : partitions(s, size, mu.a.front())) {
        Weight w = Weight::type_c(std::move(p), mu.k + (mu_sum - s) / 2);
        if (dominance_leq(rd, w, mu)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), SliceOrder{});
  return out;
}

bool is_saturated(const RootDatum& rd, const WeightSet& set) {
  for (const Weight& mu : set) {
    if (!is_dominant(rd, mu)) throw DomainError("is_saturated expects dominant weights, got " + mu.to_string());
  }
  for (const Weight& mu : set) {
    for (const Weight& lambda : dominant_predecessors(rd, mu)) {
      if (!set.contains(lambda)) return false;
    }
  }
  return true;
}

bool check_xd_plus_saturated(const MonoidSpec& spec, std::int64_t degree) {
  const RootDatum rd = RootDatum::for_spec(spec);
  const std::vector<Weight> slice = xd_dominant_scan(spec, degree);
  if (slice != xd_dominant_enumerate(spec, degree)) return false;
  for (const Weight& mu : slice) {
    for (const Weight& lambda : dominant_predecessors(rd, mu)) {
      if (!xd_contains(spec, lambda)) return false;
    }
  }
  return true;
}

Multiplicities truncate_multiplicities(const WeightSet& keep, const Multiplicities& mult) {
  Multiplicities out;
  for (const auto& [w, m] : mult) out.emplace(w, keep.contains(w) ? m : BigInt(0));
  return out;
}

}  // namespace redmon
