#include "redmon/coordring.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "redmon/error.hpp"
#include "redmon/repdim.hpp"
#include "redmon/rng.hpp"

namespace redmon {

Monomial Monomial::variable(std::size_t var) {
  Monomial m;
  m.factors_.emplace_back(static_cast<std::uint32_t>(var), 1u);
  return m;
}

Monomial Monomial::from_variables(const std::vector<std::size_t>& vars) {
  Monomial m;
  for (std::size_t v : vars) m = m * variable(v);
  return m;
}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Scalar Monomial::evaluate(const Matrix& m) const {
  Scalar acc = Scalar::one(m.field());
  for (const auto& [v, e] : factors_) {
    if (v >= m.rows() * m.cols()) throw DomainError("monomial variable outside the matrix");
    acc *= m.entries()[v].pow(e);
  }
  return acc;
}

SparsePoly SparsePoly::constant(const Scalar& c) { return monomial(Monomial(), c); }

SparsePoly SparsePoly::monomial(const Monomial& m, const Scalar& c) {
  SparsePoly p(c.field());
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::entry(std::size_t i, std::size_t j, std::size_t n, Field field) {
  return monomial(Monomial::entry(i, j, n), Scalar::one(field));
}

void SparsePoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
  SparsePoly out(field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Scalar SparsePoly::evaluate(const Matrix& m) const {
  Scalar acc = Scalar::zero(m.field());
  for (const auto& [mono, c] : terms_) acc += c * mono.evaluate(m);
  return acc;
}

void TensorPoly::add_term(const Monomial& left, const Monomial& right, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(left, right), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator*(const TensorPoly& rhs) const {
  TensorPoly out(field_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
  }
  return out;
}

Scalar TensorPoly::evaluate(const Matrix& left, const Matrix& right) const {
  Scalar acc = Scalar::zero(left.field());
  for (const auto& [k, c] : terms_) acc += c * k.first.evaluate(left) * k.second.evaluate(right);
  return acc;
}

TensorPoly comultiply(std::size_t n, const Monomial& m, Field field) {
  TensorPoly out(field);
  out.add_term(Monomial(), Monomial(), Scalar::one(field));
  for (const auto& [var, exp] : m.factors()) {
    if (var >= n * n) throw DomainError("monomial variable outside M_n");
    const std::size_t i = var / n;
    const std::size_t j = var % n;
    TensorPoly dx(field);
    for (std::size_t k = 0; k < n; ++k) dx.add_term(Monomial::entry(i, k, n), Monomial::entry(k, j, n), Scalar::one(field));
    for (std::uint32_t e = 0; e < exp; ++e) out = out * dx;
  }
  return out;
}

TensorPoly comultiply(std::size_t n, const SparsePoly& p) {
  TensorPoly out(p.field());
  for (const auto& [m, c] : p.terms()) {
    const TensorPoly dm = comultiply(n, m, p.field());
    for (const auto& [k, d] : dm.terms()) out.add_term(k.first, k.second, c * d);
  }
  return out;
}

namespace {

bool is_diagonal_monomial(std::size_t n, const Monomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [n](const auto& f) { return f.first / n == f.first % n; });
}

}  // namespace

Scalar counit(std::size_t n, const SparsePoly& p) {
  Scalar acc = Scalar::zero(p.field());
  for (const auto& [m, c] : p.terms()) {
    if (is_diagonal_monomial(n, m)) acc += c;
  }
  return acc;
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree) {
  std::vector<Monomial> out;
  std::vector<std::size_t> pick(degree);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == degree) {
      out.push_back(Monomial::from_variables(pick));
      return;
    }
    for (std::size_t v = from; v < vars; ++v) {
      pick[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_bialgebra_axioms(std::size_t n, std::size_t max_degree) {
  if (n == 0) throw DomainError("n must be positive");
  const Field q = Field::rationals();
  using Triple = std::tuple<Monomial, Monomial, Monomial>;
  auto add = [](std::map<Triple, Scalar>& acc, Triple key, const Scalar& c) {
    auto [it, inserted] = acc.emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  std::map<Monomial, TensorPoly> cache;
  auto delta = [&](const Monomial& m) -> const TensorPoly& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, comultiply(n, m, q)).first;
    return it->second;
  };

  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (const Monomial& m : monomials_of_degree(n * n, d)) {
      const TensorPoly& dm = delta(m);
      std::map<Triple, Scalar> right_first;  // (id (x) Delta) o Delta
      std::map<Triple, Scalar> left_first;   // (Delta (x) id) o Delta
      SparsePoly left_counit(q);             // (eps (x) id) o Delta
      SparsePoly right_counit(q);            // (id (x) eps) o Delta
      for (const auto& [k, c] : dm.terms()) {
        for (const auto& [k2, c2] : delta(k.second).terms()) add(right_first, {k.first, k2.first, k2.second}, c * c2);
        for (const auto& [k2, c2] : delta(k.first).terms()) add(left_first, {k2.first, k2.second, k.second}, c * c2);
        if (is_diagonal_monomial(n, k.first)) left_counit.add_term(k.second, c);
        if (is_diagonal_monomial(n, k.second)) right_counit.add_term(k.first, c);
      }
      const SparsePoly expected = SparsePoly::monomial(m, Scalar::one(q));
      if (right_first != left_first || !(left_counit == expected) || !(right_counit == expected)) return false;
    }
  }
  return true;
}

namespace {

std::vector<Scalar> evaluation_row(const Matrix& point, const std::vector<Monomial>& monomials) {
  std::vector<Scalar> row;
  row.reserve(monomials.size());
  for (const Monomial& m : monomials) row.push_back(m.evaluate(point));
  return row;
}

}  // namespace

GradedDimResult graded_dim(const MonoidSpec& spec, std::int64_t degree, std::uint64_t seed,
                           const GradedDimOptions& options) {
  if (!spec.field.is_rational()) throw DomainError("graded_dim computes exact ranks over q only");
  if (degree < 0) throw DomainError("degree must be nonnegative");
  if (options.batch == 0) throw DomainError("batch size must be positive");
  const std::vector<Monomial> monomials = monomials_of_degree(spec.n * spec.n, static_cast<std::size_t>(degree));
  GradedDimResult result;
  result.monomials = monomials.size();
  // Three batches is the least that can ever show two unchanged batches.
  const std::size_t budget =
      options.point_budget ? options.point_budget : std::max(4 * monomials.size(), 3 * options.batch);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  auto component_for = [&](std::size_t index) {
    if (spec.kind != MonoidKind::Orthogonal || options.identity_component_only) return UnitComponent::Identity;
    return index % 2 == 0 ? UnitComponent::Identity : UnitComponent::Reflected;
  };

  RowRankAccumulator acc(monomials.size(), spec.field);
  std::size_t unchanged = 0;
  while (result.points_used < budget) {
    const std::size_t start = result.points_used;
    const std::size_t count = std::min(options.batch, budget - start);
    std::vector<std::vector<Scalar>> rows(count);
    auto work = [&](std::size_t worker) {
      for (std::size_t i = worker; i < count; i += jobs) {
        const Matrix point =
            sample_unit(spec, derive_seed(seed, start + i), options.entry_bound, component_for(start + i));
        rows[i] = evaluation_row(point, monomials);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    const std::size_t before = acc.rank();
    for (const auto& row : rows) acc.add_row(row);
    result.points_used += count;
    result.dim = acc.rank();
    if (result.dim == monomials.size()) {
      result.stable = true;
      break;
    }
    unchanged = result.dim == before ? unchanged + 1 : 0;
    if (unchanged >= 2) {
      result.stable = true;
      break;
    }
  }
  return result;
}

HwcReport verify_hwc_identity(const MonoidSpec& spec, std::int64_t degree, std::uint64_t seed,
                              const GradedDimOptions& options) {
  if (spec.kind == MonoidKind::Orthogonal) {
    throw DomainError("the highest-weight identity is checked for the full and symplectic kinds only");
  }
  const GradedDimResult oracle = graded_dim(spec, degree, seed, options);
  if (!oracle.stable) {
    throw DomainError("graded_dim did not stabilize within " + std::to_string(oracle.points_used) +
                      " points (rank so far " + std::to_string(oracle.dim) + ")");
  }
  HwcReport report;
  report.spec = spec;
  report.degree = degree;
  report.graded_dim = oracle.dim;
  report.square_sum = graded_square_sum(spec, degree);
  report.equal = report.square_sum == BigInt(std::to_string(oracle.dim));
  report.points_used = oracle.points_used;
  report.seed = seed;
  return report;
}

}  // namespace redmon
