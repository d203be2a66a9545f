#include "redmon/monoid.hpp"

#include <algorithm>
#include <utility>

#include "redmon/error.hpp"
#include "redmon/rng.hpp"

namespace redmon {

std::string to_string(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::Full: return "full";
    case MonoidKind::Orthogonal: return "orthogonal";
    case MonoidKind::Symplectic: return "symplectic";
  }
  return "?";
}

MonoidKind parse_monoid_kind(const std::string& text) {
  if (text == "full") return MonoidKind::Full;
  if (text == "orthogonal") return MonoidKind::Orthogonal;
  if (text == "symplectic") return MonoidKind::Symplectic;
  throw DomainError("unknown monoid kind '" + text + "' (expected full|orthogonal|symplectic)");
}

MonoidSpec MonoidSpec::make(MonoidKind kind, std::size_t n, Field field) {
  if (n == 0) throw DomainError("n must be positive");
  if (kind == MonoidKind::Symplectic && n % 2 != 0) {
    throw DomainError("symplectic kind requires even n (got n=" + std::to_string(n) + ")");
  }
  if (kind == MonoidKind::Orthogonal && field.characteristic() == 2) {
    throw DomainError("orthogonal kind requires characteristic != 2");
  }
  return MonoidSpec{kind, n, field};
}

FormKind MonoidSpec::form() const {
  if (kind == MonoidKind::Full) throw DomainError("full kind carries no bilinear form");
  return kind == MonoidKind::Orthogonal ? FormKind::Orthogonal : FormKind::Symplectic;
}

Matrix MonoidSpec::gram() const { return gram_matrix(form(), n, field); }

std::size_t MonoidSpec::max_idempotent_rank() const { return has_form() ? n / 2 : n; }

namespace {

void check_square(const MonoidSpec& spec, const Matrix& a) {
  if (a.rows() != spec.n || a.cols() != spec.n) {
    throw DomainError("expected a " + std::to_string(spec.n) + "x" + std::to_string(spec.n) + " matrix, got " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!(a.field() == spec.field)) {
    throw DomainError("field mismatch: matrix over " + a.field().to_string() + ", spec over " +
                      spec.field.to_string());
  }
}

// B(x, y) for column matrices.
Scalar bilinear(const MonoidSpec& spec, const Matrix& x, const Matrix& y) {
  return form_eval(spec.form(), spec.n, x.entries(), y.entries());
}

Matrix basis_vector(const MonoidSpec& spec, std::size_t i) {
  Matrix e(spec.n, 1, spec.field);
  e(i, 0) = Scalar::one(spec.field);
  return e;
}

}  // namespace

std::optional<Scalar> similitude_factor(const MonoidSpec& spec, const Matrix& a) {
  check_square(spec, a);
  if (!spec.has_form()) throw DomainError("similitude factor is undefined for the full kind");
  const Matrix j = spec.gram();
  const Matrix left = transpose(a) * j * a;
  const Matrix right = a * j * transpose(a);
  // J(0, n-1) = 1 for both forms, so c is read off that entry.
  const Scalar c = left(0, spec.n - 1);
  const Matrix cj = c * j;
  if (left == cj && right == cj) return c;
  return std::nullopt;
}

bool is_member(const MonoidSpec& spec, const Matrix& a) {
  check_square(spec, a);
  if (!spec.has_form()) return true;
  return similitude_factor(spec, a).has_value();
}

bool is_unit(const MonoidSpec& spec, const Matrix& a) {
  check_square(spec, a);
  if (!spec.has_form()) return !det(a).is_zero();
  const auto c = similitude_factor(spec, a);
  return c && !c->is_zero();
}

Matrix idempotent(const MonoidSpec& spec, const std::vector<std::size_t>& support) {
  Matrix e(spec.n, spec.n, spec.field);
  for (std::size_t i : support) {
    if (i >= spec.n) throw DomainError("idempotent support index out of range");
    e(i, i) = Scalar::one(spec.field);
  }
  return e;
}

Matrix canonical_idempotent(const MonoidSpec& spec, std::size_t rank) {
  if (rank > spec.max_idempotent_rank()) {
    throw DomainError("rank " + std::to_string(rank) + " exceeds the maximum " +
                      std::to_string(spec.max_idempotent_rank()) + " for " + to_string(spec.kind));
  }
  std::vector<std::size_t> support(rank);
  for (std::size_t i = 0; i < rank; ++i) support[i] = i;
  return idempotent(spec, support);
}

std::vector<Matrix> idempotents_in_torus_closure(const MonoidSpec& spec) {
  if (spec.n > 20) throw DomainError("idempotent enumeration supports n <= 20");
  std::vector<std::vector<std::size_t>> supports;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.n); ++mask) {
    std::vector<std::size_t> s;
    bool pair_free = true;
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (!((mask >> i) & 1)) continue;
      s.push_back(i);
      if (spec.has_form() && ((mask >> paired_index(i, spec.n)) & 1)) pair_free = false;
    }
    if (pair_free) supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Matrix> out;
  out.reserve(supports.size() + 1);
  for (const auto& s : supports) out.push_back(idempotent(spec, s));
  if (spec.has_form()) out.push_back(Matrix::identity(spec.n, spec.field));
  return out;
}

bool torus_closure_contains(const MonoidSpec& spec, const Matrix& d) {
  check_square(spec, d);
  if (!d.is_diagonal()) throw DomainError("torus_closure_contains expects a diagonal matrix");
  if (!spec.has_form()) return true;
  const Scalar c = d(0, 0) * d(spec.n - 1, spec.n - 1);
  for (std::size_t i = 1; i < spec.n; ++i) {
    const std::size_t ip = paired_index(i, spec.n);
    if (!(d(i, i) * d(ip, ip) == c)) return false;
  }
  return true;
}

OrbitClass classify_orbit(const MonoidSpec& spec, const Matrix& a) {
  check_square(spec, a);
  if (!spec.has_form()) {
    return det(a).is_zero() ? OrbitClass::singular(rank(a)) : OrbitClass::unit(1);
  }
  const auto c = similitude_factor(spec, a);
  if (!c) throw DomainError("classify_orbit: matrix is not a member of " + to_string(spec.kind));
  if (c->is_zero()) return OrbitClass::singular(rank(a));
  if (spec.kind == MonoidKind::Orthogonal && spec.n % 2 == 0) {
    // det(A)^2 = c^n, so det(A) = +-c^(n/2); the sign picks the component.
    const Scalar d = det(a);
    const Scalar power = c->pow(spec.n / 2);
    if (d == power) return OrbitClass::unit(1);
    if (d == -power) return OrbitClass::unit(-1);
    throw DomainError("determinant of a similitude is not +-c^(n/2)");
  }
  return OrbitClass::unit(1);
}

namespace {

// Isometry sending isotropic x to isotropic y, where B(x, y) != 0: the
// reflection in x - y (orthogonal) or the transvection along y - x
// (symplectic).
Matrix isotropic_swap(const MonoidSpec& spec, const Matrix& x, const Matrix& y) {
  const Matrix j = spec.gram();
  const Scalar bxy = bilinear(spec, x, y);
  if (bxy.is_zero()) throw DomainError("isotropic_swap needs B(x, y) != 0");
  const Matrix id = Matrix::identity(spec.n, spec.field);
  if (spec.kind == MonoidKind::Orthogonal) {
    // v -> v - 2 B(v, w) / B(w, w) w with w = x - y, B(w, w) = -2 B(x, y).
    const Matrix w = x - y;
    const Scalar coef = Scalar::one(spec.field) / bxy;
    return id + coef * (w * transpose(w) * j);
  }
  // v -> v + B(v, u) / B(x, y) u with u = y - x; B(v, u) = -u^T J v.
  const Matrix u = y - x;
  const Scalar coef = -(Scalar::one(spec.field) / bxy);
  return id + coef * (u * transpose(u) * j);
}

// Isometry sending the nonzero isotropic vector x, supported on the window
// of coordinates [t, n-1-t], to e_t. The maps used fix every coordinate
// outside the window.
Matrix move_to_basis_vector(const MonoidSpec& spec, const Matrix& x, std::size_t t) {
  const std::size_t n = spec.n;
  const std::size_t partner = paired_index(t, n);
  const Matrix target = basis_vector(spec, t);
  if (x == target) return Matrix::identity(n, spec.field);
  if (!bilinear(spec, x, target).is_zero()) return isotropic_swap(spec, x, target);

  // Route through an isotropic z pairing nontrivially with both x and e_t.
  Matrix z = basis_vector(spec, partner);
  if (bilinear(spec, x, z).is_zero()) {
    bool found = false;
    for (std::size_t j = t + 1; j < partner && !found; ++j) {
      if (paired_index(j, n) == j) continue;
      if (bilinear(spec, x, basis_vector(spec, j)).is_zero()) continue;
      z(j, 0) = Scalar::one(spec.field);
      found = true;
    }
    if (!found) throw DomainError("no isotropic pivot vector found (vector not isotropic?)");
  }
  const Matrix first = isotropic_swap(spec, x, z);
  return isotropic_swap(spec, z, target) * first;
}

// Isometry g such that g maps the span of the given columns (a totally
// isotropic subspace) into span(e_0, ..., e_{r-1}); returns g and r.
std::pair<Matrix, std::size_t> flatten_isotropic(const MonoidSpec& spec, Matrix vectors) {
  const std::size_t n = spec.n;
  Matrix g = Matrix::identity(n, spec.field);
  std::size_t t = 0;
  for (;; ++t) {
    const std::size_t last = n - 1 - t;
    if (t > last) break;
    // Find a column with nonzero window part [t, last].
    std::size_t pick = vectors.cols();
    for (std::size_t c = 0; c < vectors.cols() && pick == vectors.cols(); ++c) {
      for (std::size_t i = t; i <= last; ++i) {
        if (!vectors(i, c).is_zero()) {
          pick = c;
          break;
        }
      }
    }
    if (pick == vectors.cols()) break;
    Matrix window(n, 1, spec.field);
    for (std::size_t i = t; i <= last; ++i) window(i, 0) = vectors(i, pick);
    const Matrix step = move_to_basis_vector(spec, window, t);
    g = step * g;
    vectors = step * vectors;
  }
  return {g, t};
}

// Block-diagonal isometry diag(P, I, Q) acting as P on span(e_0..e_{r-1}).
Matrix levi_element(const MonoidSpec& spec, const Matrix& p) {
  const std::size_t n = spec.n;
  const std::size_t r = p.rows();
  const Matrix j = spec.gram();
  Matrix jur(r, r, spec.field);  // J restricted to rows 0..r-1, cols n-r..n-1
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) jur(i, k) = j(i, n - r + k);
  }
  const auto p_inv = invert(p);
  const auto jur_inv = invert(jur);
  if (!p_inv || !jur_inv) throw DomainError("levi_element: singular block");
  // P^T Jur Q = Jur.
  const Matrix q = *jur_inv * transpose(*p_inv) * jur;
  Matrix l = Matrix::identity(n, spec.field);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      l(i, k) = p(i, k);
      l(n - r + i, n - r + k) = q(i, k);
    }
  }
  return l;
}

// g such that g * a is in reduced row echelon form.
Matrix row_reduction_transform(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix g = Matrix::identity(n, a.field());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < n; ++c) {
    std::size_t p = r;
    while (p < n && work(p, c).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(work(p, j), work(r, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(g(p, j), g(r, j));
    const Scalar s = work(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) work(r, j) *= s;
    for (std::size_t j = 0; j < n; ++j) g(r, j) *= s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || work(i, c).is_zero()) continue;
      const Scalar f = work(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) work(i, j) -= f * work(r, j);
      for (std::size_t j = 0; j < n; ++j) g(i, j) -= f * g(r, j);
    }
    ++r;
  }
  return g;
}

}  // namespace

namespace {

bool is_diagonal_01(const Matrix& a) {
  if (!a.is_diagonal()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero() && !a(i, i).is_one()) return false;
  }
  return true;
}

}  // namespace

OrbitWitness orbit_witness(const MonoidSpec& spec, const Matrix& a) {
  check_square(spec, a);
  OrbitWitness w;
  if (is_diagonal_01(a) && is_member(spec, a) && !is_unit(spec, a)) {
    // Already an idempotent of the torus closure.
    w.g = Matrix::identity(spec.n, spec.field);
    w.h = w.g;
    w.e = a;
    return w;
  }
  if (!spec.has_form()) {
    // Classical rank normal form: row-reduce, then row-reduce the transpose.
    w.g = row_reduction_transform(a);
    const Matrix ga = w.g * a;
    w.h = transpose(row_reduction_transform(transpose(ga)));
    w.e = canonical_idempotent(spec, rank(a));
  } else {
    const auto c = similitude_factor(spec, a);
    if (!c) throw DomainError("orbit_witness: matrix is not a member of " + to_string(spec.kind));
    if (!c->is_zero()) throw DomainError("orbit_witness: input is a unit; use classify_orbit");
    auto [g, r] = flatten_isotropic(spec, a);
    const Matrix ga = g * a;
    // Rows of g*a span a totally isotropic subspace as well.
    auto [k, r2] = flatten_isotropic(spec, transpose(ga));
    if (r != r2) throw DomainError("orbit_witness: row and column ranks disagree");
    const Matrix h = transpose(k);
    const Matrix core = ga * h;
    Matrix block(r, r, spec.field);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) block(i, j) = core(i, j);
    }
    Matrix left = g;
    if (r > 0) {
      const auto block_inv = invert(block);
      if (!block_inv) throw DomainError("orbit_witness: reduced block is singular");
      left = levi_element(spec, *block_inv) * g;
    }
    w.g = std::move(left);
    w.h = h;
    w.e = canonical_idempotent(spec, r);
  }
  if (!(w.g * a * w.h == w.e) || !is_unit(spec, w.g) || !is_unit(spec, w.h)) {
    throw DomainError("orbit_witness: elimination failed to reach the canonical idempotent");
  }
  return w;
}

Matrix swap_reflection(const MonoidSpec& spec) {
  Matrix p = Matrix::identity(spec.n, spec.field);
  if (spec.n == 1) return p;
  p(0, 0) = Scalar::zero(spec.field);
  p(spec.n - 1, spec.n - 1) = Scalar::zero(spec.field);
  p(0, spec.n - 1) = Scalar::one(spec.field);
  p(spec.n - 1, 0) = Scalar::one(spec.field);
  return p;
}

namespace {

constexpr int kMaxSampleAttempts = 64;

Scalar draw(SplitMix64& rng, Field f, std::int64_t bound) {
  return Scalar::from_integer(f, BigInt(static_cast<long>(rng.uniform(-bound, bound))));
}

Scalar draw_nonzero(SplitMix64& rng, Field f, std::int64_t bound) {
  for (;;) {
    Scalar s = draw(rng, f, std::max<std::int64_t>(bound, 1));
    if (!s.is_zero()) return s;
  }
}

// Random integer matrix that is symmetric (symplectic) or antisymmetric
// (orthogonal), so that S = J^T X satisfies S^T J + J S = 0.
Matrix form_skew(const MonoidSpec& spec, SplitMix64& rng, std::int64_t bound) {
  const bool symmetric = spec.kind == MonoidKind::Symplectic;
  Matrix x(spec.n, spec.n, spec.field);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i; j < spec.n; ++j) {
      if (i == j) {
        if (symmetric) x(i, i) = draw(rng, spec.field, bound);
        continue;
      }
      x(i, j) = draw(rng, spec.field, bound);
      x(j, i) = symmetric ? x(i, j) : -x(i, j);
    }
  }
  return transpose(spec.gram()) * x;
}

}  // namespace

Matrix sample_unit(const MonoidSpec& spec, std::uint64_t seed, std::int64_t entry_bound, UnitComponent component) {
  if (entry_bound < 1) throw DomainError("entry_bound must be at least 1");
  if (component == UnitComponent::Reflected && spec.kind != MonoidKind::Orthogonal) {
    throw DomainError("the reflected component exists only for the orthogonal kind");
  }
  SplitMix64 rng(seed);
  const Matrix id = Matrix::identity(spec.n, spec.field);
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    if (!spec.has_form()) {
      Matrix a(spec.n, spec.n, spec.field);
      for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) a(i, j) = draw(rng, spec.field, entry_bound);
      }
      if (!det(a).is_zero()) return a;
      continue;
    }
    // Cayley transform (I - S)^{-1} (I + S) of a form-skew S.
    const Matrix s = form_skew(spec, rng, entry_bound);
    const auto inv = invert(id - s);
    if (!inv) continue;
    Matrix u = *inv * (id + s);
    u *= draw_nonzero(rng, spec.field, entry_bound);
    if (component == UnitComponent::Reflected) u = u * swap_reflection(spec);
    return u;
  }
  throw DomainError("sample_unit: no invertible sample after " + std::to_string(kMaxSampleAttempts) + " attempts");
}

Matrix sample_member(const MonoidSpec& spec, std::uint64_t seed, std::optional<std::size_t> rank,
                     std::int64_t entry_bound) {
  if (rank && *rank > spec.max_idempotent_rank()) {
    throw DomainError("rank_choice " + std::to_string(*rank) + " exceeds the maximum " +
                      std::to_string(spec.max_idempotent_rank()) + " for " + to_string(spec.kind));
  }
  SplitMix64 rng(derive_seed(seed, 0));
  auto component = [&]() {
    if (spec.kind != MonoidKind::Orthogonal) return UnitComponent::Identity;
    return rng.coin() ? UnitComponent::Reflected : UnitComponent::Identity;
  };
  const Matrix g = sample_unit(spec, derive_seed(seed, 1), entry_bound, component());
  const Matrix h = sample_unit(spec, derive_seed(seed, 2), entry_bound, component());
  Matrix e;
  if (rank) {
    e = canonical_idempotent(spec, *rank);
  } else {
    const auto all = idempotents_in_torus_closure(spec);
    e = all[rng.next() % all.size()];
  }
  return g * e * h;
}

}  // namespace redmon
