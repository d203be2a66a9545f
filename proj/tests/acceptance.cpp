// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "redmon/coordring.hpp"
#include "redmon/monoid.hpp"
#include "redmon/repdim.hpp"
#include "redmon/rng.hpp"
#include "redmon/weights.hpp"
#include "test_util.hpp"

using namespace redmon;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (check.ok && secs > limit_s) {
    check.ok = false;
    check.detail = "exceeded time limit";
  }
  std::printf("[%s] %2d %-44s %8.3fs (limit %gs)%s%s\n", check.ok ? "PASS" : "FAIL", id, name, secs, limit_s,
              check.detail.empty() ? "" : "  ", check.detail.c_str());
  std::fflush(stdout);
  return check.ok;
}

std::string spec_label(const MonoidSpec& spec) { return to_string(spec.kind) + " n=" + std::to_string(spec.n); }

void membership_laws(Check& c) {
  for (MonoidKind kind : {MonoidKind::Orthogonal, MonoidKind::Symplectic}) {
    for (std::size_t n : {2u, 4u, 6u}) {
      const MonoidSpec spec = MonoidSpec::make(kind, n);
      for (std::uint64_t t = 0; t < 100; ++t) {
        const Matrix a = sample_member(spec, derive_seed(n, 2 * t));
        const Matrix b = sample_member(spec, derive_seed(n, 2 * t + 1));
        const auto ca = similitude_factor(spec, a);
        const auto cb = similitude_factor(spec, b);
        const auto cab = similitude_factor(spec, a * b);
        c.require(ca && cb && cab && is_member(spec, a * b) && *cab == *ca * *cb,
                  spec_label(spec) + " trial " + std::to_string(t));
      }
    }
  }
}

void extra_condition(Check& c) {
  const std::size_t n = 4;
  const auto j = oracle::symplectic_gram(n);
  const MonoidSpec spec = MonoidSpec::make(MonoidKind::Symplectic, n);
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)) && !found; ++mask) {
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (std::size_t b = 0; b < n * n; ++b) a[b / n][b % n] = static_cast<long>((mask >> b) & 1);
    const auto at = oracle::int_transpose(a);
    if (!oracle::int_is_zero(oracle::int_mul(oracle::int_mul(at, j), a))) continue;
    if (oracle::int_is_zero(oracle::int_mul(oracle::int_mul(a, j), at))) continue;
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) m(r, s) = Scalar(a[r][s]);
    }
    const Matrix jm = spec.gram();
    c.require((transpose(m) * jm * m).is_zero(), "library disagrees on A^T J A = 0");
    c.require(!(m * jm * transpose(m)).is_zero(), "library disagrees on A J A^T != 0");
    c.require(!is_member(spec, m), "one-sided isotropic matrix accepted as a member");
    found = true;
  }
  c.require(found, "no 0/1 witness found");
}

void idempotent_counts(Check& c) {
  for (MonoidKind kind : {MonoidKind::Orthogonal, MonoidKind::Symplectic}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const MonoidSpec spec = MonoidSpec::make(kind, 2 * m);
      std::set<std::vector<int>> brute;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.n); ++mask) {
        std::vector<Scalar> d;
        std::vector<int> bits;
        for (std::size_t i = 0; i < spec.n; ++i) {
          bits.push_back(static_cast<int>((mask >> i) & 1));
          d.push_back(Scalar(bits.back()));
        }
        const Matrix e = Matrix::diagonal(d);
        if (e * e == e && is_member(spec, e)) brute.insert(bits);
      }
      std::set<std::vector<int>> listed;
      const auto idem = idempotents_in_torus_closure(spec);
      for (const Matrix& e : idem) {
        std::vector<int> bits;
        for (std::size_t i = 0; i < spec.n; ++i) bits.push_back(e(i, i).is_one() ? 1 : 0);
        listed.insert(bits);
      }
      std::size_t expected = 1;
      for (std::size_t i = 0; i < m; ++i) expected *= 3;
      ++expected;
      c.require(idem.size() == listed.size() && listed == brute && idem.size() == expected,
                spec_label(spec) + ": " + std::to_string(idem.size()) + " listed, " +
                    std::to_string(brute.size()) + " by brute force");
    }
  }
}

void orbit_invariance(Check& c) {
  for (MonoidKind kind : {MonoidKind::Orthogonal, MonoidKind::Symplectic}) {
    const MonoidSpec spec = MonoidSpec::make(kind, 4);
    for (std::uint64_t t = 0; t < 100; ++t) {
      const std::size_t r = t % (spec.max_idempotent_rank() + 1);
      const Matrix a = sample_member(spec, derive_seed(404, t), r);
      c.require(classify_orbit(spec, a) == OrbitClass::singular(r), spec_label(spec) + " trial " + std::to_string(t));
    }
  }
  const MonoidSpec sp4 = MonoidSpec::make(MonoidKind::Symplectic, 4);
  for (std::uint64_t t = 0; t < 25; ++t) {
    const std::size_t r = t % 3;
    const Matrix a = sample_member(sp4, derive_seed(505, t), r);
    const OrbitWitness w = orbit_witness(sp4, a);
    c.require(w.g * a * w.h == w.e && is_unit(sp4, w.g) && is_unit(sp4, w.h) && w.e == canonical_idempotent(sp4, r),
              "witness round trip failed on sample " + std::to_string(t));
  }
}

void saturation(Check& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::int64_t d = 0; d <= 6; ++d) {
      c.require(check_xd_plus_saturated(MonoidSpec::make(MonoidKind::Full, n), d),
                "full n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  for (std::int64_t d = 0; d <= 4; ++d) {
    c.require(check_xd_plus_saturated(MonoidSpec::make(MonoidKind::Symplectic, 4), d),
              "symplectic m=2 d=" + std::to_string(d));
  }
}

void type_a_dimensions(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const RootDatum rd = RootDatum::type_a(n);
    for (std::int64_t cells = 0; cells <= 8; ++cells) {
      for (const auto& p : partitions(cells, n)) {
        c.require(dim_nabla(rd, Weight::type_a(p)) == ssyt_count(n, p),
                  "n=" + std::to_string(n) + " " + Weight::type_a(p).to_string());
      }
    }
  }
}

void schur_identity(Check& c) {
  for (std::uint64_t n = 1; n <= 3; ++n) {
    for (std::int64_t d = 0; d <= 4; ++d) {
      BigInt sum = 0;
      for (const auto& p : partitions(d, n)) {
        const BigInt dim = dim_nabla(RootDatum::type_a(n), Weight::type_a(p));
        sum += dim * dim;
      }
      const BigInt expected = binomial(n * n + static_cast<std::uint64_t>(d) - 1, static_cast<std::uint64_t>(d));
      c.require(sum == expected && graded_square_sum(MonoidSpec::make(MonoidKind::Full, n), d) == expected,
                "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  c.require(graded_square_sum(MonoidSpec::make(MonoidKind::Full, 2), 2) == 10, "n=2 d=2 is not 10");
}

void hwc_identity(Check& c) {
  struct Case {
    std::size_t n;
    std::int64_t d;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{2, 1, 4}, {2, 2, 10}, {2, 3, 20}, {2, 4, 35}, {4, 1, 16}, {4, 2, 126}};
  for (const Case& k : cases) {
    const MonoidSpec spec = MonoidSpec::make(MonoidKind::Symplectic, k.n);
    const HwcReport r = verify_hwc_identity(spec, k.d, 7);
    const std::string label = "n=" + std::to_string(k.n) + " d=" + std::to_string(k.d);
    c.require(r.equal && r.graded_dim == k.expected && r.square_sum == BigInt(k.expected),
              label + ": graded_dim " + std::to_string(r.graded_dim) + ", square_sum " + r.square_sum.get_str());
    // Rebuild the oracle's evaluation matrix and rank it with Bareiss.
    const auto monomials = monomials_of_degree(k.n * k.n, static_cast<std::size_t>(k.d));
    Matrix eval(r.points_used, monomials.size());
    for (std::size_t i = 0; i < r.points_used; ++i) {
      const Matrix point = sample_unit(spec, derive_seed(7, i));
      for (std::size_t j = 0; j < monomials.size(); ++j) eval(i, j) = monomials[j].evaluate(point);
    }
    c.require(rank(eval) == r.graded_dim, label + ": Bareiss rank disagrees with the incremental reducer");
    if (k.n == 2) {
      c.require(BigInt(k.expected) == binomial(static_cast<std::uint64_t>(k.d) + 3, 3), label + " binomial");
    }
  }
  // Seed determinism of the oracle on a small case.
  const MonoidSpec sp2 = MonoidSpec::make(MonoidKind::Symplectic, 2);
  const auto a = graded_dim(sp2, 3, 11);
  const auto b = graded_dim(sp2, 3, 11);
  c.require(a.dim == b.dim && a.points_used == b.points_used, "oracle not seed-deterministic");
}

void bialgebra(Check& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 0; d <= 2; ++d) {
      c.require(check_bialgebra_axioms(n, d), "axioms n=" + std::to_string(n) + " degree " + std::to_string(d));
    }
  }
  SplitMix64 rng(909);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
    SparsePoly p;
    const std::int64_t terms = rng.uniform(1, 4);
    for (std::int64_t i = 0; i < terms; ++i) {
      std::vector<std::size_t> vars(static_cast<std::size_t>(rng.uniform(0, 3)));
      for (auto& v : vars) v = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n * n) - 1));
      p.add_term(Monomial::from_variables(vars), Scalar(rng.uniform(-5, 5)));
    }
    const Matrix m1 = redmon::testing::random_matrix(rng, n, n, 5);
    const Matrix m2 = redmon::testing::random_matrix(rng, n, n, 5);
    c.require(p.evaluate(m1 * m2) == comultiply(n, p).evaluate(m1, m2), "evaluation trial " + std::to_string(t));
  }
}

std::string tool_path;

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) {
    if (ch == '\'') {
      q += "'\\''";
    } else {
      q += ch;
    }
  }
  return q + "'";
}

// stdout and exit status of the executable run through the shell.
std::pair<std::string, int> run_tool(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(tool_path);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {out, pclose(pipe)};
}

void cli_determinism(Check& c) {
  const std::string sp4 = "--kind=symplectic";
  const std::string a4 =
      R"({"rows":4,"cols":4,"entries":[1,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]})";
  const std::string sample = [] {
    std::ostringstream out, err;
    redmon::cli::run({"sample-member", "--kind", "symplectic", "--n", "4", "--seed", "3", "--rank", "1"}, out, err);
    return out.str();
  }();
  const std::vector<std::vector<std::string>> invocations = {
      {"member", sp4, "--n", "4", "--json", a4, "--seed", "1"},
      {"factor", sp4, "--n", "4", "--json", sample},
      {"unit", sp4, "--n", "4", "--json", sample},
      {"idempotents", sp4, "--n", "4"},
      {"torus-contains", sp4, "--n", "4", "--json", a4},
      {"classify", sp4, "--n", "4", "--json", sample},
      {"witness", sp4, "--n", "4", "--json", sample},
      {"sample-unit", "--kind", "orthogonal", "--n", "4", "--seed", "5", "--component", "minus"},
      {"sample-unit", sp4, "--n", "6", "--seed", "5"},
      {"sample-member", "--kind", "orthogonal", "--n", "5", "--seed", "8"},
      {"sample-member", sp4, "--n", "6", "--seed", "8", "--rank", "2"},
      {"gram", "--form", "symplectic", "--n", "4"},
      {"weights-enum", sp4, "--n", "4", "--degree", "3"},
      {"dominant", "--json", R"({"type":"C","a":[1,1],"k":2})"},
      {"dominance", "--json", R"({"lambda":{"type":"C","a":[0,0],"k":1},"mu":{"type":"C","a":[2,0],"k":0}})"},
      {"predecessors", "--json", R"({"type":"C","a":[2,0],"k":0})"},
      {"saturated", "--json", R"([{"type":"A","a":[2,0]},{"type":"A","a":[1,1]}])"},
      {"check-saturation", "--kind", "full", "--n", "3", "--degree", "4"},
      {"truncate", "--json",
       R"({"pi":[{"type":"A","a":[2,0]}],"mult":[{"weight":{"type":"A","a":[2,0]},"mult":3},{"weight":{"type":"A","a":[1,1]},"mult":1}]})"},
      {"dim-nabla", "--json", R"({"type":"C","a":[1,1],"k":0})"},
      {"square-sum", sp4, "--n", "4", "--degree", "2"},
      {"graded-dim", "--kind", "orthogonal", "--n", "2", "--degree", "2", "--seed", "13"},
      {"verify-hwc", sp4, "--n", "4", "--degree", "1", "--seed", "7"},
      {"bialgebra-check", "--n", "2", "--degree", "2"},
  };
  std::set<std::string> covered;
  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    const int r1 = redmon::cli::run(args, out1, err1);
    const int r2 = redmon::cli::run(args, out2, err2);
    c.require(r1 == 0, args[0] + " exited " + std::to_string(r1) + ": " + err1.str());
    c.require(r1 == r2 && out1.str() == out2.str() && err1.str() == err2.str(), args[0] + " output differs");
    if (!tool_path.empty()) {
      const auto [p1, s1] = run_tool(args);
      const auto [p2, s2] = run_tool(args);
      c.require(s1 == 0 && s2 == 0, args[0] + " executable exited nonzero: " + p1);
      c.require(p1 == p2 && p1 == out1.str(), args[0] + " executable output differs");
    }
    covered.insert(args[0]);
  }
  c.require(covered.size() == 22, "expected 22 subcommands, covered " + std::to_string(covered.size()));
}

}  // namespace

int main(int argc, char** argv) {
  // Optional path to the redmon executable; criterion 10 then also runs it.
  if (argc > 1) tool_path = argv[1];
  int failures = 0;
  failures += !run_criterion(1, "membership laws under products", 30, membership_laws);
  failures += !run_criterion(2, "extra membership condition is necessary", 10, extra_condition);
  failures += !run_criterion(3, "torus-closure idempotent counts", 5, idempotent_counts);
  failures += !run_criterion(4, "orbit invariance and witness round trips", 60, orbit_invariance);
  failures += !run_criterion(5, "saturation of X(D)+", 60, saturation);
  failures += !run_criterion(6, "type A dimensions vs tableaux", 10, type_a_dimensions);
  failures += !run_criterion(7, "Schur algebra dimension identity", 5, schur_identity);
  failures += !run_criterion(8, "symplectic highest-weight identity", 600, hwc_identity);
  failures += !run_criterion(9, "bialgebra axioms and evaluation", 30, bialgebra);
  failures += !run_criterion(10, "CLI determinism", 120, cli_determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
