#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "redmon/error.hpp"
#include "redmon/json_io.hpp"

namespace redmon::cli {

namespace {

using nlohmann::json;
namespace io = redmon::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::size_t n = 0;
  std::string field = "q";
  std::string in_path;
  std::string inline_json;
  std::int64_t degree = -1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t point_budget = 0;
  std::int64_t entry_bound = kDefaultEntryBound;
  std::int64_t rank = -1;
  std::string component = "plus";
  bool identity_component_only = false;
  std::string form;
};

MonoidSpec spec_of(const Options& o) {
  if (o.kind.empty()) throw UsageError("--kind is required");
  if (o.n == 0) throw UsageError("--n is required and must be positive");
  return MonoidSpec::make(parse_monoid_kind(o.kind), o.n, Field::parse(o.field));
}

std::int64_t degree_of(const Options& o) {
  if (o.degree < 0) throw UsageError("--degree is required and must be nonnegative");
  return o.degree;
}

json payload_of(const Options& o) {
  if (!o.inline_json.empty()) return json::parse(o.inline_json);
  if (o.in_path.empty()) throw UsageError("an input payload is required (--in <path> or --json <text>)");
  std::ifstream file(o.in_path);
  if (!file) throw DomainError("cannot read input file '" + o.in_path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return json::parse(buffer.str());
}

Matrix matrix_of(const Options& o, const MonoidSpec& spec) {
  json payload = payload_of(o);
  // A payload without "field" is read over the field given on the command line.
  if (payload.is_object() && !payload.contains("field")) payload["field"] = spec.field.to_string();
  Matrix a = io::matrix_from_json(payload);
  if (!(a.field() == spec.field)) {
    throw DomainError("field mismatch: input matrix over " + a.field().to_string() + ", --field " +
                      spec.field.to_string());
  }
  return a;
}

json maybe_scalar(const std::optional<Scalar>& s) { return s ? io::to_json(*s) : json(nullptr); }

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const Weight& w : ws) out.push_back(io::to_json(w));
  return out;
}

WeightSet weight_set_of(const json& j) {
  if (!j.is_array()) throw DomainError("malformed JSON: expected an array of weights");
  WeightSet set;
  for (const json& w : j) set.insert(io::weight_from_json(w));
  return set;
}

RootDatum datum_for(const WeightSet& set) {
  if (set.empty()) throw DomainError("weight set is empty");
  return RootDatum::for_weight(*set.begin());
}

GradedDimOptions oracle_options(const Options& o) {
  GradedDimOptions g;
  g.point_budget = o.point_budget;
  g.entry_bound = o.entry_bound;
  g.jobs = o.jobs;
  g.identity_component_only = o.identity_component_only;
  return g;
}

using Handler = std::function<int(const Options&, std::ostream&)>;

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> flags;
  Handler handler;
};

int emit(std::ostream& out, const json& j) {
  out << j.dump() << '\n';
  return kExitOk;
}

std::vector<Command> commands() {
  const std::vector<std::string> spec_flags = {"kind", "n", "field"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> f = spec_flags;
    f.insert(f.end(), extra.begin(), extra.end());
    return f;
  };
  return {
      {"member", "Membership test (with similitude factor)", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         const Matrix a = matrix_of(o, spec);
         const bool member = is_member(spec, a);
         json c = nullptr;
         if (spec.has_form()) c = maybe_scalar(similitude_factor(spec, a));
         return emit(out, {{"member", member}, {"c", c}});
       }},
      {"factor", "Similitude factor c with A^T J A = cJ = A J A^T", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         return emit(out, {{"c", maybe_scalar(similitude_factor(spec, matrix_of(o, spec)))}});
       }},
      {"unit", "Unit-group membership", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         return emit(out, {{"unit", is_unit(spec, matrix_of(o, spec))}});
       }},
      {"idempotents", "Idempotents of the diagonal torus closure", with({}),
       [](const Options& o, std::ostream& out) {
         json list = json::array();
         for (const Matrix& e : idempotents_in_torus_closure(spec_of(o))) list.push_back(io::to_json(e));
         return emit(out, list);
       }},
      {"torus-contains", "Membership of a diagonal matrix in the torus closure", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         return emit(out, {{"contains", torus_closure_contains(spec, matrix_of(o, spec))}});
       }},
      {"classify", "G x G orbit class", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         return emit(out, io::to_json(classify_orbit(spec, matrix_of(o, spec))));
       }},
      {"witness", "Units g, h and idempotent e with g A h = e", with({"in"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         const OrbitWitness w = orbit_witness(spec, matrix_of(o, spec));
         return emit(out, {{"g", io::to_json(w.g)}, {"h", io::to_json(w.h)}, {"e", io::to_json(w.e)}});
       }},
      {"sample-unit", "Seeded unit-group element", with({"seed", "entry-bound", "component"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         UnitComponent c = UnitComponent::Identity;
         if (o.component == "minus") c = UnitComponent::Reflected;
         return emit(out, io::to_json(sample_unit(spec, o.seed, o.entry_bound, c)));
       }},
      {"sample-member", "Seeded monoid element g e h", with({"seed", "entry-bound", "rank"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         std::optional<std::size_t> rank;
         if (o.rank >= 0) rank = static_cast<std::size_t>(o.rank);
         return emit(out, io::to_json(sample_member(spec, o.seed, rank, o.entry_bound)));
       }},
      {"gram", "Gram matrix J of the split form", {"form", "n", "field"},
       [](const Options& o, std::ostream& out) {
         if (o.n == 0) throw UsageError("--n is required and must be positive");
         const FormKind kind = o.form == "orthogonal" ? FormKind::Orthogonal : FormKind::Symplectic;
         return emit(out, io::to_json(gram_matrix(kind, o.n, Field::parse(o.field))));
       }},
      {"weights-enum", "Dominant X(D) weights of a given degree", with({"degree"}),
       [](const Options& o, std::ostream& out) {
         return emit(out, weights_json(xd_dominant_enumerate(spec_of(o), degree_of(o))));
       }},
      {"dominant", "Dominance test for a weight", {"in"},
       [](const Options& o, std::ostream& out) {
         const Weight w = io::weight_from_json(payload_of(o));
         return emit(out, {{"dominant", is_dominant(RootDatum::for_weight(w), w)}});
       }},
      {"dominance", "Dominance order: payload {\"lambda\": W, \"mu\": W}", {"in"},
       [](const Options& o, std::ostream& out) {
         const json p = payload_of(o);
         if (!p.is_object() || !p.contains("lambda") || !p.contains("mu")) {
           throw DomainError("malformed JSON: expected {\"lambda\": ..., \"mu\": ...}");
         }
         const Weight lambda = io::weight_from_json(p.at("lambda"));
         const Weight mu = io::weight_from_json(p.at("mu"));
         return emit(out, {{"leq", dominance_leq(RootDatum::for_weight(mu), lambda, mu)}});
       }},
      {"predecessors", "Dominant predecessors of a dominant weight", {"in"},
       [](const Options& o, std::ostream& out) {
         const Weight mu = io::weight_from_json(payload_of(o));
         return emit(out, weights_json(dominant_predecessors(RootDatum::for_weight(mu), mu)));
       }},
      {"saturated", "Saturation test for a set of dominant weights", {"in"},
       [](const Options& o, std::ostream& out) {
         const WeightSet set = weight_set_of(payload_of(o));
         if (set.empty()) return emit(out, {{"saturated", true}});
         return emit(out, {{"saturated", is_saturated(datum_for(set), set)}});
       }},
      {"check-saturation", "Brute-force saturation check of the degree-d slice of X(D)+", with({"degree"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         const std::int64_t d = degree_of(o);
         return emit(out, {{"spec", io::to_json(spec)},
                           {"degree", d},
                           {"slice_size", xd_dominant_enumerate(spec, d).size()},
                           {"saturated", check_xd_plus_saturated(spec, d)}});
       }},
      {"truncate", "Truncate multiplicities: payload {\"pi\": [W...], \"mult\": [{weight, mult}...]}", {"in"},
       [](const Options& o, std::ostream& out) {
         const json p = payload_of(o);
         if (!p.is_object() || !p.contains("pi") || !p.contains("mult")) {
           throw DomainError("malformed JSON: expected {\"pi\": ..., \"mult\": ...}");
         }
         return emit(out, io::to_json(truncate_multiplicities(weight_set_of(p.at("pi")),
                                                                io::multiplicities_from_json(p.at("mult")))));
       }},
      {"dim-nabla", "Weyl dimension of nabla(lambda)", {"in"},
       [](const Options& o, std::ostream& out) {
         const Weight w = io::weight_from_json(payload_of(o));
         const BigInt d = dim_nabla(RootDatum::for_weight(w), w);
         return emit(out, {{"weight", io::to_json(w)}, {"dim", d.fits_slong_p() ? json(d.get_si()) : json(d.get_str())}});
       }},
      {"square-sum", "Sum of dim nabla(lambda)^2 over the degree-d slice", with({"degree"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         const std::int64_t d = degree_of(o);
         json j = io::to_json(dim_table(spec, d));
         const BigInt sum = graded_square_sum(spec, d);
         j["square_sum"] = sum.fits_slong_p() ? json(sum.get_si()) : json(sum.get_str());
         return emit(out, j);
       }},
      {"graded-dim", "Evaluation-rank oracle for dim K[M]_d",
       with({"degree", "seed", "point-budget", "entry-bound", "jobs", "identity-component"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         const std::int64_t d = degree_of(o);
         const GradedDimResult r = graded_dim(spec, d, o.seed, oracle_options(o));
         emit(out, {{"spec", io::to_json(spec)},
                    {"degree", d},
                    {"graded_dim", r.dim},
                    {"monomials", r.monomials},
                    {"points_used", r.points_used},
                    {"stable", r.stable},
                    {"seed", o.seed}});
         return r.stable ? kExitOk : kExitDomain;
       }},
      {"verify-hwc", "Compare dim K[M]_d with the sum of squared nabla dimensions",
       with({"degree", "seed", "point-budget", "entry-bound", "jobs"}),
       [](const Options& o, std::ostream& out) {
         const MonoidSpec spec = spec_of(o);
         return emit(out, io::to_json(verify_hwc_identity(spec, degree_of(o), o.seed, oracle_options(o))));
       }},
      {"bialgebra-check", "Symbolic bialgebra axiom check on M_n up to --degree", {"n", "degree"},
       [](const Options& o, std::ostream& out) {
         if (o.n == 0) throw UsageError("--n is required and must be positive");
         const std::int64_t d = degree_of(o);
         return emit(out, {{"n", o.n},
                           {"max_degree", d},
                           {"ok", check_bialgebra_axioms(o.n, static_cast<std::size_t>(d))}});
       }},
  };
}

void add_flags(CLI::App* sub, Options& o, const std::vector<std::string>& flags) {
  for (const std::string& f : flags) {
    if (f == "kind") {
      sub->add_option("--kind", o.kind, "full|orthogonal|symplectic")
          ->check(CLI::IsMember({"full", "orthogonal", "symplectic"}));
    } else if (f == "n") {
      sub->add_option("--n", o.n, "Matrix size n");
    } else if (f == "field") {
      sub->add_option("--field", o.field, "q or fp:<p>");
    } else if (f == "in") {
      sub->add_option("--in", o.in_path, "Input JSON file");
      sub->add_option("--json", o.inline_json, "Inline input JSON");
    } else if (f == "degree") {
      sub->add_option("--degree", o.degree, "Degree d");
    } else if (f == "seed") {
      sub->add_option("--seed", o.seed, "Random seed");
    } else if (f == "entry-bound") {
      sub->add_option("--entry-bound", o.entry_bound, "Height bound for sampled entries");
    } else if (f == "component") {
      sub->add_option("--component", o.component, "plus|minus (orthogonal only)")
          ->check(CLI::IsMember({"plus", "minus"}));
    } else if (f == "rank") {
      sub->add_option("--rank", o.rank, "Rank of the idempotent");
    } else if (f == "point-budget") {
      sub->add_option("--point-budget", o.point_budget, "Maximum sampled points (0 = max(4 x monomials, 3 x batch))");
    } else if (f == "jobs") {
      sub->add_option("--jobs", o.jobs, "Worker threads for row evaluation");
    } else if (f == "identity-component") {
      sub->add_flag("--identity-component", o.identity_component_only, "Orthogonal: sample OM+ only");
    } else if (f == "form") {
      sub->add_option("--form", o.form, "orthogonal|symplectic")
          ->required()
          ->check(CLI::IsMember({"orthogonal", "symplectic"}));
    }
  }
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", message}, {"kind", kind}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with reductive matrix monoids", "redmon"};
  app.require_subcommand(1, 1);
  Options opts;
  std::map<CLI::App*, Handler> handlers;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    std::vector<std::string> flags = c.flags;
    // Every subcommand takes --seed so scripted runs can pass it uniformly;
    // deterministic subcommands ignore it.
    if (std::find(flags.begin(), flags.end(), "seed") == flags.end()) flags.push_back("seed");
    add_flags(sub, opts, flags);
    handlers[sub] = c.handler;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }

  CLI::App* selected = app.get_subcommands().front();
  if (selected->get_help_ptr() && selected->get_help_ptr()->count() > 0) {
    out << selected->help();
    return kExitOk;
  }
  try {
    return handlers.at(selected)(opts, out);
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    report_error(err, "domain", e.what());
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "domain", std::string("malformed JSON: ") + e.what());
    return kExitDomain;
  }
}

}  // namespace redmon::cli
