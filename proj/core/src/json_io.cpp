#include "redmon/json_io.hpp"

#include "redmon/error.hpp"

namespace redmon::json {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed JSON: " + what); }

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

BigInt integer_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.dump());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) malformed("not an integer: " + j.dump());
    return v;
  }
  malformed("expected an integer, got " + j.dump());
}

std::int64_t small_int(const json& j) {
  if (!j.is_number_integer()) malformed("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
  json entries = json::array();
  for (const Scalar& s : m.entries()) {
    if (m.field().is_rational()) {
      entries.push_back({s.rational().get_num().get_str(), s.rational().get_den().get_str()});
    } else {
      entries.push_back(s.residue());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", m.field().to_string()}, {"entries", entries}};
}

json to_json(const Weight& w) {
  json out = {{"type", w.type == RootType::A ? "A" : "C"}, {"a", w.a}};
  if (w.type == RootType::C) out["k"] = w.k;
  return out;
}

json to_json(const MonoidSpec& spec) {
  return {{"kind", to_string(spec.kind)}, {"n", spec.n}, {"field", spec.field.to_string()}};
}

json to_json(const OrbitClass& c) {
  if (c.is_unit()) return {{"class", "unit"}, {"component", c.component()}};
  return {{"class", "singular"}, {"rank", c.rank()}};
}

json to_json(const Multiplicities& mult) {
  json out = json::array();
  for (const auto& [w, m] : mult) out.push_back({{"weight", to_json(w)}, {"mult", m.get_str()}});
  return out;
}

json to_json(const DimTable& table) {
  json entries = json::array();
  for (const auto& [w, d] : table.entries) {
    json dim = d.fits_slong_p() ? json(d.get_si()) : json(d.get_str());
    entries.push_back({{"weight", to_json(w)}, {"dim", dim}});
  }
  return {{"spec", to_json(table.spec)}, {"degree", table.degree}, {"entries", entries}};
}

json to_json(const HwcReport& r) {
  json square = r.square_sum.fits_slong_p() ? json(r.square_sum.get_si()) : json(r.square_sum.get_str());
  return {{"spec", to_json(r.spec)},         {"degree", r.degree}, {"graded_dim", r.graded_dim},
          {"square_sum", square},            {"equal", r.equal},   {"points_used", r.points_used},
          {"seed", r.seed}};
}

Scalar scalar_from_json(const json& j, Field field) {
  if (field.is_rational()) {
    if (j.is_array()) {
      if (j.size() != 2) malformed("rational entry must be [num, den]");
      const BigInt den = integer_from(j[1]);
      if (den == 0) malformed("zero denominator");
      return Scalar(integer_from(j[0]), den);
    }
    if (j.is_string()) {
      BigRational q;
      if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) malformed("not a rational: " + j.dump());
      return Scalar(q);
    }
    return Scalar(integer_from(j));
  }
  return Scalar::from_integer(field, integer_from(j));
}

Matrix matrix_from_json(const json& j) {
  const std::int64_t rows = small_int(field_of(j, "rows"));
  const std::int64_t cols = small_int(field_of(j, "cols"));
  if (rows <= 0 || cols <= 0) malformed("rows and cols must be positive");
  Field field;
  if (j.contains("field")) {
    const json& fj = j.at("field");
    if (!fj.is_string()) malformed("field must be a string");
    field = Field::parse(fj.get<std::string>());
  }
  const json& ej = field_of(j, "entries");
  if (!ej.is_array()) malformed("entries must be an array");
  if (ej.size() != static_cast<std::size_t>(rows * cols)) {
    malformed("entries length " + std::to_string(ej.size()) + " != rows*cols " + std::to_string(rows * cols));
  }
  std::vector<Scalar> entries;
  entries.reserve(ej.size());
  for (const json& e : ej) entries.push_back(scalar_from_json(e, field));
  return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

Weight weight_from_json(const json& j) {
  const json& tj = field_of(j, "type");
  const json& aj = field_of(j, "a");
  if (!aj.is_array() || aj.empty()) malformed("weight 'a' must be a nonempty integer array");
  std::vector<std::int64_t> a;
  for (const json& x : aj) a.push_back(small_int(x));
  if (tj == "A") {
    if (j.contains("k") && small_int(j.at("k")) != 0) malformed("type A weights carry no k");
    return Weight::type_a(std::move(a));
  }
  if (tj == "C") return Weight::type_c(std::move(a), small_int(field_of(j, "k")));
  malformed("weight type must be \"A\" or \"C\"");
}

MonoidSpec spec_from_json(const json& j) {
  const json& kj = field_of(j, "kind");
  if (!kj.is_string()) malformed("kind must be a string");
  const std::int64_t n = small_int(field_of(j, "n"));
  if (n <= 0) malformed("n must be positive");
  Field field;
  if (j.contains("field")) field = Field::parse(j.at("field").get<std::string>());
  return MonoidSpec::make(parse_monoid_kind(kj.get<std::string>()), static_cast<std::size_t>(n), field);
}

OrbitClass orbit_from_json(const json& j) {
  const json& cj = field_of(j, "class");
  if (cj == "unit") {
    const std::int64_t c = small_int(field_of(j, "component"));
    if (c != 1 && c != -1) malformed("component must be 1 or -1");
    return OrbitClass::unit(static_cast<int>(c));
  }
  if (cj == "singular") {
    const std::int64_t r = small_int(field_of(j, "rank"));
    if (r < 0) malformed("rank must be nonnegative");
    return OrbitClass::singular(static_cast<std::size_t>(r));
  }
  malformed("class must be \"unit\" or \"singular\"");
}

Multiplicities multiplicities_from_json(const json& j) {
  if (!j.is_array()) malformed("multiplicities must be an array of {weight, mult}");
  Multiplicities out;
  for (const json& e : j) {
    BigInt m = integer_from(field_of(e, "mult"));
    if (m < 0) malformed("multiplicities must be nonnegative");
    out[weight_from_json(field_of(e, "weight"))] = m;
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace redmon::json
