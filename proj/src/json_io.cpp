#include "krull/json_io.hpp"

#include "krull/errors.hpp"

namespace krull {

namespace {

std::uint64_t parse_key(const std::string& key) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw DomainError("expected an integer key, got \"" + key + "\"");
  return v;
}

std::uint64_t as_uint(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw DomainError(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const FiniteFieldElement& a) {
  const FiniteField& F = a.field();
  Json field = {{"p", F.characteristic()}, {"n", F.degree()}};
  // Non-canonical fields carry their modulus, constant term first.
  if (!F.canonical()) field["modulus"] = F.modulus().coefficients();
  return {{"field", field}, {"coords", a.coords()}};
}

FiniteFieldElement element_from_json(const Json& j) {
  const Json& f = j.at("field");
  const auto p = as_uint(f.at("p"), "p");
  const auto n = static_cast<unsigned>(as_uint(f.at("n"), "n"));
  if (f.contains("modulus")) {
    const FiniteField field(FpPolynomial::from_ints(PrimeField(p), f.at("modulus").get<std::vector<std::int64_t>>()));
    if (field.degree() != n) throw DomainError("modulus degree does not match n");
    return field.element(j.at("coords").get<std::vector<std::uint64_t>>());
  }
  const FiniteField field(p, n);
  return field.element(j.at("coords").get<std::vector<std::uint64_t>>());
}

Json to_json(const Subset& s) { return s.indices(); }

Json to_json(const FiniteFilter& f) {
  Json members = Json::array();
  const SetFamily family = f.family();
  for (const auto& m : family.members()) members.push_back(to_json(m));
  return {{"carrier_size", f.carrier()}, {"members", members}};
}

Json to_json(const FiniteTopology& t) {
  Json members = Json::array();
  for (const auto& m : t.opens) members.push_back(to_json(m));
  return {{"carrier_size", t.carrier}, {"members", members}};
}

Json to_json(const Violation& v) {
  Json witness = Json::array();
  for (const auto& s : v.witness) witness.push_back(to_json(s));
  Json out = {{"axiom", v.axiom}, {"witness", witness}};
  if (!v.points.empty()) out["points"] = v.points;
  return out;
}

Json to_json(const ContinuityReport& r) {
  Json out = {{"continuous", r.ok}};
  if (!r.ok) {
    out["map"] = r.map;
    if (r.open) out["open"] = to_json(*r.open);
    if (r.point) out["point"] = {r.point->first, r.point->second};
  }
  return out;
}

Json to_json(const SubgroupDesc& h) { return h.elements; }

Json to_json(const CorrespondenceReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json field;
    if (const auto* f = std::get_if<FiniteSubfield>(&p.field)) {
      field = {{"degree", f->degree}};
    } else {
      const auto& c = std::get<CyclotomicSubfield>(p.field);
      Json basis = Json::array();
      for (const auto& row : row_echelon(c.span)) {
        Json r_json = Json::array();
        for (const auto& q : row) r_json.push_back(q.to_string());
        basis.push_back(r_json);
      }
      field = {{"degree", p.field_degree}, {"basis", basis}};
    }
    pairs.push_back({{"subgroup", to_json(p.subgroup)}, {"field", field}, {"roundtrip_ok", p.roundtrip_ok}});
  }
  return {{"group", r.group}, {"pairs", pairs}, {"violations", r.violations}};
}

Json to_json(const SupernaturalNumber& s) {
  Json out = Json::object();
  for (const auto& [p, e] : s.support()) {
    if (e.is_infinite()) {
      out[std::to_string(p)] = "inf";
    } else {
      out[std::to_string(p)] = e.value;
    }
  }
  return out;
}

SupernaturalNumber supernatural_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("supernatural number must be a JSON object");
  SupernaturalNumber s;
  for (const auto& [key, value] : j.items()) {
    const std::uint64_t p = parse_key(key);
    if (value.is_string()) {
      if (value.get<std::string>() != "inf") throw DomainError("exponent must be an integer or \"inf\"");
      s.set(p, Exponent::infinite());
    } else {
      const std::uint64_t e = as_uint(value, "exponent");
      if (e >= Exponent::kInfinite) throw DomainError("exponent too large");
      s.set(p, Exponent{static_cast<std::uint32_t>(e)});
    }
  }
  return s;
}

Json to_json(const TruncatedSupernatural& t) {
  Json out = Json::object();
  for (const auto& [p, e] : t) out[std::to_string(p)] = {{"exponent", e.value}, {"at_cap", e.at_cap}};
  return out;
}

Json to_json(const CompatibleFamily& f) {
  Json residues = Json::object();
  for (const auto& [d, r] : f.residues) residues[std::to_string(d)] = r;
  return {{"bound", f.bound}, {"residues", residues}};
}

CompatibleFamily family_from_json(const Json& j, std::uint64_t bound) {
  if (j.is_number_integer()) {
    const auto x = j.get<std::int64_t>();
    const auto b = static_cast<std::int64_t>(bound);
    return CompatibleFamily::of_element(bound, static_cast<std::uint64_t>(((x % b) + b) % b));
  }
  if (!j.is_object()) throw DomainError("compatible family must be an integer or a JSON object");
  const Json* residues = &j;
  CompatibleFamily f;
  f.bound = bound;
  if (j.contains("residues")) {
    residues = &j.at("residues");
    if (j.contains("bound")) f.bound = as_uint(j.at("bound"), "bound");
  }
  for (const auto& [key, value] : residues->items()) f.residues[parse_key(key)] = as_uint(value, "residue");
  return f;
}

Json to_json(const OpenCoset& c) { return {{"level", c.level}, {"residue", c.residue}}; }

Json to_json(const KrullRoundtrip& r) {
  return {{"bound", r.bound},         {"levels", r.levels},   {"expected", to_json(r.expected)},
          {"recovered", to_json(r.recovered)}, {"roundtrip_ok", r.ok}, {"dual_ok", r.dual_ok}};
}

Json to_json(const LatticeResult& r) {
  return {{"gcd", to_json(r.gcd)},
          {"lcm", to_json(r.lcm)},
          {"a_divides_b", r.a_divides_b},
          {"b_divides_a", r.b_divides_a}};
}

Json to_json(const CompactnessReport& r) {
  return {{"bound", r.bound}, {"tower", to_string(r.tower)}, {"cases", r.cases}, {"violations", r.violations}};
}

}  // namespace krull
