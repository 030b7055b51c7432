#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <stdexcept>

#include "acceptance.hpp"
#include "krull/errors.hpp"
#include "krull/galois.hpp"
#include "krull/gfb.hpp"
#include "krull/json_io.hpp"
#include "krull/number_theory.hpp"
#include "krull/profinite.hpp"

namespace krull::cli {

namespace {

/// Bad flags or inputs; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  ExitCode code = kOk;
  Json payload;
};

const char* status_name(ExitCode c) {
  switch (c) {
    case kOk: return "ok";
    case kViolation: return "violation";
    default: return "error";
  }
}

Json parse_json(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError("--" + flag + ": malformed JSON (" + e.what() + ")");
  }
}

// Input decoding runs through here so that bad values are usage errors
// rather than violations.
template <class F>
auto decode(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  } catch (const Json::exception& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

Tower parse_tower(const std::string& s) {
  if (s == "zhat") return Tower::additive;
  if (s == "zhat_units") return Tower::units;
  throw UsageError("--tower must be zhat or zhat_units");
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
}

void require_positive(std::uint64_t v, const std::string& flag) {
  if (v == 0) throw UsageError("--" + flag + " must be positive");
}

FiniteGroup parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--group must look like zmod:N, units:N or sym:K");
  const std::string kind = spec.substr(0, colon);
  std::uint64_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoull(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("--group: bad order in " + spec);
  }
  return decode("group", [&] {
    if (kind == "zmod") return FiniteGroup::cyclic(n);
    if (kind == "units") return FiniteGroup::units(n);
    if (kind == "sym") return FiniteGroup::symmetric(static_cast<unsigned>(n));
    throw UsageError("--group: unknown group kind " + kind);
  });
}

Result cmd_lattice(std::uint64_t p, std::uint64_t n, Execution exec) {
  require_prime(p);
  require_positive(n, "n");
  const FrobeniusGroup G(p, static_cast<unsigned>(n));
  Result r;
  Json entries = Json::array();
  for (auto d : divisors(n)) {
    const auto h = fixing_subgroup(G, FiniteSubfield{static_cast<unsigned>(d)}, exec);
    const auto back = fixed_field(G, h, exec);
    Json covers = Json::array();
    for (auto e : divisors(d)) {
      if (e < d && is_prime(d / e)) covers.push_back(e);
    }
    if (h.elements.size() * d != n || back.degree != d) r.code = kViolation;
    entries.push_back({{"degree", d},
                       {"field_order", checked_pow(p, static_cast<unsigned>(d))},
                       {"subgroup", to_json(h)},
                       {"subgroup_order", h.elements.size()},
                       {"covers", covers}});
  }
  r.payload = {{"field", {{"p", p}, {"n", n}}}, {"group", G.group().name()}, {"lattice", entries}};
  return r;
}

Result cmd_correspondence_finite(std::uint64_t p, std::uint64_t n, Execution exec) {
  require_prime(p);
  require_positive(n, "n");
  const auto report = verify_galois_correspondence(FrobeniusGroup(p, static_cast<unsigned>(n)), exec);
  return {report.ok() ? kOk : kViolation, to_json(report)};
}

Result cmd_correspondence_cyclotomic(std::uint64_t n, Execution exec) {
  require_positive(n, "cyclotomic");
  const auto report = verify_galois_correspondence(CyclotomicGroup(n), exec);
  return {report.ok() ? kOk : kViolation, to_json(report)};
}

Result cmd_gfb_check(const std::string& group, const std::string& basis_text, Execution exec) {
  const FiniteGroup g = parse_group(group);
  const Json basis = parse_json(basis_text, "basis");
  const SetFamily family = decode("basis", [&] {
    if (!basis.is_array()) throw DomainError("basis must be an array of arrays of element labels");
    std::vector<Subset> members;
    for (const auto& member : basis) {
      Subset s(g.size());
      for (const auto& label : member) s.insert(g.index_of(label.get<std::int64_t>()));
      members.push_back(std::move(s));
    }
    return SetFamily(g.size(), std::move(members));
  });
  Result r;
  r.payload = {{"group", g.name()}};
  const auto checked = check_group_filter_basis(g, family);
  if (const auto* v = std::get_if<Violation>(&checked)) {
    Json violation = to_json(*v);
    // Witnesses in element labels rather than indices.
    Json labelled = Json::array();
    for (const auto& w : v->witness) labelled.push_back(g.labels_of(w));
    violation["witness"] = labelled;
    if (!v->points.empty()) {
      Json pts = Json::array();
      for (auto x : v->points) pts.push_back(g.label(static_cast<std::uint32_t>(x)));
      violation["points"] = pts;
    }
    r.code = kViolation;
    r.payload["valid"] = false;
    r.payload["violation"] = violation;
    return r;
  }
  r.payload["valid"] = true;
  if (g.size() <= kExplicitCarrierLimit) {
    const auto t = induced_group_topology(std::get<GroupFilterBasis>(checked), exec);
    const auto cont = verify_topological_group(g, t, exec);
    r.payload["open_count"] = t.opens.size();
    r.payload["continuity"] = to_json(cont);
    if (!cont.ok) r.code = kViolation;
  }
  return r;
}

Result cmd_topology(std::uint64_t level, Execution exec) {
  require_positive(level, "level");
  if (level > kExplicitCarrierLimit) throw CapacityError("topology limited to levels <= 20");
  const auto b = standard_gfb(level);
  const auto t = induced_group_topology(b, exec);
  const auto cosets = coset_union_topology(b.group(), b.basis().members());
  const auto cont = verify_topological_group(b.group(), t, exec);
  Json basis = Json::array();
  for (const auto& u : b.basis().members()) basis.push_back(to_json(u));
  Result r;
  r.payload = {{"level", level},
               {"basis", basis},
               {"opens", to_json(t).at("members")},
               {"open_count", t.opens.size()},
               {"krull_equal", cosets.opens == t.opens},
               {"continuity", to_json(cont)}};
  if (cosets.opens != t.opens || !cont.ok) r.code = kViolation;
  return r;
}

Result cmd_glue(std::uint64_t bound, const std::string& generators, const std::string& tower) {
  require_positive(bound, "bound");
  const Json j = parse_json(generators, "generators");
  UltrafilterSystem u{bound, parse_tower(tower), {}};
  u.generators = decode("generators", [&] { return family_from_json(j, bound).residues; });
  const auto sigma = glue_ultrafilter(u);
  Json residues = to_json(sigma).at("residues");
  return {kOk, {{"bound", bound}, {"tower", to_string(u.tower)}, {"sigma", residues}}};
}

Result cmd_separate(std::uint64_t bound, const std::string& a, const std::string& b) {
  require_positive(bound, "bound");
  const Json ja = parse_json(a, "a"), jb = parse_json(b, "b");
  const auto fa = decode("a", [&] { return family_from_json(ja, bound); });
  const auto fb = decode("b", [&] { return family_from_json(jb, bound); });
  const auto sep = hausdorff_separate(fa, fb);
  return {kOk,
          {{"bound", bound}, {"level", sep.first.level}, {"first", to_json(sep.first)}, {"second", to_json(sep.second)}}};
}

Result cmd_supernatural(const std::string& op, const std::string& args_text) {
  const Json args = parse_json(args_text, "args");
  if (op == "roundtrip") {
    const auto [s, bound] = decode("args", [&] {
      if (args.is_object() && args.contains("s")) {
        const std::uint64_t b = args.contains("bound") ? args.at("bound").get<std::uint64_t>() : kDefaultBound;
        return std::pair{supernatural_from_json(args.at("s")), b};
      }
      return std::pair{supernatural_from_json(args), kDefaultBound};
    });
    require_positive(bound, "args bound");
    const auto r = krull_roundtrip(s, bound);
    Json payload = to_json(r);
    payload["s"] = to_json(s);
    return {r.ok && r.dual_ok ? kOk : kViolation, payload};
  }
  if (op == "lattice") {
    const auto [a, b] = decode("args", [&] {
      if (args.is_array() && args.size() == 2) {
        return std::pair{supernatural_from_json(args[0]), supernatural_from_json(args[1])};
      }
      if (args.is_object() && args.contains("a") && args.contains("b")) {
        return std::pair{supernatural_from_json(args.at("a")), supernatural_from_json(args.at("b"))};
      }
      throw DomainError("lattice expects [a, b] or {\"a\": ..., \"b\": ...}");
    });
    Json payload = to_json(supernatural_lattice(a, b));
    payload["a"] = to_json(a);
    payload["b"] = to_json(b);
    return {kOk, payload};
  }
  throw UsageError("--op must be roundtrip or lattice");
}

Result cmd_compactness(std::uint64_t bound, const std::string& tower, Execution exec) {
  require_positive(bound, "bound");
  const auto report = compactness_check(bound, parse_tower(tower), exec);
  return {report.ok() ? kOk : kViolation, to_json(report)};
}

Result cmd_verify_all(std::uint64_t bound, Execution exec) {
  require_positive(bound, "bound");
  if (bound > 10000) throw CapacityError("verify-all limited to bound <= 10^4");
  Json criteria = Json::array();
  int passed = 0;
  for (const auto& c : acceptance::run_all(bound, exec)) {
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  return {passed == acceptance::kCriterionCount ? kOk : kViolation,
          {{"bound", bound}, {"criteria", criteria}, {"passed", passed}, {"total", acceptance::kCriterionCount}}};
}

void emit(std::ostream& out, Json payload, ExitCode code, bool pretty) {
  payload["status"] = status_name(code);
  out << (pretty ? payload.dump(2) : payload.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Galois theory and profinite truncations", "krull"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false, serial = false;
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::uint64_t p = 0, n = 0, cyclotomic = 0, level = 0, bound = 0;
  std::string group, basis, generators, fa, fb, op, op_args, tower = "zhat";
  std::function<Result(Execution)> action;

  auto* lattice = app.add_subcommand("lattice", "Subfield and subgroup lattice of F_{p^n}/F_p");
  lattice->add_option("--p", p, "Characteristic")->required();
  lattice->add_option("--n", n, "Degree")->required();
  lattice->callback([&] { action = [&](Execution e) { return cmd_lattice(p, n, e); }; });

  auto* corr = app.add_subcommand("correspondence", "Fundamental Theorem report");
  auto* corr_p = corr->add_option("--p", p, "Characteristic");
  auto* corr_n = corr->add_option("--n", n, "Degree");
  auto* corr_c = corr->add_option("--cyclotomic", cyclotomic, "Conductor of Q(zeta_N)/Q");
  corr_p->needs(corr_n);
  corr_n->needs(corr_p);
  corr_c->excludes(corr_p)->excludes(corr_n);
  corr->callback([&] {
    if (corr_c->count() > 0) {
      action = [&](Execution e) { return cmd_correspondence_cyclotomic(cyclotomic, e); };
    } else if (corr_p->count() > 0) {
      action = [&](Execution e) { return cmd_correspondence_finite(p, n, e); };
    } else {
      throw CLI::ValidationError("correspondence", "give --p and --n, or --cyclotomic");
    }
  });

  auto* gfb = app.add_subcommand("gfb-check", "Validate a group filter basis");
  gfb->add_option("--group", group, "zmod:N, units:N or sym:K")->required();
  gfb->add_option("--basis", basis, "JSON array of element-label arrays")->required();
  gfb->callback([&] { action = [&](Execution e) { return cmd_gfb_check(group, basis, e); }; });

  auto* topo = app.add_subcommand("topology", "Opens of the induced Krull truncation on Z/N");
  topo->add_option("--level", level, "Level N")->required();
  topo->callback([&] { action = [&](Execution e) { return cmd_topology(level, e); }; });

  auto* glue = app.add_subcommand("glue", "Glue per-level ultrafilter generators");
  glue->add_option("--bound", bound, "Truncation bound")->required();
  glue->add_option("--generators", generators, "JSON object {level: residue}")->required();
  glue->add_option("--tower", tower, "zhat or zhat_units");
  glue->callback([&] { action = [&](Execution) { return cmd_glue(bound, generators, tower); }; });

  auto* sep = app.add_subcommand("separate", "Separate two compatible families by clopen cosets");
  sep->add_option("--bound", bound, "Truncation bound")->required();
  sep->add_option("--a", fa, "Integer or JSON residues")->required();
  sep->add_option("--b", fb, "Integer or JSON residues")->required();
  sep->callback([&] { action = [&](Execution) { return cmd_separate(bound, fa, fb); }; });

  auto* sup = app.add_subcommand("supernatural", "Supernatural number operations");
  sup->add_option("--op", op, "roundtrip or lattice")->required();
  sup->add_option("--args", op_args, "JSON arguments")->required();
  sup->callback([&] { action = [&](Execution) { return cmd_supernatural(op, op_args); }; });

  auto* comp = app.add_subcommand("compactness", "Ultrafilter gluing at every point of Z/N");
  comp->add_option("--bound", bound, "Truncation bound")->required();
  comp->add_option("--tower", tower, "zhat or zhat_units");
  comp->callback([&] { action = [&](Execution e) { return cmd_compactness(bound, tower, e); }; });

  auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
  bound = kDefaultBound;
  all->add_option("--bound", bound, "Truncation bound for the Hausdorff and Krull checks");
  all->callback([&] { action = [&](Execution e) { return cmd_verify_all(bound, e); }; });

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    emit(out, {{"error", e.what()}}, kUsage, pretty);
    return kUsage;
  }

  const Execution exec = serial ? Execution::serial : Execution::parallel;
  try {
    Result r = action(exec);
    emit(out, std::move(r.payload), r.code, pretty);
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    emit(out, {{"error", e.what()}}, kUsage, pretty);
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    emit(out, {{"error", e.what()}}, kUsage, pretty);
    return kUsage;
  } catch (const DomainError& e) {
    emit(out, {{"error", e.what()}}, kViolation, pretty);
    return kViolation;
  }
}

}  // namespace krull::cli
