#include "krull/galois.hpp"

#include <algorithm>
#include <optional>

#include "krull/errors.hpp"
#include "krull/number_theory.hpp"

namespace krull {

namespace {

constexpr std::size_t kCorrespondenceLimit = 48;

Subset subgroup_subset(const FiniteGroup& g, const SubgroupDesc& h) {
  Subset s(g.size());
  for (auto label : h.elements) s.insert(g.index_of(label));
  if (!g.is_subgroup(s)) throw DomainError("not a subgroup of " + g.name());
  return s;
}

SubgroupDesc describe(const FiniteGroup& g, const Subset& s) {
  return SubgroupDesc{g.name(), g.labels_of(s)};
}

}  // namespace

std::vector<SubgroupDesc> all_subgroups(const FiniteGroup& g) {
  std::vector<Subset> fast;
  if (g.name().starts_with("zmod:")) {
    fast = cyclic_subgroups(g);
  } else {
    fast = subgroups_by_generation(g);
  }
  if (g.size() <= 16) {
    auto oracle = subgroups_exhaustive(g);
    auto sorted = fast;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != oracle) throw DomainError("subgroup enumeration disagrees with exhaustive search");
  }
  std::vector<SubgroupDesc> out;
  for (const auto& s : fast) out.push_back(describe(g, s));
  return out;
}

FrobeniusGroup::FrobeniusGroup(std::uint64_t p, unsigned n)
    : field_(p, n), group_(FiniteGroup::cyclic(n)) {
  const std::uint64_t q = field_.order();
  if (q > kFieldScanLimit) throw CapacityError(field_.name() + " exceeds the scan bound 2^16");
  frobenius_table_.resize(q);
  const auto count = static_cast<std::int64_t>(q);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    frobenius_table_[i] = frobenius(field_.element(static_cast<std::uint64_t>(i))).index();
  }
}

std::string FrobeniusGroup::name() const {
  return "Gal(" + field_.name() + "/F_" + std::to_string(field_.characteristic()) + ")";
}

std::uint64_t FrobeniusGroup::act(std::uint64_t k, std::uint64_t a) const {
  for (std::uint64_t i = 0; i < k % level(); ++i) a = frobenius_table_[a];
  return a;
}

SubgroupDesc fixing_subgroup(const FrobeniusGroup& g, const FiniteSubfield& e, Execution exec) {
  const unsigned n = g.level();
  const auto subfield = embedded_subfield(e.degree, g.field());
  std::vector<char> fixes(n, 0);
  auto check = [&](unsigned k) {
    bool all = true;
    for (auto a : subfield) {
      if (g.act(k, a) != a) {
        all = false;
        break;
      }
    }
    fixes[k] = all;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (unsigned k = 0; k < n; ++k) check(k);
  } else {
    for (unsigned k = 0; k < n; ++k) check(k);
  }
  SubgroupDesc out{g.group().name(), {}};
  for (unsigned k = 0; k < n; ++k) {
    if (fixes[k]) out.elements.push_back(k);
  }
  return out;
}

FiniteSubfield fixed_field(const FrobeniusGroup& g, const SubgroupDesc& h, Execution exec) {
  subgroup_subset(g.group(), h);
  const std::uint64_t q = g.field().order();
  std::vector<char> fixed(q, 0);
  const auto count = static_cast<std::int64_t>(q);
  auto check = [&](std::int64_t i) {
    const auto a = static_cast<std::uint64_t>(i);
    bool all = true;
    for (auto k : h.elements) {
      if (g.act(static_cast<std::uint64_t>(k), a) != a) {
        all = false;
        break;
      }
    }
    fixed[i] = all;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) check(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) check(i);
  }
  std::vector<std::uint64_t> fixed_set;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (fixed[i]) fixed_set.push_back(i);
  }
  const std::uint64_t p = g.field().characteristic();
  std::optional<unsigned> degree;
  for (unsigned d = 1; d <= g.level(); ++d) {
    if (checked_pow(p, d) == fixed_set.size()) degree = d;
  }
  if (!degree || fixed_set != embedded_subfield(*degree, g.field())) {
    throw DomainError("fixed set is not an embedded subfield");
  }
  return FiniteSubfield{*degree};
}

CyclotomicGroup::CyclotomicGroup(std::uint64_t n)
    : n_(n), phi_(euler_phi(n)), group_(FiniteGroup::units(n)), phi_n_(cyclotomic(n)) {
  RationalField Q;
  powers_.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const QPolynomial r = QPolynomial::monomial(Q, Q.one(), j) % phi_n_;
    RationalVector v(phi_);
    for (std::size_t i = 0; i < phi_; ++i) v[i] = r.coeff(i);
    powers_.push_back(std::move(v));
  }
}

std::string CyclotomicGroup::name() const { return "Gal(Q(zeta_" + std::to_string(n_) + ")/Q)"; }

RationalVector CyclotomicGroup::act(std::uint64_t k, const RationalVector& v) const {
  if (v.size() != phi_) throw DomainError("vector length does not match [Q(zeta_n):Q]");
  RationalVector out(phi_);
  for (std::size_t i = 0; i < phi_; ++i) {
    if (v[i].is_zero()) continue;
    const RationalVector& image = power(i * k);
    for (std::size_t j = 0; j < phi_; ++j) out[j] += v[i] * image[j];
  }
  return out;
}

SubgroupDesc fixing_subgroup(const CyclotomicGroup& g, const CyclotomicSubfield& e) {
  SubgroupDesc out{g.group().name(), {}};
  for (std::uint32_t i = 0; i < g.group().size(); ++i) {
    const auto k = static_cast<std::uint64_t>(g.group().label(i));
    const bool fixes = std::all_of(e.span.begin(), e.span.end(),
                                   [&](const RationalVector& v) { return g.act(k, v) == v; });
    if (fixes) out.elements.push_back(static_cast<std::int64_t>(k));
  }
  return out;
}

CyclotomicSubfield fixed_field(const CyclotomicGroup& g, const SubgroupDesc& h) {
  subgroup_subset(g.group(), h);
  CyclotomicSubfield out;
  for (std::size_t m = 0; m < g.field_degree(); ++m) {
    RationalVector sum(g.field_degree());
    for (auto k : h.elements) {
      const RationalVector& term = g.power(static_cast<std::uint64_t>(k) * m);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += term[j];
    }
    out.span.push_back(std::move(sum));
  }
  return out;
}

std::size_t cyclo_fixed_field_degree(std::uint64_t n, const SubgroupDesc& h) {
  if (n == 0) throw DomainError("conductor must be positive");
  if (n > 24) throw CapacityError("cyclo_fixed_field_degree supports n <= 24");
  return fixed_field(CyclotomicGroup(n), h).degree();
}

std::uint64_t compositum_level(std::uint64_t d1, std::uint64_t d2, std::uint64_t ambient) {
  if (d1 == 0 || d2 == 0) throw DomainError("levels must be positive");
  const std::uint64_t l = lcm(d1, d2);
  if (ambient == 0) ambient = l;
  if (ambient % d1 != 0 || ambient % d2 != 0) {
    throw DomainError("levels must divide the ambient level");
  }
  // F_{p^d} embeds into F_{p^e} exactly when d | e.
  for (auto e : divisors(ambient)) {
    if (e % d1 == 0 && e % d2 == 0) {
      if (e != l) throw DomainError("compositum scan disagrees with lcm");
      return e;
    }
  }
  throw DomainError("no common extension inside the ambient level");
}

CorrespondenceReport verify_galois_correspondence(const FrobeniusGroup& g, Execution exec) {
  if (g.group().size() > kCorrespondenceLimit) throw CapacityError("correspondence check limited to |G| <= 48");
  CorrespondenceReport report{g.name(), {}, {}};
  const auto subgroups = all_subgroups(g.group());
  const auto levels = divisors(g.level());
  if (subgroups.size() != levels.size()) {
    report.violations.push_back("subgroup count " + std::to_string(subgroups.size()) +
                                " != intermediate field count " + std::to_string(levels.size()));
  }

  // Subgroup side: H -> L^H -> Gal(L/L^H).
  std::vector<CorrespondencePair> pairs(subgroups.size());
  std::vector<std::string> errors(subgroups.size());
  auto from_subgroup = [&](std::size_t i) {
    try {
      const FiniteSubfield e = fixed_field(g, subgroups[i], Execution::serial);
      const SubgroupDesc back = fixing_subgroup(g, e, Execution::serial);
      const FiniteSubfield again = fixed_field(g, back, Execution::serial);
      pairs[i] = {subgroups[i], e, e.degree, back == subgroups[i] && again == e};
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  };
  // Field side: E -> Gal(L/E) -> L^Gal(L/E).
  std::vector<char> field_ok(levels.size(), 0);
  auto from_field = [&](std::size_t i) {
    const FiniteSubfield e{static_cast<unsigned>(levels[i])};
    field_ok[i] = fixed_field(g, fixing_subgroup(g, e, Execution::serial), Execution::serial) == e;
  };
  const auto ns = static_cast<std::int64_t>(subgroups.size());
  const auto nf = static_cast<std::int64_t>(levels.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < ns; ++i) from_subgroup(i);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < nf; ++i) from_field(i);
  } else {
    for (std::int64_t i = 0; i < ns; ++i) from_subgroup(i);
    for (std::int64_t i = 0; i < nf; ++i) from_field(i);
  }

  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (!errors[i].empty()) {
      report.violations.push_back("subgroup #" + std::to_string(i) + ": " + errors[i]);
      continue;
    }
    if (!pairs[i].roundtrip_ok) report.violations.push_back("round trip fails for subgroup #" + std::to_string(i));
    report.pairs.push_back(std::move(pairs[i]));
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!field_ok[i]) report.violations.push_back("round trip fails for field of degree " + std::to_string(levels[i]));
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const auto& a, const auto& b) { return a.field_degree < b.field_degree; });
  return report;
}

CorrespondenceReport verify_galois_correspondence(const CyclotomicGroup& g, Execution exec) {
  if (g.group().size() > kCorrespondenceLimit) throw CapacityError("correspondence check limited to |G| <= 48");
  CorrespondenceReport report{g.name(), {}, {}};
  const auto subgroups = all_subgroups(g.group());

  std::vector<CorrespondencePair> pairs(subgroups.size());
  std::vector<CyclotomicSubfield> fields(subgroups.size());
  auto from_subgroup = [&](std::size_t i) {
    CyclotomicSubfield e = fixed_field(g, subgroups[i]);
    const SubgroupDesc back = fixing_subgroup(g, e);
    const CyclotomicSubfield again = fixed_field(g, back);
    const std::size_t degree = e.degree();
    const bool ok = back == subgroups[i] && same_span(again.span, e.span) &&
                    degree * subgroups[i].elements.size() == g.field_degree();
    pairs[i] = {subgroups[i], e, degree, ok};
    fields[i] = std::move(e);
  };
  const auto ns = static_cast<std::int64_t>(subgroups.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < ns; ++i) from_subgroup(i);
  } else {
    for (std::int64_t i = 0; i < ns; ++i) from_subgroup(i);
  }

  // Intermediate fields are the distinct spans produced above; fixed_field is
  // injective exactly when no two subgroups give the same span.
  std::vector<CyclotomicSubfield> distinct;
  for (const auto& e : fields) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const CyclotomicSubfield& f) { return same_span(f.span, e.span); });
    if (!seen) distinct.push_back(e);
  }
  if (distinct.size() != subgroups.size()) {
    report.violations.push_back("subgroup count " + std::to_string(subgroups.size()) +
                                " != intermediate field count " + std::to_string(distinct.size()));
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const CyclotomicSubfield back = fixed_field(g, fixing_subgroup(g, distinct[i]));
    if (!same_span(back.span, distinct[i].span)) {
      report.violations.push_back("round trip fails for intermediate field #" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!pairs[i].roundtrip_ok) report.violations.push_back("round trip fails for subgroup #" + std::to_string(i));
    report.pairs.push_back(std::move(pairs[i]));
  }
  std::stable_sort(report.pairs.begin(), report.pairs.end(),
                   [](const auto& a, const auto& b) { return a.field_degree < b.field_degree; });
  return report;
}

}  // namespace krull
