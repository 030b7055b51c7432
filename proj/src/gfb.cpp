#include "krull/gfb.hpp"

#include <algorithm>
#include <set>

#include "krull/errors.hpp"
#include "krull/number_theory.hpp"

namespace krull {

std::variant<GroupFilterBasis, Violation> check_group_filter_basis(const FiniteGroup& g, const SetFamily& family) {
  if (family.carrier() != g.size()) throw DomainError("family does not live on the group carrier");
  if (auto v = check_filter_basis(family)) return *v;
  const auto& members = family.members();
  auto exists = [&](auto&& pred) { return std::any_of(members.begin(), members.end(), pred); };

  for (const auto& u : members) {
    if (!u.contains(g.identity())) return Violation{"Axiom 1: identity", {u}, {}};
  }
  for (const auto& u : members) {
    if (!exists([&](const Subset& v) { return g.product(v, v).is_subset_of(u); })) {
      return Violation{"Axiom 2: product", {u}, {}};
    }
  }
  for (const auto& u : members) {
    const Subset u_inv = g.inverse(u);
    if (!exists([&](const Subset& v) { return v.is_subset_of(u_inv); })) {
      return Violation{"Axiom 3: inverse", {u}, {}};
    }
  }
  for (const auto& u : members) {
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (!exists([&](const Subset& v) { return g.conjugate(x, v).is_subset_of(u); })) {
        return Violation{"Axiom 4: conjugation", {u}, {x}};
      }
    }
  }
  return GroupFilterBasis(g, family);
}

FiniteTopology induced_group_topology(const GroupFilterBasis& b, Execution exec) {
  const FiniteGroup& g = b.group();
  FilterBundle bundle;
  bundle.reserve(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    std::vector<Subset> translates;
    for (const auto& u : b.basis().members()) translates.push_back(g.translate(x, u));
    bundle.push_back(induced_filter(SetFamily(g.size(), std::move(translates))));
  }
  return induced_topology(bundle, exec);
}

namespace {

// Preimage of W under multiplication is open iff every (a, b) with ab in W
// has its minimal rectangle M(a) x M(b) inside the preimage.
bool rectangle_fits(const FiniteGroup& g, const std::vector<Subset>& minimal, const Subset& w, std::size_t a,
                    std::size_t b) {
  for (auto x : minimal[a].indices()) {
    for (auto y : minimal[b].indices()) {
      if (!w.contains(g.op(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)))) return false;
    }
  }
  return true;
}

// Least (a, b), encoded a * n + b, whose product lies in W while its minimal
// rectangle does not map into W; n * n if none.
std::size_t first_bad_pair(const FiniteGroup& g, const std::vector<Subset>& minimal, const Subset& w) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (w.contains(g.op(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))) &&
          !rectangle_fits(g, minimal, w, a, b)) {
        return a * n + b;
      }
    }
  }
  return n * n;
}

// Least-index entry of [0, count) satisfying `bad`, or count.
template <class Pred>
std::int64_t least_failure(std::int64_t count, Execution exec, Pred bad) {
  std::int64_t first = count;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first)
    for (std::int64_t i = 0; i < count; ++i) {
      if (i < first && bad(i)) first = std::min(first, i);
    }
  } else {
    for (std::int64_t i = 0; i < count && first == count; ++i) {
      if (bad(i)) first = i;
    }
  }
  return first;
}

}  // namespace

ContinuityReport verify_topological_group(const FiniteGroup& g, const FiniteTopology& t, Execution exec) {
  const std::size_t n = g.size();
  if (n > 24) throw CapacityError("verify_topological_group limited to |G| <= 24");
  if (t.carrier != n) throw DomainError("topology lives on a different carrier");

  std::vector<Subset> minimal;
  for (std::size_t x = 0; x < n; ++x) {
    minimal.push_back(t.minimal_open(x));
    if (!t.is_open(minimal.back())) throw DomainError("opens are not closed under intersection");
  }
  std::vector<Subset> opens = t.opens;
  std::sort(opens.begin(), opens.end());
  const auto count = static_cast<std::int64_t>(opens.size());
  const auto nn = static_cast<std::int64_t>(n * n);
  ContinuityReport report;

  // Every open containing ab contains M(ab), so checking W = M(ab) for each
  // pair decides continuity. Only on failure are the opens scanned for the
  // least offending W.
  const std::int64_t bad_pair = least_failure(nn, exec, [&](std::int64_t i) {
    const auto a = static_cast<std::size_t>(i) / n, b = static_cast<std::size_t>(i) % n;
    return !rectangle_fits(g, minimal, minimal[g.op(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))], a, b);
  });
  if (bad_pair < nn) {
    const std::int64_t w = least_failure(count, exec, [&](std::int64_t i) {
      return first_bad_pair(g, minimal, opens[i]) < n * n;
    });
    const std::size_t pair = first_bad_pair(g, minimal, opens[w]);
    report.ok = false;
    report.map = "multiplication";
    report.open = opens[w];
    report.point = std::pair{pair / n, pair % n};
    return report;
  }

  const std::int64_t bad_point = least_failure(static_cast<std::int64_t>(n), exec, [&](std::int64_t a) {
    return !g.inverse(minimal[a]).is_subset_of(minimal[g.inverse(static_cast<std::uint32_t>(a))]);
  });
  if (bad_point < static_cast<std::int64_t>(n)) {
    const std::int64_t w = least_failure(count, exec, [&](std::int64_t i) { return !t.is_open(g.inverse(opens[i])); });
    const Subset pre = g.inverse(opens[w]);
    report.ok = false;
    report.map = "inversion";
    report.open = opens[w];
    for (auto a : pre.indices()) {
      if (!minimal[a].is_subset_of(pre)) {
        report.point = std::pair{a, a};
        break;
      }
    }
  }
  return report;
}

GroupFilterBasis standard_gfb(std::uint64_t n) {
  if (n == 0) throw DomainError("level must be positive");
  const FiniteGroup g = FiniteGroup::cyclic(n);
  auto result = check_group_filter_basis(g, SetFamily(n, cyclic_subgroups(g)));
  if (auto* v = std::get_if<Violation>(&result)) {
    throw DomainError("standard basis failed validation: " + v->to_string());  // never for Z/n
  }
  return std::get<GroupFilterBasis>(std::move(result));
}

FiniteTopology coset_union_topology(const FiniteGroup& g, const std::vector<Subset>& sets) {
  const std::size_t n = g.size();
  if (n > kExplicitCarrierLimit) throw CapacityError("coset_union_topology limited to carriers <= 20");
  std::set<Subset> cosets;
  for (const auto& u : sets) {
    for (std::uint32_t x = 0; x < n; ++x) cosets.insert(g.translate(x, u));
  }
  std::set<Subset> unions{Subset(n)};
  for (const auto& c : cosets) {
    std::vector<Subset> added;
    for (const auto& s : unions) added.push_back(s | c);
    unions.insert(added.begin(), added.end());
  }
  return FiniteTopology{n, {unions.begin(), unions.end()}};
}

}  // namespace krull
