#include "krull/filters.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "krull/errors.hpp"

namespace krull {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom;
  for (const auto& s : witness) os << " " << s.to_string();
  for (auto x : points) os << " x=" << x;
  return os.str();
}

SetFamily::SetFamily(std::size_t carrier, std::vector<Subset> members)
    : carrier_(carrier), members_(std::move(members)) {
  if (carrier_ == 0) throw DomainError("carrier must have at least one point");
  for (const auto& m : members_) {
    if (m.universe() != carrier_) throw DomainError("family member lives on a different carrier");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_indices(std::size_t carrier, const std::vector<std::vector<std::size_t>>& members) {
  std::vector<Subset> subsets;
  for (const auto& m : members) subsets.push_back(Subset::of(carrier, m));
  return SetFamily(carrier, std::move(subsets));
}

bool SetFamily::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

FiniteFilter FiniteFilter::principal(std::size_t carrier, std::size_t x) {
  return FiniteFilter(Subset::singleton(carrier, x));
}

FiniteFilter FiniteFilter::trivial(std::size_t carrier) { return FiniteFilter(Subset::full(carrier)); }

SetFamily FiniteFilter::family() const {
  const std::size_t n = carrier();
  if (n > kExplicitCarrierLimit) throw CapacityError("explicit filter members limited to carriers <= 20");
  std::vector<Subset> members;
  const auto free_points = kernel_.complement().indices();
  const std::uint64_t total = std::uint64_t{1} << free_points.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s = kernel_;
    for (std::size_t b = 0; b < free_points.size(); ++b) {
      if ((mask >> b) & 1U) s.insert(free_points[b]);
    }
    members.push_back(std::move(s));
  }
  return SetFamily(n, std::move(members));
}

bool is_finer(const FiniteFilter& a, const FiniteFilter& b) { return a.kernel().is_subset_of(b.kernel()); }

std::variant<FiniteFilter, Violation> check_filter_axioms(const SetFamily& family) {
  const std::size_t n = family.carrier();
  const Subset carrier = Subset::full(n);
  if (!family.contains(carrier)) return Violation{"Universality", {carrier}, {}};

  // Members are in lexicographic order, so the first failure found is the
  // least witness. One-point extensions suffice for upward closure.
  for (const auto& s : family.members()) {
    std::vector<Subset> missing;
    for (auto i : s.complement().indices()) {
      Subset t = s;
      t.insert(i);
      if (!family.contains(t)) missing.push_back(std::move(t));
    }
    if (!missing.empty()) {
      return Violation{"Upward closure", {s, *std::min_element(missing.begin(), missing.end())}, {}};
    }
  }
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] & m[j])) return Violation{"Closure under intersection", {m[i], m[j]}, {}};
    }
  }
  Subset kernel = carrier;
  for (const auto& s : m) kernel &= s;
  return FiniteFilter(std::move(kernel));
}

std::optional<Violation> check_filter_basis(const SetFamily& basis) {
  if (basis.empty()) return Violation{"Filter basis nonempty", {}, {}};
  const auto& m = basis.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Subset both = m[i] & m[j];
      const bool has_lower = std::any_of(m.begin(), m.end(), [&](const Subset& w) { return w.is_subset_of(both); });
      if (!has_lower) return Violation{"Filter basis directed", {m[i], m[j]}, {}};
    }
  }
  return std::nullopt;
}

FiniteFilter induced_filter(const SetFamily& basis) {
  if (auto v = check_filter_basis(basis)) throw DomainError("not a filter basis: " + v->to_string());
  // A finite directed family has a least member; its supersets are exactly
  // the sets containing some member.
  const auto& m = basis.members();
  for (const auto& w : m) {
    if (std::all_of(m.begin(), m.end(), [&](const Subset& u) { return w.is_subset_of(u); })) {
      return FiniteFilter(w);
    }
  }
  throw DomainError("directed finite family without a least member");  // unreachable
}

std::optional<FiniteFilter> strictly_finer_proper_filter(const FiniteFilter& f) {
  for (auto x : f.kernel().indices()) {
    FiniteFilter candidate = FiniteFilter::principal(f.carrier(), x);
    if (is_finer(candidate, f) && !(candidate == f)) return candidate;
  }
  return std::nullopt;
}

bool is_ultrafilter(const FiniteFilter& f) { return f.is_proper() && !strictly_finer_proper_filter(f); }

std::size_t ultrafilter_generator(const FiniteFilter& f) {
  if (!f.is_proper()) throw DomainError("not an ultrafilter: contains the empty set");
  if (auto finer = strictly_finer_proper_filter(f)) {
    throw DomainError("not an ultrafilter: refined by the principal filter at " +
                      std::to_string(finer->kernel().first()));
  }
  if (f.kernel().count() != 1) throw DomainError("maximal filter without singleton kernel");  // unreachable
  return f.kernel().first();
}

FiniteFilter pushforward(const std::vector<std::size_t>& map, std::size_t target_size, const FiniteFilter& f) {
  if (map.size() != f.carrier()) throw DomainError("pushforward: map must be total on the source carrier");
  // preimage(S) contains the kernel iff S contains its image.
  Subset image(target_size);
  for (auto x : f.kernel().indices()) {
    if (map[x] >= target_size) throw DomainError("pushforward: map leaves the target carrier");
    image.insert(map[x]);
  }
  for (auto y : map) {
    if (y >= target_size) throw DomainError("pushforward: map leaves the target carrier");
  }
  return FiniteFilter(std::move(image));
}

bool FiniteTopology::is_open(const Subset& s) const {
  return std::binary_search(opens.begin(), opens.end(), s);
}

Subset FiniteTopology::minimal_open(std::size_t x) const {
  Subset m = Subset::full(carrier);
  for (const auto& u : opens) {
    if (u.contains(x)) m &= u;
  }
  return m;
}

FiniteTopology FiniteTopology::discrete(std::size_t carrier) {
  FiniteTopology t{carrier, {}};
  for_each_subset(carrier, [&](const Subset& s) { t.opens.push_back(s); });
  std::sort(t.opens.begin(), t.opens.end());
  return t;
}

FiniteTopology FiniteTopology::indiscrete(std::size_t carrier) {
  return FiniteTopology{carrier, {Subset(carrier), Subset::full(carrier)}};
}

std::optional<Violation> check_topology_axioms(const FiniteTopology& t, Execution exec) {
  const Subset empty(t.carrier);
  const Subset full = Subset::full(t.carrier);
  std::unordered_set<Subset, SubsetHash> opens(t.opens.begin(), t.opens.end());
  if (!opens.count(empty)) return Violation{"Empty set open", {empty}, {}};
  if (!opens.count(full)) return Violation{"Carrier open", {full}, {}};
  std::vector<Subset> sorted = t.opens;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<std::int64_t>(sorted.size());
  // First failing row i; the pair scan inside a row is serial so the witness
  // is the least (i, j).
  std::int64_t first_bad = n;
  auto row_fails = [&](std::int64_t i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (!opens.count(sorted[i] & sorted[j]) || !opens.count(sorted[i] | sorted[j])) return true;
    }
    return false;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad)
    for (std::int64_t i = 0; i < n; ++i) {
      if (i < first_bad && row_fails(i)) first_bad = std::min(first_bad, i);
    }
  } else {
    for (std::int64_t i = 0; i < n && first_bad == n; ++i) {
      if (row_fails(i)) first_bad = i;
    }
  }
  if (first_bad == n) return std::nullopt;
  for (std::int64_t j = first_bad + 1; j < n; ++j) {
    if (!opens.count(sorted[first_bad] & sorted[j])) {
      return Violation{"Closure under intersection", {sorted[first_bad], sorted[j]}, {}};
    }
    if (!opens.count(sorted[first_bad] | sorted[j])) {
      return Violation{"Closure under union", {sorted[first_bad], sorted[j]}, {}};
    }
  }
  return std::nullopt;  // unreachable
}

FiniteTopology induced_topology(const FilterBundle& bundle, Execution exec) {
  const std::size_t n = bundle.size();
  if (n == 0) throw DomainError("bundle on an empty carrier");
  if (n > kExplicitCarrierLimit) throw CapacityError("induced_topology limited to carriers <= 20");
  for (const auto& f : bundle) {
    if (f.carrier() != n) throw DomainError("bundle filter lives on a different carrier");
  }
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<char> open(total, 0);
  auto test = [&](std::int64_t mask) {
    const Subset u = Subset::from_mask(n, static_cast<std::uint64_t>(mask));
    for (auto x : u.indices()) {
      if (!bundle[x].contains(u)) return false;
    }
    return true;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) open[mask] = test(mask);
  } else {
    for (std::int64_t mask = 0; mask < total; ++mask) open[mask] = test(mask);
  }
  FiniteTopology t{n, {}};
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (open[mask]) t.opens.push_back(Subset::from_mask(n, static_cast<std::uint64_t>(mask)));
  }
  std::sort(t.opens.begin(), t.opens.end());
  return t;
}

FiniteFilter neighborhood_filter(const FiniteTopology& t, std::size_t x) {
  if (x >= t.carrier) throw DomainError("point outside carrier");
  return FiniteFilter(t.minimal_open(x));
}

}  // namespace krull
