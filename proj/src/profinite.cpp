#include "krull/profinite.hpp"

#include <algorithm>
#include <set>

#include "krull/errors.hpp"
#include "krull/filters.hpp"
#include "krull/number_theory.hpp"

namespace krull {

namespace {

constexpr std::uint64_t kLevelLimit = 10000;

bool is_unit(std::uint64_t r, std::uint64_t d) { return d == 1 || gcd(r, d) == 1; }

std::string pair_text(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::string to_string(Tower t) { return t == Tower::additive ? "zhat" : "zhat_units"; }

InverseSystem InverseSystem::reduction(std::uint64_t bound, Tower tower) {
  if (bound == 0) throw DomainError("bound must be positive");
  if (bound > kLevelLimit) throw CapacityError("inverse systems limited to bound <= 10^4");
  InverseSystem sys;
  sys.bound = bound;
  sys.tower = tower;
  sys.levels = divisors(bound);
  for (auto d : sys.levels) {
    for (auto e : divisors(d)) {
      std::vector<std::uint64_t> table(d);
      for (std::uint64_t r = 0; r < d; ++r) table[r] = r % e;
      sys.transitions[{d, e}] = std::move(table);
    }
  }
  return sys;
}

std::vector<std::uint64_t> InverseSystem::elements(std::uint64_t d) const {
  if (tower == Tower::units) return units_mod(d);
  std::vector<std::uint64_t> out(d);
  for (std::uint64_t r = 0; r < d; ++r) out[r] = r;
  return out;
}

std::uint64_t InverseSystem::op(std::uint64_t d, std::uint64_t a, std::uint64_t b) const {
  return tower == Tower::units ? a * b % d : (a + b) % d;
}

Witnessed check_inverse_system(const InverseSystem& sys, Execution exec) {
  if (sys.bound > kLevelLimit) throw CapacityError("inverse systems limited to bound <= 10^4");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (const auto& [key, table] : sys.transitions) edges.push_back(key);

  // Homomorphism law per transition; the least failing edge is reported.
  auto hom_fails = [&](std::size_t i) {
    const auto [d, e] = edges[i];
    const auto& t = sys.transitions.at(edges[i]);
    if (t.size() != d) return true;
    const auto elems = sys.elements(d);
    for (auto a : elems) {
      if (t[a] >= e) return true;
      for (auto b : elems) {
        if (t[sys.op(d, a, b)] != sys.op(e, t[a], t[b])) return true;
      }
    }
    return false;
  };
  const auto count = static_cast<std::int64_t>(edges.size());
  std::int64_t first_bad = count;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
    for (std::int64_t i = 0; i < count; ++i) {
      if (hom_fails(i)) first_bad = std::min(first_bad, i);
    }
  } else {
    for (std::int64_t i = 0; i < count && first_bad == count; ++i) {
      if (hom_fails(i)) first_bad = i;
    }
  }
  if (first_bad < count) {
    return {false, "transition is not a homomorphism", {edges[first_bad].first, edges[first_bad].second}};
  }

  for (auto n : sys.levels) {
    for (auto d : divisors(n)) {
      for (auto e : divisors(d)) {
        const auto nd = sys.transitions.find({n, d});
        const auto de = sys.transitions.find({d, e});
        const auto ne = sys.transitions.find({n, e});
        if (nd == sys.transitions.end() || de == sys.transitions.end() || ne == sys.transitions.end()) {
          return {false, "missing transition", {n, d, e}};
        }
        for (auto x : sys.elements(n)) {
          if (de->second[nd->second[x]] != ne->second[x]) return {false, "composition law fails", {n, d, e}};
        }
      }
    }
  }
  return {};
}

CompatibleFamily CompatibleFamily::of_element(std::uint64_t bound, std::uint64_t x) {
  CompatibleFamily fam;
  fam.bound = bound;
  for (auto d : divisors(bound)) fam.residues[d] = x % d;
  return fam;
}

Witnessed check_compatible(const CompatibleFamily& fam) {
  for (const auto& [d, r] : fam.residues) {
    if (d == 0 || fam.bound % d != 0) return {false, "level does not divide the bound", {d}};
    if (r >= d) return {false, "residue out of range", {d, r}};
  }
  for (const auto& [d, rd] : fam.residues) {
    for (const auto& [e, re] : fam.residues) {
      if (e >= d || d % e != 0) continue;
      if (rd % e != re) return {false, "incoherent residues", {d, e}};
    }
  }
  return {};
}

std::vector<std::uint64_t> LevelSubgroup::elements() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < level; r += step) out.push_back(r);
  return out;
}

bool LevelSubgroup::is_subset_of(const LevelSubgroup& other) const {
  const auto elems = elements();
  return std::all_of(elems.begin(), elems.end(), [&](std::uint64_t r) { return other.contains(r); });
}

LevelSubgroup closed_subgroup_image(const SupernaturalNumber& s, std::uint64_t n) {
  if (n == 0) throw DomainError("level must be positive");
  if (n > kLevelLimit) throw CapacityError("closed_subgroup_image limited to n <= 10^4");
  std::uint64_t m = 1;
  for (const auto& [p, v] : factorize(n)) {
    const Exponent e = s.exponent(p);
    const unsigned k = e.is_infinite() ? v : std::min<unsigned>(v, e.value);
    m *= checked_pow(p, k);
  }
  return {n, m};
}

TruncatedSupernatural truncate(const SupernaturalNumber& s, std::uint64_t bound) {
  TruncatedSupernatural out;
  for (const auto& [p, v] : factorize(bound)) {
    const Exponent e = s.exponent(p);
    if (e.is_infinite() || e.value >= v) {
      out[p] = {v, true};
    } else {
      out[p] = {e.value, false};
    }
  }
  return out;
}

bool truncated_divides(const TruncatedSupernatural& a, const TruncatedSupernatural& b) {
  for (const auto& [p, e] : a) {
    const auto it = b.find(p);
    const std::uint32_t other = it == b.end() ? 0 : it->second.value;
    if (e.value > other) return false;
  }
  return true;
}

TruncatedSupernatural supernatural_of_levels(const std::vector<std::uint64_t>& levels, std::uint64_t bound) {
  TruncatedSupernatural out;
  for (const auto& [p, v] : factorize(bound)) {
    std::uint32_t sup = 0;
    for (auto d : levels) {
      if (d == 0 || bound % d != 0) throw DomainError("level " + std::to_string(d) + " does not divide the bound");
      sup = std::max<std::uint32_t>(sup, valuation(d, p));
    }
    out[p] = {sup, sup == v};
  }
  return out;
}

std::vector<std::uint64_t> levels_of(const TruncatedSupernatural& t, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto d : divisors(bound)) {
    bool ok = true;
    for (const auto& [p, v] : factorize(d)) {
      const auto it = t.find(p);
      if (it == t.end() || it->second.value < v) ok = false;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

KrullRoundtrip krull_roundtrip(const SupernaturalNumber& s, std::uint64_t bound) {
  if (bound == 0) throw DomainError("bound must be positive");
  if (bound > kLevelLimit) throw CapacityError("krull_roundtrip limited to bound <= 10^4");
  for (const auto& [p, e] : s.support()) {
    if (bound % p != 0) {
      throw DomainError("prime " + std::to_string(p) + " of " + s.to_string() + " does not divide the bound " +
                        std::to_string(bound));
    }
  }
  KrullRoundtrip r;
  r.bound = bound;
  for (auto d : divisors(bound)) {
    if (s.is_divisible_by(d)) r.levels.push_back(d);
  }
  r.expected = truncate(s, bound);
  r.recovered = supernatural_of_levels(r.levels, bound);
  r.ok = r.recovered == r.expected;
  r.dual_ok = levels_of(r.recovered, bound) == r.levels;
  return r;
}

LatticeResult supernatural_lattice(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return {gcd(a, b), lcm(a, b), a.divides(b), b.divides(a)};
}

std::optional<OpenCoset> coset_intersection(const OpenCoset& c1, const OpenCoset& c2) {
  for (const auto& c : {c1, c2}) {
    if (c.level == 0 || c.residue >= c.level) throw DomainError("malformed coset");
  }
  const std::uint64_t l = lcm(c1.level, c2.level);
  if (l > kLevelLimit) throw CapacityError("coset_intersection limited to lcm <= 10^4");

  std::optional<OpenCoset> solution;
  const std::uint64_t g = gcd(c1.level, c2.level);
  if (c1.residue % g == c2.residue % g) {
    // x = r1 + d1 t, with t solving d1 t = r2 - r1 (mod d2).
    const std::uint64_t m = c2.level / g;
    const std::uint64_t step = (c1.level / g) % m;
    const std::uint64_t diff = ((c2.residue + c2.level - c1.residue % c2.level) % c2.level) / g % m;
    std::uint64_t t = 0;
    if (m > 1) {
      // step is invertible mod m; find its inverse by extended Euclid.
      std::int64_t old_r = static_cast<std::int64_t>(step), r = static_cast<std::int64_t>(m);
      std::int64_t old_s = 1, s = 0;
      while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
      }
      const auto mm = static_cast<std::int64_t>(m);
      const auto inv = static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
      t = inv * diff % m;
    }
    solution = OpenCoset{l, (c1.residue + c1.level * t) % l};
  }

  // Membership scan at the lcm level.
  std::vector<std::uint64_t> common;
  for (std::uint64_t x = 0; x < l; ++x) {
    if (c1.contains(x) && c2.contains(x)) common.push_back(x);
  }
  const bool agrees = solution ? common == std::vector<std::uint64_t>{solution->residue} : common.empty();
  if (!agrees) throw DomainError("CRT solution disagrees with the membership scan");  // unreachable
  return solution;
}

Separation hausdorff_separate(const CompatibleFamily& a, const CompatibleFamily& b) {
  for (const auto* fam : {&a, &b}) {
    auto check = check_compatible(*fam);
    if (!check.ok) throw DomainError("hausdorff_separate: family is not compatible (" + check.reason + ")");
  }
  for (const auto& [d, ra] : a.residues) {
    const auto it = b.residues.find(d);
    if (it == b.residues.end() || it->second == ra) continue;
    const OpenCoset first{d, ra};
    const OpenCoset second{d, it->second};
    // Each coset is clopen: its complement at level d is the union of the
    // other d - 1 cosets.
    for (std::uint64_t x = 0; x < d; ++x) {
      bool in_other = false;
      for (std::uint64_t r = 0; r < d; ++r) in_other = in_other || (r != ra && OpenCoset{d, r}.contains(x));
      if (first.contains(x) == in_other) throw DomainError("coset is not clopen");  // unreachable
      if (first.contains(x) && second.contains(x)) throw DomainError("separating cosets intersect");
    }
    return {first, second};
  }
  throw DomainError("not separated at this truncation");
}

CompatibleFamily glue_ultrafilter(const UltrafilterSystem& u) {
  const std::uint64_t n = u.bound;
  if (n == 0) throw DomainError("bound must be positive");
  if (n > kLevelLimit) throw CapacityError("glue_ultrafilter limited to bound <= 10^4");
  for (const auto& [d, g] : u.generators) {
    if (d == 0 || n % d != 0) throw DomainError("level " + std::to_string(d) + " does not divide the bound");
    if (g >= d) throw DomainError("generator out of range at level " + std::to_string(d));
    if (u.tower == Tower::units && !is_unit(g, d)) {
      throw DomainError("generator at level " + std::to_string(d) + " is not a unit");
    }
  }
  for (const auto& [d, gd] : u.generators) {
    for (const auto& [e, ge] : u.generators) {
      if (e < d && d % e == 0 && gd % e != ge) {
        throw DomainError("incoherent generators at levels " + pair_text(d, e) +
                          ": the local images depend on the choice of subextension");
      }
    }
  }

  std::vector<std::uint64_t> candidates;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (u.tower == Tower::units && !is_unit(x, n)) continue;
    bool fits = true;
    for (const auto& [d, g] : u.generators) fits = fits && x % d == g;
    if (fits) candidates.push_back(x);
  }
  if (candidates.empty()) {
    for (const auto& [d, gd] : u.generators) {
      for (const auto& [e, ge] : u.generators) {
        const std::uint64_t g = gcd(d, e);
        if (gd % g != ge % g) throw DomainError("incoherent generators at levels " + pair_text(d, e));
      }
    }
    throw DomainError("generators admit no common lift");
  }
  if (candidates.size() > 1) throw DomainError("generators do not determine sigma at level " + std::to_string(n));

  const std::uint64_t sigma = candidates.front();
  CompatibleFamily out = CompatibleFamily::of_element(n, sigma);

  // Preimage of {sigma_d} under the reduction equals sigma_N Gal(L/F_d).
  for (const auto& [d, sd] : out.residues) {
    std::set<std::uint64_t> preimage, coset;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (u.tower == Tower::units && !is_unit(x, n)) continue;
      if (x % d == sd) preimage.insert(x);
    }
    if (u.tower == Tower::additive) {
      for (std::uint64_t k = 0; k < n / d; ++k) coset.insert((sigma + k * d) % n);
    } else {
      for (auto k : units_mod(n)) {
        if (k % d == 1 % d) coset.insert(sigma * k % n);
      }
    }
    if (preimage != coset) throw DomainError("preimage of sigma_d is not the coset at level " + std::to_string(d));
  }
  return out;
}

CompactnessReport compactness_check(std::uint64_t bound, Tower tower, Execution exec) {
  if (bound == 0) throw DomainError("bound must be positive");
  if (bound > 360) throw CapacityError("compactness_check limited to bound <= 360");
  CompactnessReport report{bound, tower, 0, {}};

  std::vector<std::uint64_t> carrier;
  if (tower == Tower::units) {
    carrier = units_mod(bound);
  } else {
    for (std::uint64_t x = 0; x < bound; ++x) carrier.push_back(x);
  }
  const std::size_t size = carrier.size();
  const auto levels = divisors(bound);

  // Reduction maps on carrier indices, one per level.
  std::vector<std::vector<std::uint64_t>> level_carriers;
  std::vector<std::vector<std::size_t>> reductions;
  for (auto d : levels) {
    std::vector<std::uint64_t> lc = tower == Tower::units ? units_mod(d) : std::vector<std::uint64_t>{};
    if (tower == Tower::additive) {
      for (std::uint64_t r = 0; r < d; ++r) lc.push_back(r);
    }
    std::vector<std::size_t> map(size);
    for (std::size_t i = 0; i < size; ++i) {
      const auto r = carrier[i] % d;
      map[i] = static_cast<std::size_t>(std::lower_bound(lc.begin(), lc.end(), r) - lc.begin());
    }
    level_carriers.push_back(std::move(lc));
    reductions.push_back(std::move(map));
  }

  std::vector<std::string> errors(size);
  auto run_case = [&](std::size_t i) {
    try {
      const FiniteFilter uf = FiniteFilter::principal(size, i);
      if (ultrafilter_generator(uf) != i) {
        errors[i] = "generator mismatch";
        return;
      }
      UltrafilterSystem system{bound, tower, {}};
      for (std::size_t l = 0; l < levels.size(); ++l) {
        const FiniteFilter pushed = pushforward(reductions[l], level_carriers[l].size(), uf);
        system.generators[levels[l]] = level_carriers[l][ultrafilter_generator(pushed)];
      }
      const CompatibleFamily sigma = glue_ultrafilter(system);
      const std::uint64_t s = sigma.residues.at(bound);
      for (auto d : levels) {
        Subset neighbourhood(size);
        for (std::size_t j = 0; j < size; ++j) {
          if (carrier[j] % d == s % d) neighbourhood.insert(j);
        }
        if (!uf.contains(neighbourhood)) {
          errors[i] = "x=" + std::to_string(carrier[i]) + ": neighbourhood coset at level " + std::to_string(d) +
                      " not in the ultrafilter";
          return;
        }
      }
      if (!(sigma == CompatibleFamily::of_element(bound, carrier[i]))) {
        errors[i] = "x=" + std::to_string(carrier[i]) + ": glued sigma differs from the family of x";
      }
    } catch (const std::exception& ex) {
      errors[i] = "x=" + std::to_string(carrier[i]) + ": " + ex.what();
    }
  };

  const auto count = static_cast<std::int64_t>(size);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) run_case(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) run_case(static_cast<std::size_t>(i));
  }
  report.cases = size;
  for (auto& e : errors) {
    if (!e.empty()) report.violations.push_back(std::move(e));
  }
  return report;
}

}  // namespace krull
