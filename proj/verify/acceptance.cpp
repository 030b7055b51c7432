#include "acceptance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "krull/errors.hpp"
#include "krull/filters.hpp"
#include "krull/galois.hpp"
#include "krull/gfb.hpp"
#include "krull/number_theory.hpp"
#include "krull/profinite.hpp"
#include "krull/rational_function.hpp"
#include "oracles.hpp"

namespace krull::acceptance {

namespace {

// Collects failures; the detail line keeps the first few.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_.push_back(what);
  }
  std::size_t checks() const { return checks_; }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary(const std::string& ok_text) const {
    if (passed()) return ok_text;
    std::ostringstream os;
    os << failures_ << " of " << checks_ << " checks failed";
    for (const auto& f : first_) os << "; " << f;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> first_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

Criterion fundamental_theorem_finite(Execution exec) {
  Tally t;
  std::size_t total_pairs = 0;
  for (auto [p, n, expected] : {std::tuple{2ULL, 12U, 6ULL}, std::tuple{3ULL, 8U, 4ULL}}) {
    const auto r = verify_galois_correspondence(FrobeniusGroup(p, n), exec);
    const std::string tag = "p=" + str(p) + " n=" + str(n);
    t.check(r.pairs.size() == expected, tag + ": " + str(r.pairs.size()) + " pairs");
    t.check(r.violations.empty(), tag + ": violations reported");
    for (const auto& pair : r.pairs) t.check(pair.roundtrip_ok, tag + ": round trip fails");
    total_pairs += r.pairs.size();
  }
  return {1, "Fundamental Theorem (finite fields)", t.passed(),
          t.summary(str(total_pairs) + " pairs over F_2^12 and F_3^8, all round trips identity")};
}

Criterion fundamental_theorem_cyclotomic(Execution exec) {
  Tally t;
  std::size_t subgroups = 0;
  for (std::uint64_t n : {5ULL, 7ULL, 8ULL, 12ULL}) {
    for (const auto& h : all_subgroups(FiniteGroup::units(n))) {
      ++subgroups;
      t.check(cyclo_fixed_field_degree(n, h) * h.elements.size() == euler_phi(n),
              "degree * |H| != phi(" + str(n) + ")");
    }
    t.check(verify_galois_correspondence(CyclotomicGroup(n), exec).ok(), "correspondence fails at n=" + str(n));
  }
  return {2, "Fundamental Theorem (cyclotomic)", t.passed(),
          t.summary(str(subgroups) + " subgroups for n in {5,7,8,12}, degree * |H| = phi(n)")};
}

struct BrokenFamily {
  FiniteGroup group;
  SetFamily family;
  std::string axiom;
};

Criterion group_filter_basis() {
  Tally t;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto b = standard_gfb(n);
    const auto again = check_group_filter_basis(b.group(), b.basis());
    t.check(std::holds_alternative<GroupFilterBasis>(again), "standard basis rejected at n=" + str(n));
  }
  const auto z12 = FiniteGroup::cyclic(12);
  const std::vector<BrokenFamily> corpus = {
      {z12, SetFamily(12, {}), "Filter basis nonempty"},
      {z12, SetFamily::from_indices(12, {{0, 6}, {0, 4, 8}}), "Filter basis directed"},
      {z12, SetFamily::from_indices(12, {{1, 2}, {0, 1, 2}}), "Axiom 1: identity"},
      {FiniteGroup::cyclic(6), SetFamily::from_indices(6, {{1}}), "Axiom 1: identity"},
      {z12, SetFamily::from_indices(12, {{0, 1}}), "Axiom 2: product"},
      {z12, SetFamily::from_indices(12, {{0, 1, 11}}), "Axiom 2: product"},
      {FiniteGroup::symmetric(3), SetFamily::from_indices(6, {{0, 2}}), "Axiom 4: conjugation"},
  };
  for (const auto& c : corpus) {
    const auto r = check_group_filter_basis(c.group, c.family);
    const auto* v = std::get_if<Violation>(&r);
    t.check(v && v->axiom == c.axiom, c.group.name() + ": expected " + c.axiom);
  }
  return {3, "Group filter basis axioms", t.passed(),
          t.summary("standard basis valid for n <= 60; " + str(corpus.size()) + " broken families rejected")};
}

Criterion topological_group_theorem(Execution exec) {
  Tally t;
  std::size_t bases = 0;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto subs = cyclic_subgroups(g);
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << subs.size()); ++code) {
      std::vector<Subset> members;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if ((code >> i) & 1U) members.push_back(subs[i]);
      }
      const auto r = check_group_filter_basis(g, SetFamily(n, members));
      const auto* b = std::get_if<GroupFilterBasis>(&r);
      if (!b) continue;
      ++bases;
      t.check(verify_topological_group(g, induced_group_topology(*b, exec), exec).ok,
              "induced topology not a group topology on Z/" + str(n));
    }
  }
  const FiniteTopology sierpinski{2, {Subset(2), Subset::of(2, {0}), Subset::full(2)}};
  const auto r = verify_topological_group(FiniteGroup::cyclic(2), sierpinski, exec);
  t.check(!r.ok && r.open && *r.open == Subset::of(2, {0}) && r.point, "Z/2 counterexample not refuted");
  t.check(!oracle::continuous_by_rectangles(FiniteGroup::cyclic(2), sierpinski), "rectangle oracle accepts Z/2");
  return {4, "Topological-group theorem", t.passed(),
          t.summary(str(bases) + " valid bases over Z/n (n <= 12) continuous; Z/2 counterexample witness open " +
                    (r.open ? r.open->to_string() : std::string("?")))};
}

Criterion krull_equality(Execution exec) {
  Tally t;
  for (std::uint64_t n : {6ULL, 8ULL, 12ULL}) {
    const auto opens = induced_group_topology(standard_gfb(n), exec).opens;
    const auto unions = oracle::coset_unions(n);
    const bool forward = std::includes(unions.begin(), unions.end(), opens.begin(), opens.end());
    const bool backward = std::includes(opens.begin(), opens.end(), unions.begin(), unions.end());
    t.check(forward, "Z/" + str(n) + ": an open is not a union of cosets");
    t.check(backward, "Z/" + str(n) + ": a union of cosets is not open");
  }
  return {5, "Krull topology equals the induced topology", t.passed(),
          t.summary("double inclusion for n in {6,8,12}")};
}

Criterion ultrafilter_principality() {
  Tally t;
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_subset(n, [&](const Subset& kernel) {
      const FiniteFilter f(kernel);
      bool maximal = !kernel.empty();
      for_each_subset(n, [&](const Subset& k2) {
        if (!k2.empty() && k2.is_subset_of(kernel) && !(k2 == kernel)) maximal = false;
      });
      t.check(is_ultrafilter(f) == maximal, "ultrafilter test disagrees on " + kernel.to_string());
      t.check(maximal == (kernel.count() == 1), "maximal filter not principal: " + kernel.to_string());
    });
  }
  std::size_t maps = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= n;
      for (std::size_t code = 0; code < total; ++code, ++maps) {
        std::vector<std::size_t> map(m);
        std::size_t c = code;
        for (auto& y : map) {
          y = c % n;
          c /= n;
        }
        for (std::size_t x = 0; x < m; ++x) {
          const FiniteFilter f = FiniteFilter::principal(m, x);
          const FiniteFilter pushed = pushforward(map, n, f);
          t.check(is_ultrafilter(pushed) && ultrafilter_generator(pushed) == map[x], "pushforward not principal");
          t.check(pushed.family().members() == oracle::pushforward_by_enumeration(map, n, f.family()).members(),
                  "pushforward disagrees with enumeration");
        }
      }
    }
  }
  return {6, "Ultrafilters on finite sets are principal", t.passed(),
          t.summary("carriers <= 5 exhaustive; " + str(maps) + " maps between carriers <= 4")};
}

Criterion compactness(Execution exec) {
  Tally t;
  std::size_t cases = 0;
  for (std::uint64_t n : {24ULL, 60ULL}) {
    const auto r = compactness_check(n, Tower::additive, exec);
    cases += r.cases;
    t.check(r.ok() && r.cases == n, "compactness_check(" + str(n) + ") reports violations");
  }
  return {7, "Compactness via gluing", t.passed(), t.summary(str(cases) + " ultrafilters glued at N = 24, 60")};
}

Criterion hausdorff(std::uint64_t bound) {
  Tally t;
  std::mt19937_64 rng(360);
  std::size_t pairs = 0;
  if (bound < 2) t.check(false, "bound must be at least 2 to have distinct families");
  for (int trial = 0; trial < 1000 && bound >= 2; ++trial) {
    const std::uint64_t a = rng() % bound;
    std::uint64_t b = rng() % bound;
    if (b == a) b = (a + 1 + rng() % (bound - 1)) % bound;
    const auto fa = CompatibleFamily::of_element(bound, a), fb = CompatibleFamily::of_element(bound, b);
    const auto sep = hausdorff_separate(fa, fb);
    ++pairs;
    const std::uint64_t d = sep.first.level;
    bool ok = sep.second.level == d && sep.first.contains(a) && sep.second.contains(b) &&
              sep.first.residue != sep.second.residue;
    // Clopen: the complement at level d is the union of the other cosets.
    for (std::uint64_t x = 0; x < bound && ok; ++x) {
      const bool in_first = sep.first.contains(x);
      bool in_others = false;
      for (std::uint64_t r = 0; r < d; ++r) in_others = in_others || (r != sep.first.residue && x % d == r);
      ok = in_first != in_others && !(in_first && sep.second.contains(x));
    }
    t.check(ok, "separation fails for " + str(a) + ", " + str(b));
  }
  return {8, "Hausdorff and totally disconnected", t.passed(),
          t.summary(str(pairs) + " random distinct families at bound " + str(bound) + " separated by clopen cosets")};
}

Criterion krull_grid(std::uint64_t bound) {
  Tally t;
  const std::uint32_t values[] = {0, 1, 2, Exponent::kInfinite};
  // Primes of the grid that do not divide the bound keep exponent 0.
  std::vector<SupernaturalNumber> grid;
  for (auto a : values) {
    for (auto b : values) {
      for (auto c : values) {
        SupernaturalNumber s;
        const std::pair<std::uint64_t, std::uint32_t> exps[] = {{2, a}, {3, b}, {5, c}};
        bool usable = true;
        for (auto [p, e] : exps) {
          if (e != 0 && bound % p != 0) usable = false;
          s.set(p, Exponent{e});
        }
        if (usable) grid.push_back(s);
      }
    }
  }
  for (const auto& s : grid) {
    const auto r = krull_roundtrip(s, bound);
    t.check(r.ok && r.dual_ok, "round trip fails for " + s.to_string());
  }
  const auto levels = divisors(bound);
  for (const auto& s : grid) {
    for (const auto& u : grid) {
      bool reversed = true;
      for (auto n : levels) {
        reversed = reversed && closed_subgroup_image(u, n).is_subset_of(closed_subgroup_image(s, n));
      }
      t.check(truncated_divides(truncate(s, bound), truncate(u, bound)) == reversed,
              "order reversal fails for " + s.to_string() + ", " + u.to_string());
    }
  }
  return {9, "Krull's theorem on supernatural numbers", t.passed(),
          t.summary(str(grid.size()) + " supernatural numbers at bound " + str(bound) +
                    ": round trips and order reversal hold")};
}

Criterion separability() {
  Tally t;
  std::size_t polys = 0;
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const PrimeField F(p);
    for (int deg = 1; deg <= 6; ++deg) {
      for (const auto& f : oracle::monic_polynomials(F, deg)) {
        ++polys;
        t.check(is_separable(f) == oracle::separable_by_factorization(f), "disagreement on " + f.to_string());
      }
    }
  }
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    t.check(!is_separable(purely_inseparable_example(p)), "X^p - T separable for p=" + str(p));
  }
  return {10, "Separability oracle", t.passed(),
          t.summary(str(polys) + " monic polynomials over F_2, F_3 agree; X^p - T inseparable for p = 2, 3, 5")};
}

Criterion compositum() {
  Tally t;
  const auto divs = divisors(60);
  for (auto a : divs) {
    for (auto b : divs) {
      t.check(compositum_level(a, b, 60) == oracle::least_common_level(a, b, 60),
              "compositum_level(" + str(a) + ", " + str(b) + ")");
    }
  }
  std::mt19937_64 rng(10000);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    const std::uint64_t d1 = 1 + rng() % 200, d2 = 1 + rng() % 200;
    if (lcm(d1, d2) > 10000) continue;
    ++pairs;
    const OpenCoset c1{d1, rng() % d1}, c2{d2, rng() % d2};
    const std::uint64_t l = lcm(d1, d2);
    const auto got = coset_intersection(c1, c2);
    const auto scan = oracle::crt_scan(c1.residue, d1, c2.residue, d2, l);
    bool ok = static_cast<bool>(got) == !scan.empty();
    if (got) {
      ok = ok && got->level == l;
      for (std::uint64_t x = 0; x < l && ok; ++x) ok = got->contains(x) == (c1.contains(x) && c2.contains(x));
    }
    t.check(ok, "coset intersection (" + str(c1.residue) + " mod " + str(d1) + ") and (" + str(c2.residue) +
                    " mod " + str(d2) + ")");
  }
  return {11, "Compositum and coset intersection", t.passed(),
          t.summary(str(divs.size() * divs.size()) + " divisor pairs of 60; " + str(pairs) + " random coset pairs")};
}

}  // namespace

Criterion run_criterion(int id, std::uint64_t bound, Execution exec) {
  static const char* const titles[] = {"",
                                       "Fundamental Theorem (finite fields)",
                                       "Fundamental Theorem (cyclotomic)",
                                       "Group filter basis axioms",
                                       "Topological-group theorem",
                                       "Krull topology equals the induced topology",
                                       "Ultrafilters on finite sets are principal",
                                       "Compactness via gluing",
                                       "Hausdorff and totally disconnected",
                                       "Krull's theorem on supernatural numbers",
                                       "Separability oracle",
                                       "Compositum and coset intersection"};
  if (id < 1 || id > kCriterionCount) throw DomainError("no acceptance criterion " + std::to_string(id));
  try {
    switch (id) {
      case 1: return fundamental_theorem_finite(exec);
      case 2: return fundamental_theorem_cyclotomic(exec);
      case 3: return group_filter_basis();
      case 4: return topological_group_theorem(exec);
      case 5: return krull_equality(exec);
      case 6: return ultrafilter_principality();
      case 7: return compactness(exec);
      case 8: return hausdorff(bound);
      case 9: return krull_grid(bound);
      case 10: return separability();
      default: return compositum();
    }
  } catch (const std::exception& e) {
    return {id, titles[id], false, std::string("exception: ") + e.what()};
  }
}

std::vector<Criterion> run_all(std::uint64_t bound, Execution exec) {
  std::vector<Criterion> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, bound, exec));
  return out;
}

}  // namespace krull::acceptance
