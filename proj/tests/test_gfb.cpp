#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "krull/errors.hpp"
#include "krull/galois.hpp"
#include "krull/gfb.hpp"
#include "krull/json_io.hpp"
#include "krull/number_theory.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

Subset S(std::size_t n, std::vector<std::size_t> idx) { return Subset::of(n, idx); }

const Violation* violation(const std::variant<GroupFilterBasis, Violation>& r) { return std::get_if<Violation>(&r); }

std::vector<Subset> all_families_members(std::size_t n, std::uint64_t code, const std::vector<Subset>& pool) {
  std::vector<Subset> members;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((code >> i) & 1U) members.push_back(pool[i]);
  }
  (void)n;
  return members;
}

}  // namespace

TEST_CASE("finite groups") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), DomainError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(401), CapacityError);
  CHECK_THROWS_AS(FiniteGroup::symmetric(6), CapacityError);
  // Non-associative loop of order 5 with identity and inverses.
  CHECK_THROWS_AS(FiniteGroup("loop", 5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}),
                  DomainError);
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.size() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::units(8).is_abelian());
  const auto z12 = FiniteGroup::cyclic(12);
  CHECK(z12.translate(5, S(12, {0, 4, 8})) == S(12, {1, 5, 9}));
  CHECK(z12.product(S(12, {0, 1}), S(12, {0, 1})) == S(12, {0, 1, 2}));
  CHECK(z12.generated_subgroup(S(12, {8})) == S(12, {0, 4, 8}));
  CHECK(cyclic_subgroups(z12).size() == 6);
}

TEST_CASE("check_group_filter_basis") {
  const auto z12 = FiniteGroup::cyclic(12);
  SUBCASE("standard basis on Z/12") {
    const auto r = check_group_filter_basis(z12, SetFamily(12, cyclic_subgroups(z12)));
    CHECK(std::holds_alternative<GroupFilterBasis>(r));
  }
  SUBCASE("broken families") {
    const auto no_identity = check_group_filter_basis(z12, SetFamily::from_indices(12, {{1, 2}, {0, 1, 2}}));
    REQUIRE(violation(no_identity));
    CHECK(violation(no_identity)->axiom == "Axiom 1: identity");
    CHECK(violation(no_identity)->witness == std::vector<Subset>{S(12, {1, 2})});

    const auto sum = check_group_filter_basis(z12, SetFamily::from_indices(12, {{0, 1}}));
    REQUIRE(violation(sum));
    CHECK(violation(sum)->axiom == "Axiom 2: product");
    CHECK(violation(sum)->witness == std::vector<Subset>{S(12, {0, 1})});

    const auto directed = check_group_filter_basis(z12, SetFamily::from_indices(12, {{0, 6}, {0, 4, 8}}));
    REQUIRE(violation(directed));
    CHECK(violation(directed)->axiom == "Filter basis directed");

    const auto empty = check_group_filter_basis(z12, SetFamily(12, {}));
    REQUIRE(violation(empty));
    CHECK(violation(empty)->axiom == "Filter basis nonempty");

    const auto s3 = FiniteGroup::symmetric(3);
    const auto conj = check_group_filter_basis(s3, SetFamily::from_indices(6, {{0, 2}}));
    REQUIRE(violation(conj));
    CHECK(violation(conj)->axiom == "Axiom 4: conjugation");
    CHECK(violation(conj)->witness == std::vector<Subset>{S(6, {0, 2})});
    REQUIRE(violation(conj)->points.size() == 1);
    const std::size_t x = violation(conj)->points[0];
    CHECK_FALSE(s3.conjugate(static_cast<std::uint32_t>(x), S(6, {0, 2})).is_subset_of(S(6, {0, 2})));
    for (std::size_t y = 0; y < x; ++y) {
      CHECK(s3.conjugate(static_cast<std::uint32_t>(y), S(6, {0, 2})).is_subset_of(S(6, {0, 2})));
    }
    const auto j = to_json(*violation(conj));
    CHECK(j.at("axiom") == "Axiom 4: conjugation");
    CHECK(j.at("witness") == Json::array({Json::array({0, 2})}));
  }
  CHECK_THROWS_AS(check_group_filter_basis(z12, SetFamily(6, {Subset::full(6)})), DomainError);
}

TEST_CASE("axiom 3 is never the first failure on a finite group") {
  // Exhaustive over every family of identity-containing subsets for |G| <= 5,
  // random families on S3 and Z/6.
  for (std::uint64_t n = 1; n <= 5; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    std::vector<Subset> pool;
    for_each_subset(n, [&](const Subset& s) {
      if (s.contains(0)) pool.push_back(s);
    });
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << pool.size()); ++code) {
      const auto r = check_group_filter_basis(g, SetFamily(n, all_families_members(n, code, pool)));
      if (const auto* v = violation(r)) CHECK(v->axiom != "Axiom 3: inverse");
    }
  }
  std::mt19937_64 rng(23);
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::cyclic(6)}) {
    for (int trial = 0; trial < 5000; ++trial) {
      std::vector<Subset> members;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) members.push_back(Subset::from_mask(6, (rng() % 64) | 1U));
      const auto r = check_group_filter_basis(g, SetFamily(6, members));
      if (const auto* v = violation(r)) CHECK(v->axiom != "Axiom 3: inverse");
    }
  }
}

TEST_CASE("induced_group_topology") {
  const auto z6 = FiniteGroup::cyclic(6);
  const auto whole = std::get<GroupFilterBasis>(check_group_filter_basis(z6, SetFamily(6, {Subset::full(6)})));
  CHECK(induced_group_topology(whole).opens == FiniteTopology::indiscrete(6).opens);
  const auto point = std::get<GroupFilterBasis>(check_group_filter_basis(z6, SetFamily(6, {S(6, {0})})));
  CHECK(induced_group_topology(point).opens == FiniteTopology::discrete(6).opens);

  SUBCASE("Krull equality at truncation") {
    for (std::uint64_t n : {6ULL, 8ULL, 12ULL}) {
      CAPTURE(n);
      const auto b = standard_gfb(n);
      const auto t = induced_group_topology(b);
      CHECK(t.opens == oracle::coset_unions(n));
      CHECK(coset_union_topology(b.group(), b.basis().members()).opens == t.opens);
      CHECK(t.opens == induced_group_topology(b, Execution::serial).opens);
    }
  }
}

TEST_CASE("verify_topological_group") {
  const auto z2 = FiniteGroup::cyclic(2);
  const FiniteTopology sierpinski{2, {Subset(2), S(2, {0}), Subset::full(2)}};
  const auto r = verify_topological_group(z2, sierpinski);
  CHECK_FALSE(r.ok);
  CHECK(r.map == "multiplication");
  CHECK(*r.open == S(2, {0}));
  CHECK(*r.point == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_FALSE(oracle::continuous_by_rectangles(z2, sierpinski));
  const auto j = to_json(r);
  CHECK(j.at("continuous") == false);
  CHECK(j.at("open") == Json::array({0}));

  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(verify_topological_group(s3, FiniteTopology::discrete(6)).ok);
  CHECK(verify_topological_group(s3, FiniteTopology::indiscrete(6)).ok);
  CHECK(verify_topological_group(FiniteGroup::cyclic(20), FiniteTopology::discrete(20)).ok);
  CHECK_THROWS_AS(verify_topological_group(FiniteGroup::cyclic(25), FiniteTopology::indiscrete(25)), CapacityError);
  CHECK_THROWS_AS(verify_topological_group(s3, FiniteTopology::indiscrete(5)), DomainError);

  SUBCASE("continuity of inversion") {
    // Opens {}, {0, 1}, carrier on Z/3: multiplication already fails, so use
    // a topology where only inversion can be examined: Z/3 with {0,1} open.
    const auto z3 = FiniteGroup::cyclic(3);
    const FiniteTopology t{3, {Subset(3), S(3, {0, 1}), Subset::full(3)}};
    const auto rep = verify_topological_group(z3, t);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(oracle::continuous_by_rectangles(z3, t));
  }

  SUBCASE("random topologies on Z/4 against the rectangle oracle") {
    const auto z4 = FiniteGroup::cyclic(4);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
      FilterBundle bundle;
      for (std::size_t x = 0; x < 4; ++x) bundle.emplace_back(Subset::from_mask(4, rng() % 16));
      const auto t = induced_topology(bundle);
      const auto rep = verify_topological_group(z4, t, Execution::serial);
      CHECK(rep.ok == oracle::continuous_by_rectangles(z4, t));
      const auto par = verify_topological_group(z4, t, Execution::parallel);
      CHECK(to_json(rep) == to_json(par));
    }
  }
}

TEST_CASE("every valid basis induces a group topology") {
  // Families of subgroups of Z/n, n <= 12.
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto subs = cyclic_subgroups(g);
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << subs.size()); ++code) {
      const SetFamily fam(n, all_families_members(n, code, subs));
      const auto r = check_group_filter_basis(g, fam);
      // Subgroup families only ever fail by not being directed.
      if (const auto* v = violation(r)) {
        CHECK(v->axiom == "Filter basis directed");
        CHECK_FALSE(fam.contains(v->witness[0] & v->witness[1]));
        continue;
      }
      const auto t = induced_group_topology(std::get<GroupFilterBasis>(r));
      CHECK(verify_topological_group(g, t).ok);
    }
  }
  // Every valid family at all on Z/4 and (Z/8)^x.
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::units(8)}) {
    std::vector<Subset> pool;
    for_each_subset(4, [&](const Subset& s) {
      if (s.contains(g.identity())) pool.push_back(s);
    });
    int valid = 0;
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << pool.size()); ++code) {
      const auto r = check_group_filter_basis(g, SetFamily(4, all_families_members(4, code, pool)));
      if (!std::holds_alternative<GroupFilterBasis>(r)) continue;
      ++valid;
      const auto t = induced_group_topology(std::get<GroupFilterBasis>(r));
      CHECK(verify_topological_group(g, t).ok);
      CHECK(oracle::continuous_by_rectangles(g, t));
    }
    CHECK(valid > 0);
  }
  SUBCASE("S3 with its full subgroup family") {
    const auto s3 = FiniteGroup::symmetric(3);
    const auto subs = subgroups_exhaustive(s3);
    CHECK(subs.size() == 6);
    const auto r = check_group_filter_basis(s3, SetFamily(6, subs));
    REQUIRE(std::holds_alternative<GroupFilterBasis>(r));
    const auto t = induced_group_topology(std::get<GroupFilterBasis>(r));
    CHECK(t.opens == FiniteTopology::discrete(6).opens);
    CHECK(verify_topological_group(s3, t).ok);
    // The normal subgroups alone are also conjugation stable and directed.
    const auto normal = check_group_filter_basis(s3, SetFamily::from_indices(6, {{0, 3, 4}, {0, 1, 2, 3, 4, 5}}));
    REQUIRE(std::holds_alternative<GroupFilterBasis>(normal));
    CHECK(verify_topological_group(s3, induced_group_topology(std::get<GroupFilterBasis>(normal))).ok);
  }
}

TEST_CASE("standard_gfb") {
  CHECK(standard_gfb(1).basis().members() == std::vector<Subset>{S(1, {0})});
  const auto b12 = standard_gfb(12);
  std::multiset<std::size_t> sizes;
  for (const auto& u : b12.basis().members()) sizes.insert(u.count());
  CHECK(sizes == std::multiset<std::size_t>{12, 6, 4, 3, 2, 1});
  CHECK_THROWS_AS(standard_gfb(0), DomainError);
  for (std::uint64_t n = 1; n <= 60; ++n) CHECK(standard_gfb(n).basis().members().size() == divisors(n).size());

  // The d = 4 element is Gal(F_{2^12}/F_{2^4}).
  const FrobeniusGroup G(2, 12);
  const auto h = fixing_subgroup(G, FiniteSubfield{4});
  Subset fixing(12);
  for (auto k : h.elements) fixing.insert(static_cast<std::size_t>(k));
  CHECK(b12.basis().contains(fixing));
  CHECK(fixing == S(12, {0, 4, 8}));
  for (auto d : divisors(12)) {
    const auto hd = fixing_subgroup(G, FiniteSubfield{static_cast<unsigned>(d)});
    Subset s(12);
    for (auto k : hd.elements) s.insert(static_cast<std::size_t>(k));
    CHECK(b12.basis().contains(s));
  }
}
