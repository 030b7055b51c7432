#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "krull/errors.hpp"
#include "krull/finite_field.hpp"
#include "krull/json_io.hpp"
#include "krull/number_theory.hpp"
#include "oracles.hpp"

using namespace krull;

TEST_CASE("canonical modulus") {
  PrimeField F2(2);
  // Compared from the constant term: x^4+x^3+1 = (1,0,0,1,1) precedes x^4+x+1 = (1,1,0,0,1).
  CHECK(FiniteField(2, 4).modulus() == FpPolynomial::from_ints(F2, {1, 0, 0, 1, 1}));
  CHECK(FiniteField(2, 2).modulus() == FpPolynomial::from_ints(F2, {1, 1, 1}));
  CHECK(FiniteField(2, 3).modulus() == FpPolynomial::from_ints(F2, {1, 0, 1, 1}));
  CHECK(FiniteField(2, 4).canonical());
  CHECK(FiniteField(3, 2).modulus() == FpPolynomial::from_ints(PrimeField(3), {1, 0, 1}));
  // Independently: the least irreducible by trial division in the same order.
  for (unsigned n = 1; n <= 5; ++n) {
    auto all = oracle::monic_polynomials(F2, static_cast<int>(n));
    std::vector<FpPolynomial> irreducible;
    for (const auto& f : all) {
      if (is_irreducible_fp_trial(f)) irreducible.push_back(f);
    }
    auto lex_from_constant = [](const FpPolynomial& a, const FpPolynomial& b) {
      const auto& ca = a.coefficients();
      const auto& cb = b.coefficients();
      return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    };
    CHECK(*std::min_element(irreducible.begin(), irreducible.end(), lex_from_constant) == FiniteField(2, n).modulus());
  }
  CHECK(FiniteField(2, 4) == FiniteField(2, 4));
  CHECK_THROWS_AS(FiniteField(4, 2), DomainError);

  const FiniteField classic(FpPolynomial::from_ints(F2, {1, 1, 0, 0, 1}));
  CHECK_FALSE(classic.canonical());
  CHECK_FALSE(classic == FiniteField(2, 4));
  CHECK(FiniteField(FiniteField(2, 4).modulus()).canonical());
  CHECK_THROWS_AS(FiniteField(FpPolynomial::from_ints(F2, {1, 0, 1})), DomainError);
  CHECK_THROWS_AS(FiniteField(FpPolynomial::from_ints(F2, {1})), DomainError);
}

TEST_CASE("frobenius") {
  const FiniteField F(FpPolynomial::from_ints(PrimeField(2), {1, 1, 0, 0, 1}));
  CHECK(frobenius(F.zero()) == F.zero());
  for (std::int64_t c = 0; c < 5; ++c) {
    const FiniteField K(5, 2);
    CHECK(frobenius(K.from_int(c)) == K.from_int(c));
  }
  CHECK(frobenius_orbit(F.generator()).size() == 4);
  CHECK(frobenius_power(F.generator(), 4) == F.generator());

  SUBCASE("additive and multiplicative on random pairs") {
    std::mt19937_64 rng(3);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {3, 4}, {5, 2}, {2, 6}}) {
      const FiniteField K(p, n);
      std::uniform_int_distribution<std::uint64_t> pick(0, K.order() - 1);
      for (int i = 0; i < 1000; ++i) {
        const auto a = K.element(pick(rng));
        const auto b = K.element(pick(rng));
        CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
      }
    }
  }
  SUBCASE("element degree divides field degree") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {2, 12}}) {
      const FiniteField K(p, n);
      for (std::uint64_t i = 0; i < K.order(); i += (K.order() > 1000 ? 7 : 1)) {
        CHECK(n % element_degree(K.element(i)) == 0);
      }
    }
  }
}

TEST_CASE("field arithmetic") {
  const FiniteField F(3, 3);
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const auto a = F.element(i);
    CHECK(a * a.inverse() == F.one());
    CHECK(a.index() == i);
  }
  CHECK_THROWS_AS(F.zero().inverse(), DomainError);
  CHECK_THROWS_AS(FiniteField(2, 4).one() + FiniteField(2, 2).one(), DomainError);
  CHECK_THROWS_AS(F.element(F.order()), DomainError);
}

TEST_CASE("minimal polynomial") {
  PrimeField F2(2);
  const FiniteField F(FpPolynomial::from_ints(F2, {1, 1, 0, 0, 1}));
  CHECK(minimal_polynomial(F.generator()) == FpPolynomial::from_ints(F2, {1, 1, 0, 0, 1}));
  CHECK(minimal_polynomial(FiniteField(2, 4).generator()) == FiniteField(2, 4).modulus());
  CHECK(minimal_polynomial(F.zero()) == FpPolynomial::x(F2));
  CHECK(minimal_polynomial(F.one()) == FpPolynomial::from_ints(F2, {-1, 1}));
  CHECK(minimal_polynomial(F.generator()) == F.modulus());
  for (const auto& a : F.elements()) {
    const auto m = minimal_polynomial(a);
    CHECK(m.is_monic());
    CHECK(is_irreducible_fp(m));
    CHECK(m.degree() == static_cast<int>(element_degree(a)));
    // Evaluate m(a) by Horner in F.
    auto acc = F.zero();
    for (auto it = m.coefficients().rbegin(); it != m.coefficients().rend(); ++it) {
      acc = acc * a + F.from_int(static_cast<std::int64_t>(*it));
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("roots_in_field") {
  PrimeField F2(2);
  const FiniteField F4(2, 2), F2f(2, 1);
  const auto q = FpPolynomial::from_ints(F2, {1, 1, 1});
  CHECK(roots_in_field(q, F4).size() == 2);
  CHECK(roots_in_field(q, F2f).empty());
  CHECK(roots_in_field(FpPolynomial::from_ints(F2, {1, 1}), F4) == std::vector<FiniteFieldElement>{F4.one()});
  const FiniteField F16(2, 4);
  for (std::uint64_t i : {3, 6, 11}) {
    const auto a = F16.element(i);
    auto orbit = frobenius_orbit(a);
    auto roots = roots_in_field(minimal_polynomial(a), F16);
    std::set<std::uint64_t> orbit_idx, root_idx;
    for (const auto& b : orbit) orbit_idx.insert(b.index());
    for (const auto& b : roots) root_idx.insert(b.index());
    CHECK(orbit_idx == root_idx);
  }
  CHECK(roots_in_field(F16.modulus(), F16, Execution::serial) == roots_in_field(F16.modulus(), F16, Execution::parallel));
  CHECK_THROWS_AS(roots_in_field(FpPolynomial::x(F2), FiniteField(2, 17)), CapacityError);
}

TEST_CASE("embeddings") {
  const FiniteField F16(2, 4), F4(2, 2), F8(2, 3);
  CHECK(embed(2, F16, F4.zero()) == F16.zero());
  CHECK(embed(2, F16, F4.one()) == F16.one());
  CHECK(element_degree(embed(2, F16, F4.generator())) == 2);
  CHECK_THROWS_AS(embed(2, F8, F4.generator()), DomainError);
  // Self-embedding is the identity.
  CHECK(embed(4, F16, F16.generator()) == F16.generator());
  // Into a non-canonical copy: still a root of the canonical modulus.
  const FiniteField classic(FpPolynomial::from_ints(PrimeField(2), {1, 1, 0, 0, 1}));
  const auto iso = canonical_embedding(4, classic);
  CHECK(minimal_polynomial(iso.generator_image()) == F16.modulus());
  CHECK(iso.image_indices().size() == 16);

  SUBCASE("canonical embedding is a ring homomorphism preserving minimal polynomials") {
    const FiniteField F64(2, 6);
    for (unsigned m : {1U, 2U, 3U, 6U}) {
      const FiniteField src(2, m);
      const auto e = canonical_embedding(m, F64);
      for (const auto& a : src.elements()) {
        CHECK(minimal_polynomial(e(a)) == minimal_polynomial(a));
        for (const auto& b : src.elements()) {
          if (a.index() * 7 % 5 != b.index() % 5) continue;  // thin the pair set
          CHECK(e(a + b) == e(a) + e(b));
          CHECK(e(a * b) == e(a) * e(b));
        }
      }
    }
  }
}

TEST_CASE("enumerate_homs") {
  const FiniteField F16(2, 4);
  CHECK(enumerate_homs(1, F16).size() == 1);
  const auto two = enumerate_homs(2, F16);
  REQUIRE(two.size() == 2);
  CHECK(two[0].image_indices() == two[1].image_indices());
  CHECK_FALSE(two[0].generator_image() == two[1].generator_image());
  const auto four = enumerate_homs(4, F16);
  REQUIRE(four.size() == 4);
  // The four automorphisms are the Frobenius powers.
  for (unsigned k = 0; k < 4; ++k) {
    for (std::uint64_t i = 0; i < 16; ++i) {
      CHECK(four[k](F16.element(i)) == frobenius_power(F16.element(i), k));
    }
  }
  CHECK_THROWS_AS(enumerate_homs(3, F16), DomainError);

  SUBCASE("normality and separability mirrors for n <= 12") {
    for (unsigned n : {1U, 2U, 3U, 4U, 6U, 8U, 12U}) {
      const FiniteField F(2, n);
      for (auto d : divisors(n)) {
        const auto homs = enumerate_homs(static_cast<unsigned>(d), F);
        CHECK(homs.size() == d);
        std::set<std::uint64_t> images;
        const auto reference = embedded_subfield(static_cast<unsigned>(d), F);
        for (const auto& h : homs) {
          images.insert(h.generator_image().index());
          CHECK(h.image_indices() == reference);
        }
        CHECK(images.size() == d);
      }
    }
  }
}

TEST_CASE("element JSON") {
  const FiniteField F(3, 2);
  const auto a = F.element(7);
  const auto j = to_json(a);
  CHECK(j.dump() == R"({"coords":[1,2],"field":{"n":2,"p":3}})");
  CHECK(element_from_json(j) == a);

  const FiniteField classic(FpPolynomial::from_ints(PrimeField(2), {1, 1, 0, 0, 1}));
  const auto b = classic.element(9);
  const auto jb = to_json(b);
  CHECK(jb.at("field").at("modulus") == Json::array({1, 1, 0, 0, 1}));
  CHECK(element_from_json(jb) == b);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"coords":[1],"field":{"n":2,"p":3}})")), DomainError);
}
