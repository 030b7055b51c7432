#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "krull/errors.hpp"
#include "krull/number_theory.hpp"
#include "krull/polynomial.hpp"
#include "krull/rational_function.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

FpPolynomial random_fp(std::mt19937_64& rng, const PrimeField& F, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> coef(0, F.characteristic() - 1);
  std::vector<std::uint64_t> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return FpPolynomial(F, c);
}

QPolynomial random_q(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RationalField Q;
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(BigInt(num(rng)), BigInt(den(rng)));
  return QPolynomial(Q, c);
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  Rational a{BigInt(6), BigInt(-4)};
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const int n1 = d(rng), n2 = d(rng);
    const int d1 = d(rng), d2 = d(rng);
    if (d1 == 0 || d2 == 0) continue;
    const Rational x{BigInt(n1), BigInt(d1)};
    const Rational y{BigInt(n2), BigInt(d2)};
    for (const Rational& r : {x + y, x - y, x * y}) {
      CHECK(r.denominator() > 0);
      CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()) == 1);
    }
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("polynomial ring axioms on random instances") {
  std::mt19937_64 rng(11);
  PrimeField F(7);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_fp(rng, F, 6), g = random_fp(rng, F, 6), h = random_fp(rng, F, 6);
    CHECK((f + g) == (g + f));
    CHECK((f * g) == (g * f));
    CHECK(((f * g) * h) == (f * (g * h)));
    CHECK((f * (g + h)) == (f * g + f * h));
    if (!g.is_zero()) {
      const auto [q, r] = f.divmod(g);
      CHECK((q * g + r) == f);
      CHECK(r.degree() < g.degree());
    }
  }
}

TEST_CASE("poly_gcd") {
  RationalField Q;
  SUBCASE("gcd(X^2 - 1, X - 1) = X - 1") {
    const auto f = QPolynomial::from_ints(Q, {-1, 0, 1});
    const auto g = QPolynomial::from_ints(Q, {-1, 1});
    const auto d = poly_gcd(f, g);
    CHECK(d == g);
    CHECK((f % d).is_zero());
    CHECK((g % d).is_zero());
  }
  SUBCASE("gcd with zero is the monic scaling") {
    const auto f = QPolynomial::from_ints(Q, {4, 0, 2});
    CHECK(poly_gcd(f, QPolynomial(Q)) == QPolynomial::from_ints(Q, {2, 0, 1}));
  }
  SUBCASE("Phi_5 is coprime to its derivative") {
    const auto phi5 = cyclotomic(5);
    CHECK(poly_gcd(phi5, derivative(phi5)) == QPolynomial::from_ints(Q, {1}));
  }
  SUBCASE("mismatched fields") {
    CHECK_THROWS_AS(poly_gcd(FpPolynomial::x(PrimeField(2)), FpPolynomial::x(PrimeField(3))), DomainError);
  }
  SUBCASE("divides both inputs, 1000 random pairs") {
    std::mt19937_64 rng(5);
    PrimeField F(5);
    for (int i = 0; i < 500; ++i) {
      const auto f = random_fp(rng, F, 8), g = random_fp(rng, F, 8);
      const auto d = poly_gcd(f, g);
      if (f.is_zero() && g.is_zero()) continue;
      CHECK((f % d).is_zero());
      CHECK((g % d).is_zero());
      // Any common divisor divides the gcd.
      const auto h = random_fp(rng, F, 3);
      if (!h.is_zero()) CHECK((poly_gcd(f * h, g * h) % h).is_zero());
    }
    for (int i = 0; i < 500; ++i) {
      const auto f = random_q(rng, 6), g = random_q(rng, 6);
      if (f.is_zero() && g.is_zero()) continue;
      const auto d = poly_gcd(f, g);
      CHECK((f % d).is_zero());
      CHECK((g % d).is_zero());
    }
  }
}

TEST_CASE("derivative") {
  RationalField Q;
  CHECK(derivative(QPolynomial::from_ints(Q, {-2, 0, 0, 1})) == QPolynomial::from_ints(Q, {0, 0, 3}));
  CHECK(derivative(QPolynomial::from_ints(Q, {5})).is_zero());
  for (std::uint64_t p : {2, 3, 5}) {
    CHECK(derivative(purely_inseparable_example(p)).is_zero());
  }
  // Characteristic 3: d/dX (X^3 + X^2) = 2X.
  PrimeField F3(3);
  CHECK(derivative(FpPolynomial::from_ints(F3, {0, 0, 1, 1})) == FpPolynomial::from_ints(F3, {0, 2}));
}

TEST_CASE("is_separable") {
  RationalField Q;
  CHECK(is_separable(QPolynomial::from_ints(Q, {-2, 0, 0, 1})));
  for (std::uint64_t p : {2, 3, 5}) CHECK_FALSE(is_separable(purely_inseparable_example(p)));
  PrimeField F2(2);
  const auto x2 = FpPolynomial::from_ints(F2, {0, 0, 1});
  CHECK_FALSE(is_separable(x2));
  CHECK(oracle::factor_by_trial_division(x2).size() == 2);
  CHECK_THROWS_AS(is_separable(FpPolynomial::from_ints(F2, {1})), DomainError);

  SUBCASE("agrees with exhaustive factorization over F_2 and F_3 up to degree 6") {
    for (std::uint64_t p : {2, 3}) {
      PrimeField F(p);
      for (int deg = 1; deg <= 6; ++deg) {
        for (const auto& f : oracle::monic_polynomials(F, deg)) {
          CHECK(is_separable(f) == oracle::separable_by_factorization(f));
        }
      }
    }
  }
}

TEST_CASE("rational functions over F_p") {
  PrimeField F(3);
  FunctionField K(3);
  const auto t = RationalFunction::t(3);
  const RationalFunction r(FpPolynomial::from_ints(F, {-1, 0, 1}), FpPolynomial::from_ints(F, {2, 2}));
  // (T^2 - 1) / (2T + 2) = (T - 1) / 2 = 2T - 2 = 2T + 1.
  CHECK(r.denominator() == FpPolynomial::from_ints(F, {1}));
  CHECK(r.numerator() == FpPolynomial::from_ints(F, {1, 2}));
  const auto sum = r + t.inverse();
  CHECK(sum.denominator().is_monic());
  CHECK(poly_gcd(sum.numerator(), sum.denominator()).degree() == 0);
  CHECK((t / t) == K.one());
  CHECK_THROWS_AS(K.zero().inverse(), DomainError);
  CHECK(purely_inseparable_example(3).to_string() == "(2*T) + (1)*X^3");
}

TEST_CASE("cyclotomic polynomials") {
  RationalField Q;
  CHECK(cyclotomic(1) == QPolynomial::from_ints(Q, {-1, 1}));
  CHECK(cyclotomic(5) == QPolynomial::from_ints(Q, {1, 1, 1, 1, 1}));
  CHECK(cyclotomic(12) == QPolynomial::from_ints(Q, {1, 0, -1, 0, 1}));
  CHECK(cyclotomic(12) == oracle::cyclotomic_moebius(12));
  CHECK(cyclotomic(5).to_string() == "1 + 1*X + 1*X^2 + 1*X^3 + 1*X^4");
  CHECK_THROWS_AS(cyclotomic(0), DomainError);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    QPolynomial product = QPolynomial::constant(Q, Q.one());
    for (auto d : divisors(n)) product = product * cyclotomic(d);
    CHECK(product == QPolynomial::monomial(Q, Q.one(), n) - QPolynomial::constant(Q, Q.one()));
    CHECK(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
    CHECK(cyclotomic(n) == oracle::cyclotomic_moebius(n));
  }
}

TEST_CASE("is_irreducible_fp") {
  PrimeField F2(2);
  CHECK(is_irreducible_fp(FpPolynomial::from_ints(F2, {1, 1, 0, 0, 1})));
  CHECK(is_irreducible_fp_trial(FpPolynomial::from_ints(F2, {1, 1, 0, 0, 1})));
  CHECK_FALSE(is_irreducible_fp(FpPolynomial::from_ints(F2, {1, 0, 1})));
  for (std::uint64_t p : {2, 3, 5, 97}) {
    PrimeField F(p);
    for (const auto& f : oracle::monic_polynomials(F, 1)) CHECK(is_irreducible_fp(f));
  }
  SUBCASE("fast test agrees with trial division") {
    for (std::uint64_t p : {2, 3}) {
      PrimeField F(p);
      for (int deg = 1; deg <= 6; ++deg) {
        for (const auto& f : oracle::monic_polynomials(F, deg)) CHECK(is_irreducible_fp(f) == is_irreducible_fp_trial(f));
      }
    }
    PrimeField F7(7);
    for (int deg = 1; deg <= 3; ++deg) {
      for (const auto& f : oracle::monic_polynomials(F7, deg)) CHECK(is_irreducible_fp(f) == is_irreducible_fp_trial(f));
    }
  }
  SUBCASE("bounds") {
    std::vector<std::uint64_t> big(18, 0);
    big[17] = 1;
    big[0] = 1;
    CHECK_THROWS_AS(is_irreducible_fp(FpPolynomial(F2, big)), CapacityError);
    CHECK_THROWS_AS(is_irreducible_fp(FpPolynomial::from_ints(PrimeField(101), {1, 1})), CapacityError);
    CHECK_THROWS_AS(is_irreducible_fp(FpPolynomial::from_ints(F2, {1})), DomainError);
    CHECK_THROWS_AS(PrimeField(4), DomainError);
  }
}
