#include "krull/polynomial.hpp"

#include "krull/number_theory.hpp"

namespace krull {

QPolynomial cyclotomic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic: n must be positive");
  RationalField Q;
  QPolynomial result = QPolynomial::monomial(Q, Q.one(), n) - QPolynomial::constant(Q, Q.one());
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    result = result / cyclotomic(d);
  }
  return result;
}

namespace {

void check_irreducibility_bounds(const FpPolynomial& f) {
  if (f.degree() < 1) throw DomainError("is_irreducible_fp: polynomial must be nonconstant");
  if (!f.is_monic()) throw DomainError("is_irreducible_fp: polynomial must be monic");
  if (f.degree() > 16 || f.field().characteristic() > 97) {
    throw CapacityError("is_irreducible_fp: supports degree <= 16 and p <= 97");
  }
}

}  // namespace

bool is_irreducible_fp(const FpPolynomial& f) {
  check_irreducibility_bounds(f);
  const PrimeField& F = f.field();
  const std::uint64_t p = F.characteristic();
  const FpPolynomial x = FpPolynomial::x(F);
  FpPolynomial frob = x % f;  // X^(p^i) mod f
  for (int i = 1; i <= f.degree() / 2; ++i) {
    frob = pow_mod(frob, p, f);
    if (poly_gcd(frob - x, f).degree() > 0) return false;
  }
  return true;
}

bool is_irreducible_fp_trial(const FpPolynomial& f) {
  check_irreducibility_bounds(f);
  const PrimeField& F = f.field();
  const std::uint64_t p = F.characteristic();
  for (int deg = 1; deg <= f.degree() / 2; ++deg) {
    const std::uint64_t count = checked_pow(p, deg);
    std::vector<std::uint64_t> c(deg + 1, 0);
    c[deg] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (int i = 0; i < deg; ++i) {
        c[i] = rest % p;
        rest /= p;
      }
      if (FpPolynomial(F, c).divides(f)) return false;
    }
  }
  return true;
}

}  // namespace krull
