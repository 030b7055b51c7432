#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krull/errors.hpp"
#include "krull/fields.hpp"

namespace krull {

/// Dense univariate polynomial over a coefficient field, constant term first.
/// Trailing zero coefficients are always stripped, so the zero polynomial is
/// the empty sequence and equality is structural.
template <class Field>
class Polynomial {
 public:
  using value_type = typename Field::value_type;

  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<value_type> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<value_type> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
  }

  static Polynomial constant(const Field& field, value_type c) {
    return Polynomial(field, std::vector<value_type>{std::move(c)});
  }

  /// c * X^k
  static Polynomial monomial(const Field& field, value_type c, std::size_t k) {
    std::vector<value_type> v(k + 1, field.zero());
    v[k] = std::move(c);
    return Polynomial(field, std::move(v));
  }

  static Polynomial x(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const { return field_; }
  const std::vector<value_type>& coefficients() const { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && field_.equal(coeffs_.back(), field_.one()); }

  value_type coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_.zero();
  }
  const value_type& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Polynomial operator-() const {
    std::vector<value_type> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(field_.neg(c));
    return Polynomial(field_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<value_type> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.field_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] = a.field_.add(v[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return Polynomial(a.field_, std::move(v));
  }

  Polynomial scaled(const value_type& c) const {
    std::vector<value_type> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(field_.mul(x, c));
    return Polynomial(field_, std::move(v));
  }

  /// Euclidean division; returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    require_same_field(divisor);
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {Polynomial(field_), rem};
    std::vector<value_type> quot(rem.degree() - dd + 1, field_.zero());
    const value_type lead_inv = field_.inv(divisor.leading());
    std::vector<value_type>& r = rem.coeffs_;
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
      if (field_.is_zero(r[k])) continue;
      const value_type q = field_.mul(r[k], lead_inv);
      quot[k - dd] = q;
      for (int j = 0; j <= dd; ++j) {
        r[k - dd + j] = field_.sub(r[k - dd + j], field_.mul(q, divisor.coeffs_[j]));
      }
    }
    rem.trim();
    return {Polynomial(field_, std::move(quot)), std::move(rem)};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).second;
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).first;
  }

  bool divides(const Polynomial& other) const { return (other % *this).is_zero(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  value_type evaluate(const value_type& at) const {
    value_type acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = field_.add(field_.mul(acc, at), *it);
    }
    return acc;
  }

  /// "c0 + c1*X + c2*X^2" in ascending degree, zero terms omitted; "0" for
  /// the zero polynomial.
  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << field_.format(coeffs_[i]);
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!a.field_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    }
    return true;
  }

  void require_same_field(const Polynomial& other) const {
    if (!(field_ == other.field_)) {
      throw DomainError("polynomials over different coefficient fields: " + field_.name() +
                        " vs " + other.field_.name());
    }
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Field field_;
  std::vector<value_type> coeffs_;
};

/// Monic greatest common divisor (zero only when both inputs are zero).
template <class Field>
Polynomial<Field> poly_gcd(Polynomial<Field> f, Polynomial<Field> g) {
  f.require_same_field(g);
  while (!g.is_zero()) {
    Polynomial<Field> r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

/// Formal derivative. In characteristic p the terms whose exponent is a
/// multiple of p vanish.
template <class Field>
Polynomial<Field> derivative(const Polynomial<Field>& f) {
  const Field& F = f.field();
  if (f.degree() < 1) return Polynomial<Field>(F);
  std::vector<typename Field::value_type> v;
  v.reserve(f.degree());
  for (int i = 1; i <= f.degree(); ++i) {
    v.push_back(F.mul(F.from_int(i), f.coefficients()[i]));
  }
  return Polynomial<Field>(F, std::move(v));
}

/// gcd(f, f') = 1. Throws DomainError for constant f.
template <class Field>
bool is_separable(const Polynomial<Field>& f) {
  if (f.is_constant()) throw DomainError("is_separable: polynomial must be nonconstant");
  return poly_gcd(f, derivative(f)).degree() == 0;
}

/// Square-and-multiply exponentiation modulo `modulus`.
template <class Field>
Polynomial<Field> pow_mod(Polynomial<Field> base, std::uint64_t exp,
                          const Polynomial<Field>& modulus) {
  Polynomial<Field> result = Polynomial<Field>::constant(base.field(), base.field().one()) % modulus;
  base = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exp >>= 1;
  }
  return result;
}

using FpPolynomial = Polynomial<PrimeField>;
using QPolynomial = Polynomial<RationalField>;

/// The n-th cyclotomic polynomial over Q, computed by dividing X^n - 1 by
/// the cyclotomic polynomials of the proper divisors of n.
QPolynomial cyclotomic(std::uint64_t n);

/// Irreducibility over F_p for monic f with deg f <= 16 and p <= 97.
/// f is irreducible iff gcd(X^(p^i) - X, f) = 1 for 1 <= i <= deg(f)/2.
bool is_irreducible_fp(const FpPolynomial& f);

/// Reference version of is_irreducible_fp: trial division by every monic
/// polynomial of degree 1..deg(f)/2. Exponential; kept for cross-checks.
bool is_irreducible_fp_trial(const FpPolynomial& f);

}  // namespace krull
