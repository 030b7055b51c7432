#pragma once

#include <string>

#include "krull/polynomial.hpp"

namespace krull {

/// Element of F_p(T): numerator / denominator with a monic denominator and
/// gcd(numerator, denominator) = 1.
class RationalFunction {
 public:
  RationalFunction(FpPolynomial numerator, FpPolynomial denominator);
  explicit RationalFunction(FpPolynomial numerator);

  /// The transcendental T itself.
  static RationalFunction t(std::uint64_t p);

  const FpPolynomial& numerator() const { return num_; }
  const FpPolynomial& denominator() const { return den_; }
  std::uint64_t characteristic() const { return num_.field().characteristic(); }

  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  FpPolynomial num_;
  FpPolynomial den_;
};

/// Coefficient-field policy for F_p(T).
class FunctionField {
 public:
  using value_type = RationalFunction;

  explicit FunctionField(std::uint64_t p) : base_(p) {}

  std::uint64_t characteristic() const { return base_.characteristic(); }
  const PrimeField& base() const { return base_; }

  value_type zero() const { return RationalFunction(FpPolynomial(base_)); }
  value_type one() const { return from_int(1); }
  value_type from_int(std::int64_t v) const {
    return RationalFunction(FpPolynomial::constant(base_, base_.from_int(v)));
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return "(" + a.to_string() + ")"; }
  std::string name() const { return "F_" + std::to_string(characteristic()) + "(T)"; }

  friend bool operator==(const FunctionField&, const FunctionField&) = default;

 private:
  PrimeField base_;
};

using FpTPolynomial = Polynomial<FunctionField>;

/// X^p - T over F_p(T), the standard inseparable polynomial.
FpTPolynomial purely_inseparable_example(std::uint64_t p);

}  // namespace krull
