#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace krull {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt n) : num_(std::move(n)) {}
  Rational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace krull
