#include "krull/rational.hpp"

#include "krull/errors.hpp"

namespace krull {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace krull
