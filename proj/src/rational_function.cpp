#include "krull/rational_function.hpp"

namespace krull {

RationalFunction::RationalFunction(FpPolynomial numerator, FpPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  num_.require_same_field(den_);
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(FpPolynomial numerator)
    : num_(numerator), den_(FpPolynomial::constant(numerator.field(), numerator.field().one())) {}

RationalFunction RationalFunction::t(std::uint64_t p) {
  return RationalFunction(FpPolynomial::x(PrimeField(p)));
}

void RationalFunction::normalize() {
  const PrimeField& F = num_.field();
  if (num_.is_zero()) {
    den_ = FpPolynomial::constant(F, F.one());
    return;
  }
  FpPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const auto lead_inv = F.inv(den_.leading());
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string("T");
  return "(" + num_.to_string("T") + ")/(" + den_.to_string("T") + ")";
}

FpTPolynomial purely_inseparable_example(std::uint64_t p) {
  FunctionField K(p);
  std::vector<RationalFunction> c(p + 1, K.zero());
  c[0] = -RationalFunction::t(p);
  c[p] = K.one();
  return FpTPolynomial(K, std::move(c));
}

}  // namespace krull
