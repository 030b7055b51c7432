#pragma once

#include <cstdint>
#include <string>

#include "krull/errors.hpp"
#include "krull/rational.hpp"

namespace krull {

/// Coefficient-field policies consumed by Polynomial<Field>. A policy is a
/// small value object describing the field; elements are plain values of
/// `value_type` and all arithmetic goes through the policy.

/// The prime field F_p, elements stored as residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(std::int64_t v) const;

  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const { return (p_ - a) % p_; }
  value_type mul(value_type a, value_type b) const { return a * b % p_; }
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string format(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// The rationals.
class RationalField {
 public:
  using value_type = Rational;

  std::uint64_t characteristic() const { return 0; }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t v) const { return Rational(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace krull
