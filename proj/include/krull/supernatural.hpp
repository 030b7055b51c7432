#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace krull {

/// Exponent in N u {infinity}.
struct Exponent {
  static constexpr std::uint32_t kInfinite = UINT32_MAX;

  std::uint32_t value = 0;

  static constexpr Exponent infinite() { return Exponent{kInfinite}; }
  constexpr bool is_infinite() const { return value == kInfinite; }

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Steinitz number prod p^(e_p), e_p in N u {infinity}, with finite support.
/// Closed subgroups of Z-hat are exactly s Z-hat for such s; this is the
/// classification used for the finite-field tower.
class SupernaturalNumber {
 public:
  SupernaturalNumber() = default;
  /// Ordinary positive integer.
  static SupernaturalNumber natural(std::uint64_t n);
  /// Throws DomainError if p is not prime.
  SupernaturalNumber& set(std::uint64_t p, Exponent e);

  Exponent exponent(std::uint64_t p) const;
  /// Primes with nonzero exponent.
  const std::map<std::uint64_t, Exponent>& support() const { return exps_; }

  /// Pointwise <=.
  bool divides(const SupernaturalNumber& other) const;
  /// True iff the natural number n divides this number.
  bool is_divisible_by(std::uint64_t n) const;

  friend SupernaturalNumber gcd(const SupernaturalNumber& a, const SupernaturalNumber& b);
  friend SupernaturalNumber lcm(const SupernaturalNumber& a, const SupernaturalNumber& b);
  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

  /// "1", "2^3*3", "2^inf*5".
  std::string to_string() const;

 private:
  std::map<std::uint64_t, Exponent> exps_;
};

}  // namespace krull
