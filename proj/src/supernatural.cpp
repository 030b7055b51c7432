#include "krull/supernatural.hpp"

#include <algorithm>

#include "krull/errors.hpp"
#include "krull/number_theory.hpp"

namespace krull {

SupernaturalNumber SupernaturalNumber::natural(std::uint64_t n) {
  if (n == 0) throw DomainError("supernatural numbers are positive");
  SupernaturalNumber s;
  for (const auto& [p, e] : factorize(n)) s.set(p, Exponent{e});
  return s;
}

SupernaturalNumber& SupernaturalNumber::set(std::uint64_t p, Exponent e) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (e.value == 0) {
    exps_.erase(p);
  } else {
    exps_[p] = e;
  }
  return *this;
}

Exponent SupernaturalNumber::exponent(std::uint64_t p) const {
  const auto it = exps_.find(p);
  return it == exps_.end() ? Exponent{} : it->second;
}

bool SupernaturalNumber::divides(const SupernaturalNumber& other) const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [&](const auto& pe) { return pe.second <= other.exponent(pe.first); });
}

bool SupernaturalNumber::is_divisible_by(std::uint64_t n) const {
  return natural(n).divides(*this);
}

SupernaturalNumber gcd(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  SupernaturalNumber out;
  for (const auto& [p, e] : a.exps_) out.set(p, std::min(e, b.exponent(p)));
  return out;
}

SupernaturalNumber lcm(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  SupernaturalNumber out = a;
  for (const auto& [p, e] : b.exps_) out.set(p, std::max(e, a.exponent(p)));
  return out;
}

std::string SupernaturalNumber::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : exps_) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e.is_infinite()) {
      out += "^inf";
    } else if (e.value > 1) {
      out += "^" + std::to_string(e.value);
    }
  }
  return out;
}

}  // namespace krull
