#include "krull/number_theory.hpp"

#include <numeric>

#include "krull/errors.hpp"

namespace krull {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw DomainError("valuation: bad arguments");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      throw CapacityError("integer power exceeds limit");
    }
    result *= base;
  }
  return result;
}

std::vector<std::uint64_t> units_mod(std::uint64_t n) {
  if (n == 0) throw DomainError("units_mod: n must be positive");
  if (n == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

}  // namespace krull
