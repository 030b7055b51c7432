#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace krull {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Divisors of n in increasing order. n must be positive.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factorization as prime -> exponent.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// Exponent of the prime p in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function.
int moebius(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Checked integer power; throws CapacityError on overflow past `limit`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t limit = UINT64_MAX);

/// Residues in [0, n) coprime to n. For n = 1 this is {0}.
std::vector<std::uint64_t> units_mod(std::uint64_t n);

}  // namespace krull
