#include "krull/fields.hpp"

#include "krull/number_theory.hpp"

namespace krull {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("F_p requires p prime, got " + std::to_string(p));
  if (p > (1ULL << 31)) throw CapacityError("prime too large for word arithmetic");
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  return static_cast<value_type>(((v % m) + m) % m);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in " + name());
  return pow_mod(a, p_ - 2, p_);
}

}  // namespace krull
