#pragma once

// Brute-force ground truth used by the unit and acceptance suites. Nothing
// here calls the routine it is meant to check.

#include <cstdint>
#include <vector>

#include "krull/filters.hpp"
#include "krull/group.hpp"
#include "krull/polynomial.hpp"

namespace krull::oracle {

/// Every monic polynomial of the given degree over F_p, in index order.
std::vector<FpPolynomial> monic_polynomials(const PrimeField& F, int degree);

/// Irreducible factors with multiplicity, by repeated trial division with
/// monic candidates of increasing degree.
std::vector<FpPolynomial> factor_by_trial_division(FpPolynomial f);

/// Separable iff every irreducible factor occurs once and has a nonzero
/// derivative.
bool separable_by_factorization(const FpPolynomial& f);

/// prod_{d | n} (X^d - 1)^mu(n/d), evaluated as a quotient of products.
QPolynomial cyclotomic_moebius(std::uint64_t n);

/// Filter axioms checked literally over every subset of the carrier.
bool is_filter_by_enumeration(const SetFamily& family);

/// {S : preimage(S) in family}, enumerating every subset of the target.
SetFamily pushforward_by_enumeration(const std::vector<std::size_t>& map, std::size_t target_size,
                                     const SetFamily& family);

/// Least e | ambient divisible by both d1 and d2, scanning 1..ambient.
std::uint64_t least_common_level(std::uint64_t d1, std::uint64_t d2, std::uint64_t ambient);

/// All x in [0, modulus) with x = r1 mod d1 and x = r2 mod d2.
std::vector<std::uint64_t> crt_scan(std::uint64_t r1, std::uint64_t d1, std::uint64_t r2, std::uint64_t d2,
                                    std::uint64_t modulus);

/// Subsets S of Z/n such that every x in S has some coset x + dZ/n (d | n)
/// inside S, by scanning all 2^n subsets.
std::vector<Subset> coset_unions(std::size_t n);

/// Continuity of multiplication and inversion with the product topology
/// taken literally: the preimage of each open must equal the union of all
/// open rectangles U x V it contains. Quadratic in the number of opens.
bool continuous_by_rectangles(const FiniteGroup& g, const FiniteTopology& t);

}  // namespace krull::oracle
