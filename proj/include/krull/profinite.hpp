#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/execution.hpp"
#include "krull/supernatural.hpp"

namespace krull {

/// Every infinite object is materialized at an explicit truncation bound N:
/// the levels are the divisors of N ordered by divisibility.
inline constexpr std::uint64_t kDefaultBound = 360;

/// Z-hat = lim Z/d, or Z-hat^x = lim (Z/d)^x (the cyclotomic tower).
enum class Tower { additive, units };

std::string to_string(Tower t);

/// Finite inverse system over the divisors of `bound`. transitions[{d, e}]
/// for e | d is the reduction table Z/d -> Z/e, indexed by residue.
struct InverseSystem {
  std::uint64_t bound = 1;
  Tower tower = Tower::additive;
  std::vector<std::uint64_t> levels;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> transitions;

  /// The reduction system at the given bound (<= 10^4).
  static InverseSystem reduction(std::uint64_t bound, Tower tower = Tower::additive);

  /// Elements of the level-d group as residues.
  std::vector<std::uint64_t> elements(std::uint64_t d) const;
  std::uint64_t op(std::uint64_t d, std::uint64_t a, std::uint64_t b) const;
};

/// Outcome of a check that either passes or names a witness tuple.
struct Witnessed {
  bool ok = true;
  std::string reason;
  std::vector<std::uint64_t> witness;
};

/// Transitions are homomorphisms and compose: t(d->e) o t(n->d) = t(n->e)
/// for all e | d | n | bound. Witness: the offending chain.
Witnessed check_inverse_system(const InverseSystem& sys, Execution exec = Execution::parallel);

/// Level -> residue assignment, possibly partial.
struct CompatibleFamily {
  std::uint64_t bound = 1;
  std::map<std::uint64_t, std::uint64_t> residues;

  /// The image of the integer x at every level d | bound.
  static CompatibleFamily of_element(std::uint64_t bound, std::uint64_t x);

  friend bool operator==(const CompatibleFamily&, const CompatibleFamily&) = default;
};

/// r_d mod e = r_e whenever e | d are both assigned. Witness: (d, e).
Witnessed check_compatible(const CompatibleFamily& fam);

/// Subgroup m Z/n of Z/n.
struct LevelSubgroup {
  std::uint64_t level;
  std::uint64_t step;

  bool contains(std::uint64_t r) const { return r % step == 0; }
  std::vector<std::uint64_t> elements() const;
  bool is_subset_of(const LevelSubgroup& other) const;
  friend bool operator==(const LevelSubgroup&, const LevelSubgroup&) = default;
};

/// Image of the closed subgroup s Z-hat in Z/n: m Z/n with
/// m = prod_{p | n} p^min(v_p(n), e_p(s)). n <= 10^4.
LevelSubgroup closed_subgroup_image(const SupernaturalNumber& s, std::uint64_t n);

/// Per-prime exponent recovered at a truncation; at_cap marks that the
/// exponent reached v_p(N), beyond which nothing is observable.
struct TruncatedExponent {
  std::uint32_t value = 0;
  bool at_cap = false;

  friend bool operator==(const TruncatedExponent&, const TruncatedExponent&) = default;
};
using TruncatedSupernatural = std::map<std::uint64_t, TruncatedExponent>;

/// s truncated to the primes and exponents of N.
TruncatedSupernatural truncate(const SupernaturalNumber& s, std::uint64_t bound);
/// Pointwise <= of truncations.
bool truncated_divides(const TruncatedSupernatural& a, const TruncatedSupernatural& b);

struct KrullRoundtrip {
  std::uint64_t bound = 1;
  /// {d | N : d divides s}: the subfield levels of the fixed field.
  std::vector<std::uint64_t> levels;
  TruncatedSupernatural expected;
  TruncatedSupernatural recovered;
  /// recovered == expected.
  bool ok = false;
  /// levels -> supernatural -> levels reproduces the level set.
  bool dual_ok = false;
};

/// Supernatural number -> fixed-field levels -> supernatural number, and the
/// dual level-set round trip. Throws DomainError if s involves a prime not
/// dividing N.
KrullRoundtrip krull_roundtrip(const SupernaturalNumber& s, std::uint64_t bound);

/// Per-prime supremum of valuations of a set of levels, capped at v_p(N).
TruncatedSupernatural supernatural_of_levels(const std::vector<std::uint64_t>& levels, std::uint64_t bound);
/// {d | N : d divides the truncated supernatural number}.
std::vector<std::uint64_t> levels_of(const TruncatedSupernatural& t, std::uint64_t bound);

struct LatticeResult {
  SupernaturalNumber gcd;
  SupernaturalNumber lcm;
  bool a_divides_b = false;
  bool b_divides_a = false;
};

LatticeResult supernatural_lattice(const SupernaturalNumber& a, const SupernaturalNumber& b);

/// r + d Z, truncation of sigma Gal(L/F_{p^d}).
struct OpenCoset {
  std::uint64_t level;
  std::uint64_t residue;

  bool contains(std::uint64_t x) const { return x % level == residue; }
  friend bool operator==(const OpenCoset&, const OpenCoset&) = default;
};

/// Chinese-remainder intersection at level lcm(d1, d2) <= 10^4; nullopt when
/// r1 != r2 mod gcd(d1, d2). The answer is confirmed by a membership scan.
std::optional<OpenCoset> coset_intersection(const OpenCoset& c1, const OpenCoset& c2);

struct Separation {
  OpenCoset first;
  OpenCoset second;
};

/// Disjoint clopen cosets at the least level where a and b differ. Throws
/// DomainError when a and b agree on every shared level.
Separation hausdorff_separate(const CompatibleFamily& a, const CompatibleFamily& b);

/// Per-level generators g_d of the pushforward ultrafilters.
struct UltrafilterSystem {
  std::uint64_t bound = 1;
  Tower tower = Tower::additive;
  std::map<std::uint64_t, std::uint64_t> generators;
};

/// Checks coherence of the generators, solves for sigma at level N and
/// returns sigma at every level d | N. Also asserts that the preimage of
/// {sigma_d} under Z/N -> Z/d is the coset sigma_N Gal(L/F_d). Throws
/// DomainError with the offending level pair on incoherent input, or when
/// the given levels do not determine sigma at level N.
CompatibleFamily glue_ultrafilter(const UltrafilterSystem& u);

struct CompactnessReport {
  std::uint64_t bound = 1;
  Tower tower = Tower::additive;
  std::size_t cases = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// For every ultrafilter on the level-N group (each principal at a point x):
/// push forward to every level, glue the generators, and check that every
/// neighbourhood coset of the glued sigma belongs to the ultrafilter and that
/// sigma is the family of x. N <= 360.
CompactnessReport compactness_check(std::uint64_t bound, Tower tower = Tower::additive,
                                    Execution exec = Execution::parallel);

}  // namespace krull
