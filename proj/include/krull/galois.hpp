#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "krull/execution.hpp"
#include "krull/finite_field.hpp"
#include "krull/group.hpp"
#include "krull/linear_algebra.hpp"

namespace krull {

/// Subgroup of a finite Galois group, as the sorted list of its element
/// labels (Frobenius exponents k, or unit residues k).
struct SubgroupDesc {
  std::string parent;
  std::vector<std::int64_t> elements;

  friend bool operator==(const SubgroupDesc&, const SubgroupDesc&) = default;
};

/// Intermediate field F_{p^d} of F_{p^n}/F_p.
struct FiniteSubfield {
  unsigned degree;

  friend bool operator==(const FiniteSubfield&, const FiniteSubfield&) = default;
};

/// Intermediate field of Q(zeta_n)/Q, given by a spanning set of vectors in
/// the power basis 1, zeta, ..., zeta^(phi(n)-1). Equality means equal spans.
struct CyclotomicSubfield {
  std::vector<RationalVector> span;

  std::size_t degree() const { return rank(span); }
};

/// Gal(F_{p^n}/F_p) = Z/n, where k acts as Frobenius^k.
class FrobeniusGroup {
 public:
  FrobeniusGroup(std::uint64_t p, unsigned n);

  const FiniteField& field() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  unsigned level() const { return field_.degree(); }
  std::string name() const;

  /// Index of Frobenius^k applied to the element with index `a`, evaluated
  /// through the precomputed Frobenius permutation of the field.
  std::uint64_t act(std::uint64_t k, std::uint64_t a) const;

 private:
  FiniteField field_;
  FiniteGroup group_;
  std::vector<std::uint64_t> frobenius_table_;
};

/// Gal(Q(zeta_n)/Q) = (Z/n)^x, where k sends zeta to zeta^k. Elements of
/// Q(zeta_n) are coordinate vectors in the power basis of Q[X]/(Phi_n).
class CyclotomicGroup {
 public:
  explicit CyclotomicGroup(std::uint64_t n);

  std::uint64_t conductor() const { return n_; }
  std::size_t field_degree() const { return phi_; }
  const FiniteGroup& group() const { return group_; }
  const QPolynomial& defining_polynomial() const { return phi_n_; }
  std::string name() const;

  /// zeta^j reduced to the power basis.
  const RationalVector& power(std::uint64_t j) const { return powers_[j % n_]; }
  /// sigma_k(v) for a unit residue k.
  RationalVector act(std::uint64_t k, const RationalVector& v) const;

 private:
  std::uint64_t n_;
  std::size_t phi_;
  FiniteGroup group_;
  QPolynomial phi_n_;
  std::vector<RationalVector> powers_;
};

// Fixing subgroups and fixed fields. Every result is computed by applying
// the group action pointwise.

SubgroupDesc fixing_subgroup(const FrobeniusGroup& g, const FiniteSubfield& e,
                             Execution exec = Execution::parallel);
FiniteSubfield fixed_field(const FrobeniusGroup& g, const SubgroupDesc& h,
                           Execution exec = Execution::parallel);

SubgroupDesc fixing_subgroup(const CyclotomicGroup& g, const CyclotomicSubfield& e);
/// Span of the orbit sums sum_{k in H} zeta^(k m), 0 <= m < phi(n).
CyclotomicSubfield fixed_field(const CyclotomicGroup& g, const SubgroupDesc& h);

/// Rank of the orbit-sum span for H <= (Z/n)^x; n <= 24.
std::size_t cyclo_fixed_field_degree(std::uint64_t n, const SubgroupDesc& h);

/// lcm(d1, d2), confirmed as the least divisor of `ambient` admitting both
/// F_{p^d1} and F_{p^d2}. Throws DomainError if either degree does not divide
/// `ambient`. With ambient = 0 the lcm itself is used as the ambient level.
std::uint64_t compositum_level(std::uint64_t d1, std::uint64_t d2, std::uint64_t ambient = 0);

struct CorrespondencePair {
  SubgroupDesc subgroup;
  std::variant<FiniteSubfield, CyclotomicSubfield> field;
  std::size_t field_degree = 0;
  bool roundtrip_ok = false;
};

struct CorrespondenceReport {
  std::string group;
  std::vector<CorrespondencePair> pairs;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive Fundamental Theorem check; |G| <= 48.
CorrespondenceReport verify_galois_correspondence(const FrobeniusGroup& g,
                                                  Execution exec = Execution::parallel);
CorrespondenceReport verify_galois_correspondence(const CyclotomicGroup& g,
                                                  Execution exec = Execution::parallel);

/// Subgroups of the Galois group as descriptors, using per-divisor
/// generation for cyclic groups and join-closure otherwise. For order <= 16
/// the exhaustive subset enumeration is run as a cross-check and any
/// disagreement throws.
std::vector<SubgroupDesc> all_subgroups(const FiniteGroup& g);

}  // namespace krull
