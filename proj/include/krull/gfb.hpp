#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krull/execution.hpp"
#include "krull/filters.hpp"
#include "krull/group.hpp"

namespace krull {

/// Filter basis on a group satisfying the four compatibility axioms:
///   1. 1 in U for every U;
///   2. for every U some V with V V subset of U;
///   3. for every U some V with V subset of U^-1;
///   4. for every x and U some V with x V x^-1 subset of U.
/// Only obtainable through check_group_filter_basis or standard_gfb.
class GroupFilterBasis {
 public:
  const FiniteGroup& group() const { return group_; }
  const SetFamily& basis() const { return basis_; }

 private:
  GroupFilterBasis(FiniteGroup group, SetFamily basis) : group_(std::move(group)), basis_(std::move(basis)) {}
  friend std::variant<GroupFilterBasis, Violation> check_group_filter_basis(const FiniteGroup&, const SetFamily&);

  FiniteGroup group_;
  SetFamily basis_;
};

/// Validates the filter-basis axioms, then axioms 1-4 in order. The
/// violation names the axiom and carries U (and x for axiom 4).
std::variant<GroupFilterBasis, Violation> check_group_filter_basis(const FiniteGroup& g, const SetFamily& family);

/// Topology induced by the bundle g -> filter generated by g . basis.
FiniteTopology induced_group_topology(const GroupFilterBasis& b, Execution exec = Execution::parallel);

struct ContinuityReport {
  bool ok = true;
  /// "multiplication" or "inversion" when !ok.
  std::string map;
  /// Open set whose preimage is not open.
  std::optional<Subset> open;
  /// A point of the preimage with no open neighbourhood inside it; for
  /// multiplication a pair (a, b), for inversion (a, a).
  std::optional<std::pair<std::size_t, std::size_t>> point;
};

/// Continuity of multiplication (G x G with the product topology) and of
/// inversion. A subset of G x G is open iff it is a union of rectangles
/// U x V with U, V open, i.e. iff it contains the rectangle M(a) x M(b) of
/// minimal open neighbourhoods around each of its points. On failure the
/// reported open is the least one (lexicographically) whose preimage is not
/// open. |G| <= 24.
ContinuityReport verify_topological_group(const FiniteGroup& g, const FiniteTopology& t,
                                          Execution exec = Execution::parallel);

/// Z/n with basis {d Z/n : d | n}, the truncation of the fixing subgroups
/// Gal(L/F_{p^d}) at level n.
GroupFilterBasis standard_gfb(std::uint64_t n);

/// Every union of left cosets g U, U in `subgroups`, built by union closure.
/// Carrier <= kExplicitCarrierLimit.
FiniteTopology coset_union_topology(const FiniteGroup& g, const std::vector<Subset>& sets);

}  // namespace krull
