#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "krull/execution.hpp"
#include "krull/subset.hpp"

namespace krull {

/// Largest carrier on which families are materialized member by member.
inline constexpr std::size_t kExplicitCarrierLimit = 20;

/// Named axiom failure with a witness, minimal in lexicographic subset order.
struct Violation {
  std::string axiom;
  std::vector<Subset> witness;
  /// Extra witness points (e.g. the x of a conjugation failure).
  std::vector<std::size_t> points;

  std::string to_string() const;
};

/// Explicit collection of subsets of {0..carrier-1}; members are sorted and
/// deduplicated on construction.
class SetFamily {
 public:
  SetFamily(std::size_t carrier, std::vector<Subset> members);
  static SetFamily from_indices(std::size_t carrier, const std::vector<std::vector<std::size_t>>& members);

  std::size_t carrier() const { return carrier_; }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(const Subset& s) const;
  bool empty() const { return members_.empty(); }

 private:
  std::size_t carrier_;
  std::vector<Subset> members_;
};

/// Filter on a finite carrier. On a finite carrier every filter is the set of
/// supersets of its kernel (the intersection of all members), so the kernel
/// is the whole representation. An empty kernel is the improper filter.
class FiniteFilter {
 public:
  explicit FiniteFilter(Subset kernel) : kernel_(std::move(kernel)) {}

  static FiniteFilter principal(std::size_t carrier, std::size_t x);
  /// {carrier}.
  static FiniteFilter trivial(std::size_t carrier);

  std::size_t carrier() const { return kernel_.universe(); }
  const Subset& kernel() const { return kernel_; }
  bool contains(const Subset& s) const { return kernel_.is_subset_of(s); }
  bool is_proper() const { return !kernel_.empty(); }
  /// All members explicitly; carrier <= kExplicitCarrierLimit.
  SetFamily family() const;

  friend bool operator==(const FiniteFilter&, const FiniteFilter&) = default;

 private:
  Subset kernel_;
};

/// `a` contains every member of `b`.
bool is_finer(const FiniteFilter& a, const FiniteFilter& b);

/// Validates Universality, upward closure and intersection closure on an
/// explicit family. Returns the filter or the first violated axiom.
std::variant<FiniteFilter, Violation> check_filter_axioms(const SetFamily& family);

/// Filter-basis axioms (nonempty; any two members contain a third in their
/// intersection). Returns the violation with the least witness pair, if any.
std::optional<Violation> check_filter_basis(const SetFamily& basis);

/// {U : D subset of U for some D in basis}. Throws DomainError naming the
/// witness pair if the basis axioms fail.
FiniteFilter induced_filter(const SetFamily& basis);

/// A proper filter strictly finer than f, found by trying each one-point
/// refinement of the kernel in ascending order; nullopt if f is maximal.
std::optional<FiniteFilter> strictly_finer_proper_filter(const FiniteFilter& f);

/// Ultrafilter test by the definition: proper and not refinable.
bool is_ultrafilter(const FiniteFilter& f);

/// The point generating an ultrafilter. Throws DomainError if f contains the
/// empty set or admits a strictly finer proper filter.
std::size_t ultrafilter_generator(const FiniteFilter& f);

/// {S subset of target : map^-1(S) in f}. `map[i]` is the image of point i.
FiniteFilter pushforward(const std::vector<std::size_t>& map, std::size_t target_size,
                         const FiniteFilter& f);

/// Filter bundle: one filter per point of the carrier.
using FilterBundle = std::vector<FiniteFilter>;

/// Topology on a finite carrier given by its list of open sets (sorted).
struct FiniteTopology {
  std::size_t carrier = 0;
  std::vector<Subset> opens;

  bool is_open(const Subset& s) const;
  /// Intersection of all opens containing x.
  Subset minimal_open(std::size_t x) const;

  static FiniteTopology discrete(std::size_t carrier);
  static FiniteTopology indiscrete(std::size_t carrier);
};

/// Topology axioms by enumeration: empty set and carrier open, closure under
/// pairwise intersection and union.
std::optional<Violation> check_topology_axioms(const FiniteTopology& t,
                                               Execution exec = Execution::parallel);

/// {U : U in bundle(x) for all x in U}, by scanning every subset of the
/// carrier (carrier <= kExplicitCarrierLimit).
FiniteTopology induced_topology(const FilterBundle& bundle, Execution exec = Execution::parallel);

/// {N : x in U subset of N for some open U}.
FiniteFilter neighborhood_filter(const FiniteTopology& t, std::size_t x);

}  // namespace krull
