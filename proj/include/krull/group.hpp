#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krull/subset.hpp"

namespace krull {

/// Finite group given by its full operation table over element indices
/// 0..size-1. Group laws are validated at construction.
///
/// Each element also carries an integer label: the residue for Z/n and
/// (Z/n)^x, the permutation rank for symmetric groups.
class FiniteGroup {
 public:
  /// Throws DomainError if the table is not a group.
  FiniteGroup(std::string name, std::size_t size, std::vector<std::uint32_t> table,
              std::vector<std::int64_t> labels = {});

  /// Z/n under addition; element i is the residue i.
  static FiniteGroup cyclic(std::uint64_t n);
  /// (Z/n)^x under multiplication; labels are the unit residues, ascending.
  static FiniteGroup units(std::uint64_t n);
  /// Symmetric group on k points, composition (f*g)(x) = f(g(x)); element 0
  /// is the identity, remaining permutations in lexicographic order.
  static FiniteGroup symmetric(unsigned k);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::int64_t label(std::uint32_t a) const { return labels_[a]; }
  /// Index of the element with the given label; throws if absent.
  std::uint32_t index_of(std::int64_t label) const;
  bool is_abelian() const;

  Subset product(const Subset& a, const Subset& b) const;
  Subset inverse(const Subset& a) const;
  /// g * S (left translate).
  Subset translate(std::uint32_t g, const Subset& s) const;
  /// x S x^-1.
  Subset conjugate(std::uint32_t x, const Subset& s) const;
  bool is_subgroup(const Subset& s) const;
  /// Smallest subgroup containing s.
  Subset generated_subgroup(const Subset& s) const;

  std::vector<std::int64_t> labels_of(const Subset& s) const;

 private:
  std::string name_;
  std::size_t size_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::int64_t> labels_;
  std::uint32_t identity_ = 0;
};

/// All subgroups by testing every subset containing the identity. Used as
/// the oracle for small groups; requires size <= 16.
std::vector<Subset> subgroups_exhaustive(const FiniteGroup& g);

/// All subgroups by closing {e} under joins with cyclic subgroups. Sorted.
std::vector<Subset> subgroups_by_generation(const FiniteGroup& g);

/// Subgroups of Z/n as d Z/n, one per divisor d (ascending d).
std::vector<Subset> cyclic_subgroups(const FiniteGroup& zmod_n);

}  // namespace krull
