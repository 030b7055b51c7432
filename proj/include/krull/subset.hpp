#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace krull {

/// Subset of a finite carrier {0, ..., universe-1}, stored as a bitset.
/// Ordering is lexicographic on the sorted index lists, which is the order
/// used for all reported witnesses.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe);

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, const std::vector<std::size_t>& indices);
  static Subset singleton(std::size_t universe, std::size_t i);
  /// Bits of `mask` select members; universe must be <= 64.
  static Subset from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;
  std::vector<std::size_t> indices() const;
  /// Least member; undefined on the empty set.
  std::size_t first() const;

  Subset complement() const;
  Subset& operator|=(const Subset& rhs);
  Subset& operator&=(const Subset& rhs);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

/// Calls `fn(subset)` for every subset of a carrier of the given size, in
/// mask order. Size must be <= 24.
void for_each_subset(std::size_t universe, const std::function<void(const Subset&)>& fn);

}  // namespace krull
