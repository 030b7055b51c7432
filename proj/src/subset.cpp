#include "krull/subset.hpp"

#include <bit>
#include <sstream>

#include "krull/errors.hpp"

namespace krull {

Subset::Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

Subset Subset::of(std::size_t universe, const std::vector<std::size_t>& indices) {
  Subset s(universe);
  for (auto i : indices) {
    if (i >= universe) throw DomainError("subset index " + std::to_string(i) + " outside carrier");
    s.insert(i);
  }
  return s;
}

Subset Subset::singleton(std::size_t universe, std::size_t i) { return of(universe, {i}); }

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw CapacityError("from_mask: carrier larger than 64");
  Subset s(universe);
  if (universe > 0) s.words_[0] = universe == 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Subset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

Subset Subset::complement() const {
  Subset s = full(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
  return s;
}

Subset& Subset::operator|=(const Subset& rhs) {
  if (universe_ != rhs.universe_) throw DomainError("subset union across carriers");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& rhs) {
  if (universe_ != rhs.universe_) throw DomainError("subset intersection across carriers");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

namespace {

// Any member of `s` at bit position > i.
bool has_member_above(const std::vector<std::uint64_t>& words, std::size_t i) {
  const std::size_t w = i >> 6;
  if (w >= words.size()) return false;
  const unsigned bit = i & 63;
  if (bit < 63 && (words[w] >> (bit + 1)) != 0) return true;
  for (std::size_t k = w + 1; k < words.size(); ++k) {
    if (words[k] != 0) return true;
  }
  return false;
}

}  // namespace

// Lexicographic on sorted index lists without materializing them: at the
// lowest differing bit i, the set holding i is smaller unless the other set
// has nothing beyond i (and is then a proper prefix).
std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  const std::size_t words = std::max(a.words_.size(), b.words_.size());
  for (std::size_t k = 0; k < words; ++k) {
    const std::uint64_t wa = k < a.words_.size() ? a.words_[k] : 0;
    const std::uint64_t wb = k < b.words_.size() ? b.words_[k] : 0;
    const std::uint64_t diff = wa ^ wb;
    if (diff == 0) continue;
    const std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    const bool a_has = (wa >> (i & 63)) & 1U;
    const Subset& other = a_has ? b : a;
    const bool holder_smaller = has_member_above(other.words_, i);
    if (a_has) return holder_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
    return holder_smaller ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.universe_ <=> b.universe_;
}

std::size_t Subset::hash() const {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h << 6) + (h >> 2));
  return h;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first_item = true;
  for (auto i : indices()) {
    if (!first_item) os << ",";
    first_item = false;
    os << i;
  }
  os << "}";
  return os.str();
}

void for_each_subset(std::size_t universe, const std::function<void(const Subset&)>& fn) {
  if (universe > 24) throw CapacityError("subset enumeration limited to carriers of size <= 24");
  const std::uint64_t total = std::uint64_t{1} << universe;
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(Subset::from_mask(universe, mask));
}

}  // namespace krull
