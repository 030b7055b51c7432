#include "krull/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "krull/errors.hpp"
#include "krull/number_theory.hpp"

namespace krull {

FiniteGroup::FiniteGroup(std::string name, std::size_t size, std::vector<std::uint32_t> table,
                         std::vector<std::int64_t> labels)
    : name_(std::move(name)), size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (size_ == 0) throw DomainError("group must be nonempty");
  if (table_.size() != size_ * size_) throw DomainError("operation table has wrong size");
  for (auto v : table_) {
    if (v >= size_) throw DomainError("operation table entry out of range");
  }
  if (labels_.empty()) {
    labels_.resize(size_);
    std::iota(labels_.begin(), labels_.end(), 0);
  }
  if (labels_.size() != size_) throw DomainError("label count must equal group size");

  bool found = false;
  for (std::uint32_t e = 0; e < size_ && !found; ++e) {
    bool is_identity = true;
    for (std::uint32_t a = 0; a < size_ && is_identity; ++a) {
      is_identity = op(e, a) == a && op(a, e) == a;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError(name_ + ": no identity element");

  inverse_.assign(size_, 0);
  for (std::uint32_t a = 0; a < size_; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < size_ && !has_inverse; ++b) {
      if (op(a, b) == identity_ && op(b, a) == identity_) {
        inverse_[a] = b;
        has_inverse = true;
      }
    }
    if (!has_inverse) throw DomainError(name_ + ": element " + std::to_string(a) + " has no inverse");
  }

  for (std::uint32_t a = 0; a < size_; ++a) {
    for (std::uint32_t b = 0; b < size_; ++b) {
      for (std::uint32_t c = 0; c < size_; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) {
          throw DomainError(name_ + ": associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("Z/n requires n >= 1");
  if (n > 400) throw CapacityError("Z/n table limited to n <= 400");
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  }
  return FiniteGroup("zmod:" + std::to_string(n), n, std::move(table));
}

FiniteGroup FiniteGroup::units(std::uint64_t n) {
  if (n == 0) throw DomainError("(Z/n)^x requires n >= 1");
  if (n > 400) throw CapacityError("(Z/n)^x table limited to n <= 400");
  const auto residues = units_mod(n);
  const std::size_t m = residues.size();
  std::vector<std::int64_t> labels(residues.begin(), residues.end());
  std::vector<std::uint32_t> position(n, 0);
  for (std::size_t i = 0; i < m; ++i) position[residues[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = position[residues[a] * residues[b] % n];
  }
  return FiniteGroup("units:" + std::to_string(n), m, std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(unsigned k) {
  if (k == 0 || k > 5) throw CapacityError("symmetric groups supported for 1 <= k <= 5");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0U);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<unsigned> c(k);
      for (unsigned x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      const auto it = std::find(perms.begin(), perms.end(), c);
      table[a * m + b] = static_cast<std::uint32_t>(it - perms.begin());
    }
  }
  return FiniteGroup("sym:" + std::to_string(k), m, std::move(table));
}

std::uint32_t FiniteGroup::index_of(std::int64_t label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError(name_ + " has no element labelled " + std::to_string(label));
  return static_cast<std::uint32_t>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < size_; ++a) {
    for (std::uint32_t b = a + 1; b < size_; ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

Subset FiniteGroup::product(const Subset& a, const Subset& b) const {
  Subset out(size_);
  const auto bi = b.indices();
  for (auto x : a.indices()) {
    for (auto y : bi) out.insert(op(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
  }
  return out;
}

Subset FiniteGroup::inverse(const Subset& a) const {
  Subset out(size_);
  for (auto x : a.indices()) out.insert(inverse_[x]);
  return out;
}

Subset FiniteGroup::translate(std::uint32_t g, const Subset& s) const {
  Subset out(size_);
  for (auto x : s.indices()) out.insert(op(g, static_cast<std::uint32_t>(x)));
  return out;
}

Subset FiniteGroup::conjugate(std::uint32_t x, const Subset& s) const {
  Subset out(size_);
  const std::uint32_t xinv = inverse_[x];
  for (auto v : s.indices()) out.insert(op(op(x, static_cast<std::uint32_t>(v)), xinv));
  return out;
}

bool FiniteGroup::is_subgroup(const Subset& s) const {
  if (!s.contains(identity_)) return false;
  const auto idx = s.indices();
  for (auto a : idx) {
    if (!s.contains(inverse_[a])) return false;
    for (auto b : idx) {
      if (!s.contains(op(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)))) return false;
    }
  }
  return true;
}

Subset FiniteGroup::generated_subgroup(const Subset& s) const {
  Subset closure = s;
  closure.insert(identity_);
  for (;;) {
    Subset next = closure | product(closure, closure);
    if (next == closure) return closure;
    closure = std::move(next);
  }
}

std::vector<std::int64_t> FiniteGroup::labels_of(const Subset& s) const {
  std::vector<std::int64_t> out;
  for (auto i : s.indices()) out.push_back(labels_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> subgroups_exhaustive(const FiniteGroup& g) {
  if (g.size() > 16) throw CapacityError("exhaustive subgroup enumeration limited to order <= 16");
  std::vector<Subset> out;
  for_each_subset(g.size(), [&](const Subset& s) {
    if (g.is_subgroup(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> subgroups_by_generation(const FiniteGroup& g) {
  std::vector<Subset> cyclic;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    cyclic.push_back(g.generated_subgroup(Subset::singleton(g.size(), x)));
  }
  std::set<Subset> found{Subset::singleton(g.size(), g.identity())};
  std::vector<Subset> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (c.is_subset_of(h)) continue;
        Subset joined = g.generated_subgroup(h | c);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<Subset> cyclic_subgroups(const FiniteGroup& zmod_n) {
  const std::size_t n = zmod_n.size();
  std::vector<Subset> out;
  for (auto d : divisors(n)) {
    Subset s(n);
    for (std::uint64_t k = 0; k < n; k += d) s.insert(zmod_n.index_of(static_cast<std::int64_t>(k)));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace krull
