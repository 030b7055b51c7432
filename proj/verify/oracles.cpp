#include "oracles.hpp"

#include <algorithm>

namespace krull::oracle {

std::vector<FpPolynomial> monic_polynomials(const PrimeField& F, int degree) {
  const std::uint64_t p = F.characteristic();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  std::vector<FpPolynomial> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = 1;
    std::uint64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    out.emplace_back(F, std::move(c));
  }
  return out;
}

std::vector<FpPolynomial> factor_by_trial_division(FpPolynomial f) {
  std::vector<FpPolynomial> factors;
  f = f.monic();
  for (int deg = 1; deg <= f.degree();) {
    bool divided = false;
    for (const auto& g : monic_polynomials(f.field(), deg)) {
      const auto [q, r] = f.divmod(g);
      if (r.is_zero()) {
        // Smallest-degree divisors found first are irreducible.
        factors.push_back(g);
        f = q;
        divided = true;
        break;
      }
    }
    if (!divided) ++deg;
  }
  return factors;
}

bool separable_by_factorization(const FpPolynomial& f) {
  auto factors = factor_by_trial_division(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (derivative(factors[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i] == factors[j]) return false;
    }
  }
  return true;
}

QPolynomial cyclotomic_moebius(std::uint64_t n) {
  RationalField Q;
  QPolynomial num = QPolynomial::constant(Q, Q.one());
  QPolynomial den = QPolynomial::constant(Q, Q.one());
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint64_t m = n / d;
    int mu = 1;
    for (std::uint64_t q = 2; q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    const QPolynomial factor = QPolynomial::monomial(Q, Q.one(), d) - QPolynomial::constant(Q, Q.one());
    if (mu == 1) num = num * factor;
    if (mu == -1) den = den * factor;
  }
  return num / den;
}

bool is_filter_by_enumeration(const SetFamily& family) {
  const std::size_t n = family.carrier();
  if (!family.contains(Subset::full(n))) return false;
  bool ok = true;
  for (const auto& s : family.members()) {
    for_each_subset(n, [&](const Subset& t) {
      if (s.is_subset_of(t) && !family.contains(t)) ok = false;
    });
    for (const auto& t : family.members()) {
      if (!family.contains(s & t)) ok = false;
    }
  }
  return ok;
}

SetFamily pushforward_by_enumeration(const std::vector<std::size_t>& map, std::size_t target_size,
                                     const SetFamily& family) {
  std::vector<Subset> members;
  for_each_subset(target_size, [&](const Subset& s) {
    Subset pre(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (s.contains(map[i])) pre.insert(i);
    }
    if (family.contains(pre)) members.push_back(s);
  });
  return SetFamily(target_size, std::move(members));
}

std::uint64_t least_common_level(std::uint64_t d1, std::uint64_t d2, std::uint64_t ambient) {
  for (std::uint64_t e = 1; e <= ambient; ++e) {
    if (ambient % e == 0 && e % d1 == 0 && e % d2 == 0) return e;
  }
  return 0;
}

std::vector<std::uint64_t> crt_scan(std::uint64_t r1, std::uint64_t d1, std::uint64_t r2, std::uint64_t d2,
                                    std::uint64_t modulus) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < modulus; ++x) {
    if (x % d1 == r1 && x % d2 == r2) out.push_back(x);
  }
  return out;
}

std::vector<Subset> coset_unions(std::size_t n) {
  std::vector<Subset> out;
  for_each_subset(n, [&](const Subset& s) {
    for (auto x : s.indices()) {
      bool some = false;
      for (std::size_t d = 1; d <= n && !some; ++d) {
        if (n % d != 0) continue;
        bool inside = true;
        for (std::size_t k = 0; k < n && inside; k += d) inside = s.contains((x + k) % n);
        some = inside;
      }
      if (!some) return;
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool continuous_by_rectangles(const FiniteGroup& g, const FiniteTopology& t) {
  const std::size_t n = g.size();
  for (const auto& w : t.opens) {
    std::vector<char> pre(n * n, 0), covered(n * n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) pre[a * n + b] = w.contains(g.op(a, b));
    }
    for (const auto& u : t.opens) {
      for (const auto& v : t.opens) {
        bool inside = true;
        for (auto a : u.indices()) {
          for (auto b : v.indices()) inside = inside && pre[a * n + b];
        }
        if (!inside) continue;
        for (auto a : u.indices()) {
          for (auto b : v.indices()) covered[a * n + b] = 1;
        }
      }
    }
    if (pre != covered) return false;
    Subset inv(n);
    for (auto a : w.indices()) inv.insert(g.inverse(static_cast<std::uint32_t>(a)));
    if (!std::binary_search(t.opens.begin(), t.opens.end(), inv)) return false;
  }
  return true;
}

}  // namespace krull::oracle
