#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "krull/execution.hpp"
#include "krull/polynomial.hpp"

namespace krull {

class FiniteFieldElement;

/// Largest field that exhaustive scans (roots, subfield enumeration) accept.
inline constexpr std::uint64_t kFieldScanLimit = 1ULL << 16;

/// F_{p^n} realized as F_p[x]/(modulus), where modulus is the
/// lexicographically least monic irreducible of degree n (coefficients
/// compared from the constant term upward). Two descriptors with the same
/// (p, n) therefore denote the identical field.
///
/// Doubles as the coefficient-field policy for Polynomial<FiniteField>.
class FiniteField {
 public:
  using value_type = FiniteFieldElement;

  FiniteField(std::uint64_t p, unsigned n);
  /// F_p[x]/(modulus) for a caller-chosen monic irreducible modulus. Throws
  /// DomainError if the modulus is not monic irreducible over F_p.
  explicit FiniteField(FpPolynomial modulus);

  std::uint64_t characteristic() const { return data_->p; }
  unsigned degree() const { return data_->n; }
  const FpPolynomial& modulus() const { return data_->modulus; }
  const PrimeField& prime_field() const { return data_->base; }
  /// True iff the modulus is the canonical one for (p, n).
  bool canonical() const { return data_->canonical; }

  /// p^n; throws CapacityError if it does not fit in 64 bits.
  std::uint64_t order() const;

  value_type zero() const;
  value_type one() const;
  value_type from_int(std::int64_t v) const;
  /// Class of x in F_p[x]/(modulus).
  value_type generator() const;

  /// Elements are indexed by their coordinate vector read as a base-p number
  /// with coordinate 0 least significant. Index order is the lexicographic
  /// order used to choose designated roots.
  value_type element(std::uint64_t index) const;
  value_type element(std::vector<std::uint64_t> coords) const;
  /// All elements in index order; |F| must be within kFieldScanLimit.
  std::vector<value_type> elements() const;

  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type inv(const value_type& a) const;
  bool is_zero(const value_type& a) const;
  bool equal(const value_type& a, const value_type& b) const;
  std::string format(const value_type& a) const;
  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.data_ == b.data_ ||
           (a.data_->p == b.data_->p && a.data_->n == b.data_->n && a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    std::uint64_t p;
    unsigned n;
    PrimeField base;
    FpPolynomial modulus;
    bool canonical;
  };

  std::shared_ptr<const Data> data_;
};

class FiniteFieldElement {
 public:
  FiniteFieldElement(FiniteField field, FpPolynomial residue);

  const FiniteField& field() const { return field_; }
  /// Coordinates in the power basis 1, x, ..., x^(n-1); always length n.
  std::vector<std::uint64_t> coords() const;
  std::uint64_t index() const;
  const FpPolynomial& residue() const { return residue_; }

  bool is_zero() const { return residue_.is_zero(); }
  /// True iff the element lies in the prime subfield F_p.
  bool in_prime_field() const { return residue_.degree() <= 0; }

  friend FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b);
  FiniteFieldElement operator-() const;
  FiniteFieldElement pow(std::uint64_t e) const;
  FiniteFieldElement inverse() const;

  /// Structural equality; elements of different fields compare unequal.
  friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b) {
    return a.field_ == b.field_ && a.residue_ == b.residue_;
  }

  std::string to_string() const;

 private:
  void require_same_field(const FiniteFieldElement& other) const;

  FiniteField field_;
  FpPolynomial residue_;
};

/// Lexicographically least monic irreducible of degree n over F_p.
FpPolynomial least_irreducible(std::uint64_t p, unsigned n);

/// a -> a^p.
FiniteFieldElement frobenius(const FiniteFieldElement& a);
/// a -> a^(p^k), k taken mod the field degree.
FiniteFieldElement frobenius_power(const FiniteFieldElement& a, std::uint64_t k);
/// a, a^p, a^(p^2), ... up to the first repetition.
std::vector<FiniteFieldElement> frobenius_orbit(const FiniteFieldElement& a);
/// Size of the Frobenius orbit = [F_p(a) : F_p].
unsigned element_degree(const FiniteFieldElement& a);

/// Product of (X - b) over the Frobenius orbit of a, pushed down to F_p.
FpPolynomial minimal_polynomial(const FiniteFieldElement& a);

/// All a in F with f(a) = 0, in index order.
std::vector<FiniteFieldElement> roots_in_field(const FpPolynomial& f, const FiniteField& field,
                                               Execution exec = Execution::parallel);

/// F_p-algebra homomorphism F_{p^m} -> F_{p^n} determined by the image of the
/// generator of F_{p^m}.
class Embedding {
 public:
  Embedding(FiniteField source, FiniteField target, FiniteFieldElement generator_image);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  const FiniteFieldElement& generator_image() const { return image_; }

  FiniteFieldElement operator()(const FiniteFieldElement& a) const;

  /// Indices of the image of every element of the source, sorted.
  std::vector<std::uint64_t> image_indices() const;

 private:
  FiniteField source_;
  FiniteField target_;
  FiniteFieldElement image_;
};

/// Least-index root of the canonical degree-m modulus inside `target`. For
/// m = n and a canonical target this is the generator of the target itself,
/// so the self-embedding is the identity.
FiniteFieldElement designated_root(unsigned m, const FiniteField& target);

/// The canonical embedding F_{p^m} -> target. Throws DomainError if m does
/// not divide the target degree.
Embedding canonical_embedding(unsigned m, const FiniteField& target);

FiniteFieldElement embed(unsigned src_degree, const FiniteField& target,
                         const FiniteFieldElement& a);

/// The d Frobenius twists of the canonical embedding F_{p^d} -> F.
std::vector<Embedding> enumerate_homs(unsigned d, const FiniteField& field);

/// Index set of the canonically embedded copy of F_{p^d} inside `field`.
std::vector<std::uint64_t> embedded_subfield(unsigned d, const FiniteField& field);

}  // namespace krull
