#include "krull/finite_field.hpp"

#include <algorithm>
#include <limits>

#include "krull/number_theory.hpp"

namespace krull {

FpPolynomial least_irreducible(std::uint64_t p, unsigned n) {
  if (n == 0) throw DomainError("field degree must be positive");
  PrimeField F(p);
  // Enumerate monic degree-n polynomials so that c0 is the most significant
  // digit: index order is then lexicographic from the constant term upward.
  const std::uint64_t count = checked_pow(p, n);
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      c[i] = rest % p;
      rest /= p;
    }
    FpPolynomial f(F, c);
    if (is_irreducible_fp(f)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

FiniteField::FiniteField(std::uint64_t p, unsigned n)
    : data_(std::make_shared<const Data>(Data{p, n, PrimeField(p), least_irreducible(p, n), true})) {}

FiniteField::FiniteField(FpPolynomial modulus) {
  if (modulus.degree() < 1 || !modulus.is_monic() || !is_irreducible_fp(modulus)) {
    throw DomainError("modulus must be monic irreducible: " + modulus.to_string());
  }
  const auto p = modulus.field().characteristic();
  const auto n = static_cast<unsigned>(modulus.degree());
  const bool canonical = modulus == least_irreducible(p, n);
  data_ = std::make_shared<const Data>(Data{p, n, modulus.field(), std::move(modulus), canonical});
}

std::uint64_t FiniteField::order() const { return checked_pow(data_->p, data_->n); }

FiniteFieldElement FiniteField::zero() const { return {*this, FpPolynomial(data_->base)}; }

FiniteFieldElement FiniteField::one() const { return from_int(1); }

FiniteFieldElement FiniteField::from_int(std::int64_t v) const {
  return {*this, FpPolynomial::constant(data_->base, data_->base.from_int(v))};
}

FiniteFieldElement FiniteField::generator() const {
  return {*this, FpPolynomial::x(data_->base)};
}

FiniteFieldElement FiniteField::element(std::uint64_t index) const {
  std::vector<std::uint64_t> coords(data_->n);
  for (auto& c : coords) {
    c = index % data_->p;
    index /= data_->p;
  }
  if (index != 0) throw DomainError("element index out of range for " + name());
  return element(std::move(coords));
}

FiniteFieldElement FiniteField::element(std::vector<std::uint64_t> coords) const {
  if (coords.size() != data_->n) throw DomainError("coordinate vector length must equal degree");
  for (auto c : coords) {
    if (c >= data_->p) throw DomainError("coordinate out of range");
  }
  return {*this, FpPolynomial(data_->base, std::move(coords))};
}

std::vector<FiniteFieldElement> FiniteField::elements() const {
  const std::uint64_t q = order();
  if (q > kFieldScanLimit) throw CapacityError(name() + " exceeds the scan bound 2^16");
  std::vector<FiniteFieldElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(element(i));
  return out;
}

FiniteFieldElement FiniteField::add(const value_type& a, const value_type& b) const { return a + b; }
FiniteFieldElement FiniteField::sub(const value_type& a, const value_type& b) const { return a - b; }
FiniteFieldElement FiniteField::neg(const value_type& a) const { return -a; }
FiniteFieldElement FiniteField::mul(const value_type& a, const value_type& b) const { return a * b; }
FiniteFieldElement FiniteField::inv(const value_type& a) const { return a.inverse(); }
bool FiniteField::is_zero(const value_type& a) const { return a.is_zero(); }
bool FiniteField::equal(const value_type& a, const value_type& b) const { return a == b; }
std::string FiniteField::format(const value_type& a) const { return "[" + a.to_string() + "]"; }

std::string FiniteField::name() const {
  std::string s = "F_" + std::to_string(data_->p) + "^" + std::to_string(data_->n);
  if (!data_->canonical) s += "[" + data_->modulus.to_string("x") + "]";
  return s;
}

FiniteFieldElement::FiniteFieldElement(FiniteField field, FpPolynomial residue)
    : field_(std::move(field)), residue_(std::move(residue)) {
  if (!(residue_.field() == field_.prime_field())) {
    throw DomainError("residue characteristic does not match " + field_.name());
  }
  if (residue_.degree() >= static_cast<int>(field_.degree())) residue_ = residue_ % field_.modulus();
}

std::vector<std::uint64_t> FiniteFieldElement::coords() const {
  std::vector<std::uint64_t> c(field_.degree(), 0);
  for (std::size_t i = 0; i < residue_.coefficients().size(); ++i) c[i] = residue_.coefficients()[i];
  return c;
}

std::uint64_t FiniteFieldElement::index() const {
  std::uint64_t idx = 0;
  const auto& c = residue_.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) idx = idx * field_.characteristic() + *it;
  return idx;
}

void FiniteFieldElement::require_same_field(const FiniteFieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw DomainError("finite field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  a.require_same_field(b);
  return {a.field_, a.residue_ + b.residue_};
}

FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  a.require_same_field(b);
  return {a.field_, a.residue_ - b.residue_};
}

FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  a.require_same_field(b);
  return {a.field_, (a.residue_ * b.residue_) % a.field_.modulus()};
}

FiniteFieldElement FiniteFieldElement::operator-() const { return {field_, -residue_}; }

FiniteFieldElement FiniteFieldElement::pow(std::uint64_t e) const {
  return {field_, krull::pow_mod(residue_, e, field_.modulus())};
}

FiniteFieldElement FiniteFieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in " + field_.name());
  // a^(q-2) = a^-1 in a field of order q.
  const std::uint64_t q = field_.order();
  return pow(q - 2);
}

std::string FiniteFieldElement::to_string() const { return residue_.to_string("x"); }

FiniteFieldElement frobenius(const FiniteFieldElement& a) {
  return a.pow(a.field().characteristic());
}

FiniteFieldElement frobenius_power(const FiniteFieldElement& a, std::uint64_t k) {
  FiniteFieldElement out = a;
  for (std::uint64_t i = 0; i < k % a.field().degree(); ++i) out = frobenius(out);
  return out;
}

std::vector<FiniteFieldElement> frobenius_orbit(const FiniteFieldElement& a) {
  std::vector<FiniteFieldElement> orbit{a};
  for (FiniteFieldElement b = frobenius(a); !(b == a); b = frobenius(b)) orbit.push_back(b);
  return orbit;
}

unsigned element_degree(const FiniteFieldElement& a) {
  return static_cast<unsigned>(frobenius_orbit(a).size());
}

FpPolynomial minimal_polynomial(const FiniteFieldElement& a) {
  const FiniteField& F = a.field();
  using Poly = Polynomial<FiniteField>;
  Poly product = Poly::constant(F, F.one());
  for (const auto& b : frobenius_orbit(a)) product = product * Poly(F, {-b, F.one()});
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : product.coefficients()) {
    if (!c.in_prime_field()) {
      throw DomainError("orbit product has a coefficient outside F_p");  // never for a true orbit
    }
    coeffs.push_back(c.is_zero() ? 0 : c.residue().coefficients()[0]);
  }
  return FpPolynomial(F.prime_field(), std::move(coeffs));
}

std::vector<FiniteFieldElement> roots_in_field(const FpPolynomial& f, const FiniteField& field,
                                               Execution exec) {
  if (!(f.field() == field.prime_field())) throw DomainError("polynomial over the wrong prime field");
  const std::uint64_t q = field.order();
  if (q > kFieldScanLimit) throw CapacityError(field.name() + " exceeds the scan bound 2^16");
  if (f.is_zero()) throw DomainError("roots_in_field: zero polynomial");

  std::vector<FiniteFieldElement> lifted;
  for (auto c : f.coefficients()) lifted.push_back(field.from_int(static_cast<std::int64_t>(c)));
  const Polynomial<FiniteField> g(field, std::move(lifted));

  std::vector<char> is_root(q, 0);
  const auto n = static_cast<std::int64_t>(q);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) is_root[i] = g.evaluate(field.element(i)).is_zero();
  } else {
    for (std::int64_t i = 0; i < n; ++i) is_root[i] = g.evaluate(field.element(i)).is_zero();
  }

  std::vector<FiniteFieldElement> roots;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (is_root[i]) roots.push_back(field.element(i));
  }
  return roots;
}

Embedding::Embedding(FiniteField source, FiniteField target, FiniteFieldElement generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {
  if (!(image_.field() == target_)) throw DomainError("generator image must lie in the target");
  if (source_.characteristic() != target_.characteristic()) {
    throw DomainError("embedding between fields of different characteristic");
  }
}

FiniteFieldElement Embedding::operator()(const FiniteFieldElement& a) const {
  if (!(a.field() == source_)) throw DomainError("embedding applied to an element of " + a.field().name());
  FiniteFieldElement acc = target_.zero();
  const auto& c = a.residue().coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * image_ + target_.from_int(static_cast<std::int64_t>(*it));
  }
  return acc;
}

std::vector<std::uint64_t> Embedding::image_indices() const {
  std::vector<std::uint64_t> out;
  for (const auto& a : source_.elements()) out.push_back((*this)(a).index());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteFieldElement designated_root(unsigned m, const FiniteField& target) {
  if (m == 0 || target.degree() % m != 0) {
    throw DomainError("no intermediate field of degree " + std::to_string(m) + " in " + target.name());
  }
  if (m == target.degree() && target.canonical()) return target.generator();
  const FiniteField source(target.characteristic(), m);
  auto roots = roots_in_field(source.modulus(), target);
  if (roots.empty()) throw DomainError("modulus has no root in target");  // impossible when m | n
  return roots.front();
}

Embedding canonical_embedding(unsigned m, const FiniteField& target) {
  FiniteFieldElement root = designated_root(m, target);
  return Embedding(FiniteField(target.characteristic(), m), target, std::move(root));
}

FiniteFieldElement embed(unsigned src_degree, const FiniteField& target, const FiniteFieldElement& a) {
  if (a.field().degree() != src_degree) {
    throw DomainError("element does not belong to a field of degree " + std::to_string(src_degree));
  }
  return canonical_embedding(src_degree, target)(a);
}

std::vector<Embedding> enumerate_homs(unsigned d, const FiniteField& field) {
  const Embedding base = canonical_embedding(d, field);
  std::vector<Embedding> homs;
  FiniteFieldElement image = base.generator_image();
  for (unsigned k = 0; k < d; ++k) {
    homs.emplace_back(base.source(), field, image);
    image = frobenius(image);
  }
  return homs;
}

std::vector<std::uint64_t> embedded_subfield(unsigned d, const FiniteField& field) {
  return canonical_embedding(d, field).image_indices();
}

}  // namespace krull
