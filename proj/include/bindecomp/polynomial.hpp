#pragma once

// General polynomials over a cyclotomic field Q(zeta_d).  The binomial
// kernel covers every operation except intersections of two non-monomial
// ideals, whose results (and partial results) can have more than two terms;
// this engine covers those and the checks that depend on them.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bindecomp/ring.hpp"

namespace bindecomp {

/// Q(zeta) for zeta a primitive root of unity of even order d, elements
/// stored as coefficient vectors modulo the d-th cyclotomic polynomial.
class CyclotomicField {
 public:
  using Element = std::vector<mpq_class>;

  /// The smallest field of even order containing all the given roots.
  static std::shared_ptr<const CyclotomicField> containing(const std::vector<RootOfUnity>& roots);
  explicit CyclotomicField(std::int64_t order);

  std::int64_t order() const { return order_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  /// Integer coefficients of the cyclotomic polynomial, constant term first.
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  Element zero() const { return Element(degree()); }
  Element one() const;
  Element from_integer(long v) const;
  Element from_root(const RootOfUnity& r) const;
  /// Some root of unity equal to e, if any.
  std::optional<RootOfUnity> as_root(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  static bool is_zero(const Element& a);

 private:
  std::int64_t order_;
  std::vector<mpz_class> modulus_;
  std::vector<Element> powers_;  // zeta^k for k < order
};

/// Integer coefficients of the d-th cyclotomic polynomial, constant first.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t d);

struct PolyTerm {
  Monomial monomial;
  CyclotomicField::Element coeff;
};

/// Terms sorted by decreasing monomial under the owning order.
using Polynomial = std::vector<PolyTerm>;

/// An ideal over Q(zeta) represented by its reduced degrevlex basis.
struct PolyIdeal {
  RingSpec ring;
  std::shared_ptr<const CyclotomicField> field;
  std::vector<Polynomial> basis;

  bool is_unit() const { return basis.size() == 1 && basis.front().size() == 1 && basis.front().front().monomial.is_one(); }
};

/// Reduced, monic Groebner basis of `gens` under `ord`.
std::vector<Polynomial> poly_reduced_gb(std::vector<Polynomial> gens, const TermOrder& ord, const CyclotomicField& F);
Polynomial poly_normal_form(Polynomial p, const std::vector<Polynomial>& basis, const TermOrder& ord,
                            const CyclotomicField& F);

Polynomial to_polynomial(const Binomial& b, const TermOrder& ord, const CyclotomicField& F);
PolyIdeal to_poly_ideal(const BinomialIdeal& I, std::shared_ptr<const CyclotomicField> F);

/// Intersection of a non-empty list of binomial ideals in one ring.
PolyIdeal intersect_poly(const std::vector<BinomialIdeal>& ideals);

/// X contained in I.
bool poly_contained_in(const PolyIdeal& X, const BinomialIdeal& I);
bool poly_equals(const PolyIdeal& X, const BinomialIdeal& I);
/// The same ideal as a binomial ideal, when every basis element has at most
/// two terms with root-of-unity coefficients.
std::optional<BinomialIdeal> to_binomial_ideal(const PolyIdeal& X);

/// Coefficients outside Q are written in powers of a primitive root of
/// unity of the field order.
std::string format_polynomial(const Polynomial& p, const RingSpec& ring, const CyclotomicField* field = nullptr);

}  // namespace bindecomp
