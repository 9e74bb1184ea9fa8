#pragma once

// Buchberger's algorithm specialized to binomials with root-of-unity
// coefficients, and the ideal operations built on it.

#include <cstdint>
#include <optional>
#include <vector>

#include "bindecomp/intlat.hpp"
#include "bindecomp/ring.hpp"

namespace bindecomp {

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
ReducedGB reduced_gb(const std::vector<Binomial>& gens, const TermOrder& ord);

/// Complete reduction of b modulo G.  Nothing means b reduces to zero.
std::optional<Binomial> normal_form(const Binomial& b, const ReducedGB& G);

bool contains(const BinomialIdeal& I, const Binomial& b);
/// K contained in I.
bool contains(const BinomialIdeal& I, const BinomialIdeal& K);
bool same_ideal(const BinomialIdeal& I, const BinomialIdeal& K);

/// The ideal generated by the reduced degrevlex basis of I.
BinomialIdeal canonical(const BinomialIdeal& I);

/// I intersected with the subring in the variables outside `drop`.
BinomialIdeal eliminate(const BinomialIdeal& I, const std::vector<bool>& drop);

/// (I : m).
BinomialIdeal colon_monomial(const BinomialIdeal& I, const Monomial& m);
/// I intersected with the principal monomial ideal <m>.
BinomialIdeal intersect_with_monomial(const BinomialIdeal& I, const Monomial& m);

struct Saturation {
  BinomialIdeal ideal;
  /// Least e with (I : m^e) = (I : m^infinity).
  std::int64_t exponent = 0;
};

/// (I : m^infinity) together with the least stabilizing exponent.
Saturation saturate_by_monomial(const BinomialIdeal& I, const Monomial& m);

/// The intersection of two binomial ideals.  Throws InternalError when the
/// intersection is not a binomial ideal; intersect_poly in polynomial.hpp
/// handles the general case.
BinomialIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& K);

/// Monomials outside the lead term ideal of the degrevlex basis, restricted
/// to the variables in `vars` (all variables when empty), in increasing
/// degree.  Throws DimensionError if some variable of `vars` has no pure
/// power among the leads.
std::vector<Monomial> standard_monomials(const BinomialIdeal& I, const std::vector<bool>& vars = {});

/// I_{rho,J}: the lattice ideal of rho in the regular variables of `cell`.
BinomialIdeal lattice_ideal_of_character(const PartialCharacter& rho, const CellStructure& cell, const RingSpec& ring);

/// Recover the character of a lattice ideal in the regular variables of
/// `cell`.  Throws InternalError if the basis holds a monomial, involves a
/// nilpotent variable, or carries inconsistent coefficients.
PartialCharacter character_of_lattice_ideal(const BinomialIdeal& I, const CellStructure& cell);

/// Largest coefficient order among the basis elements, reduced to the
/// conductor of the cyclotomic field they generate.
std::int64_t cyclotomic_order(const BinomialIdeal& I);

}  // namespace bindecomp
