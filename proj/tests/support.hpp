#pragma once

// Shared fixtures and brute-force oracles.  The oracles deliberately avoid
// the library routine they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bindecomp/cellular.hpp"
#include "bindecomp/decomp.hpp"
#include "bindecomp/groebner.hpp"
#include "bindecomp/intlat.hpp"
#include "bindecomp/io.hpp"
#include "bindecomp/polynomial.hpp"
#include "bindecomp/ring.hpp"
#include "bindecomp/witness.hpp"

namespace testing {

using namespace bindecomp;

inline RingSpec ring_of(const std::string& vars) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  std::string v;
  while (std::getline(ss, v, ',')) {
    v.erase(std::remove(v.begin(), v.end(), ' '), v.end());
    names.push_back(v);
  }
  return RingSpec(names);
}

inline BinomialIdeal ideal(const std::string& vars, const std::string& gens) {
  return parse_generators(ring_of(vars), gens).ideal();
}

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

inline std::string show(const BinomialIdeal& I) { return canonical_print(I); }

inline std::vector<std::string> show_all(const std::vector<BinomialIdeal>& ideals) {
  std::vector<std::string> out;
  for (const auto& I : ideals) out.push_back(canonical_print(I));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> show_primes(const std::vector<AssociatedPrime>& primes, const RingSpec& ring) {
  std::vector<BinomialIdeal> ideals;
  for (const auto& p : primes) ideals.push_back(p.ideal(ring));
  return show_all(ideals);
}

inline std::vector<std::string> show_components(const std::vector<PrimaryComponent>& comps) {
  std::vector<BinomialIdeal> ideals;
  for (const auto& c : comps) ideals.push_back(c.ideal);
  return show_all(ideals);
}

// ---------------------------------------------------------------------------
// Random inputs

inline std::string random_monomial_text(std::mt19937_64& rng, std::size_t n, int max_exp) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> e(0, max_exp);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    int k = e(rng);
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

/// A proper unital binomial ideal in at most three variables with exponents
/// at most 3 and at most 3 generators.
inline BinomialIdeal random_unital_ideal(std::mt19937_64& rng) {
  static const char* ring_names[] = {"x", "x, y", "x, y, z"};
  for (;;) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::string gens;
    for (std::size_t g = 0; g < k; ++g) {
      if (g) gens += ", ";
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      gens += random_monomial_text(rng, n, 3);
      if (r >= 0.15) gens += (r < 0.8 ? " - " : " + ") + random_monomial_text(rng, n, 3);
    }
    auto I = ideal(ring_names[n - 1], gens);
    if (!I.is_unit() && !I.is_zero()) return canonical(I);
  }
}

/// Cellular components of random unital ideals, optionally only those with
/// a nilpotent variable.
inline std::vector<BinomialIdeal> random_cellular_ideals(std::mt19937_64& rng, std::size_t count,
                                                         bool need_nilpotent = false) {
  std::vector<BinomialIdeal> out;
  while (out.size() < count) {
    for (auto& c : cellular_decomposition(random_unital_ideal(rng)).components) {
      if (need_nilpotent && c.cell.nilpotent().empty()) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const BinomialIdeal& o) { return same_ideal(o, c.ideal); });
      if (!seen && out.size() < count) out.push_back(c.ideal);
    }
  }
  return out;
}

/// Cellular ideals built as x^p plus nilpotent multiples of lattice
/// binomials in b and c, which tend to have embedded lattices.
inline std::vector<BinomialIdeal> random_layered_ideals(std::mt19937_64& rng, std::size_t count) {
  std::vector<BinomialIdeal> out;
  std::uniform_int_distribution<int> p(2, 4), e(0, 3), sign(0, 1);
  auto term = [&] { return "b^" + std::to_string(e(rng)) + "*c^" + std::to_string(e(rng)); };
  while (out.size() < count) {
    int top = p(rng);
    std::string gens = "x^" + std::to_string(top);
    int layers = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int l = 0; l < layers; ++l) {
      std::string x = "x^" + std::to_string(std::uniform_int_distribution<int>(0, top - 1)(rng)) + "*";
      gens += ", " + x + term() + (sign(rng) ? " - " : " + ") + x + term();
    }
    auto I = ideal("x, b, c", gens);
    if (I.is_unit()) continue;
    for (auto& comp : cellular_decomposition(I).components) {
      if (comp.cell.nilpotent().empty()) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const BinomialIdeal& o) { return same_ideal(o, comp.ideal); });
      if (!seen && out.size() < count) out.push_back(comp.ideal);
    }
  }
  return out;
}

inline IntMatrix random_lattice_basis(std::mt19937_64& rng, std::size_t ambient, std::size_t max_rank, int bound) {
  std::size_t rank = std::uniform_int_distribution<std::size_t>(0, max_rank)(rng);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<std::int64_t> row(ambient);
    for (auto& e : row) e = entry(rng);
    rows.push_back(row);
  }
  return IntMatrix::from_rows(ambient, rows);
}

// ---------------------------------------------------------------------------
// Oracles

/// Determinant by cofactor expansion.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    mpz_class term = m[0][c] * cofactor_det(minor);
    d += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return d;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Rank and [Sat(L) : L] for the row span of `rows`, from the gcd of the
/// maximal nonzero minors.
inline std::pair<std::size_t, mpz_class> minor_rank_and_index(const std::vector<std::vector<mpz_class>>& rows,
                                                              std::size_t ambient) {
  for (std::size_t k = std::min(rows.size(), ambient); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    choose(rows.size(), k, 0, cur, rsets);
    choose(ambient, k, 0, cur, csets);
    mpz_class g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        std::vector<std::vector<mpz_class>> m;
        for (auto r : rs) {
          std::vector<mpz_class> row;
          for (auto c : cs) row.push_back(rows[r][c]);
          m.push_back(row);
        }
        mpz_class d = cofactor_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g != 0) {
      // gcd of maximal minors of a basis; for a spanning set that is not a
      // basis the caller passes a basis.
      return {k, g};
    }
  }
  return {0, 1};
}

/// Leading-term divisibility check, independent of normal_form.
inline bool is_standard(const Monomial& m, const ReducedGB& G) {
  return std::none_of(G.elements.begin(), G.elements.end(), [&](const Binomial& g) { return g.lead().divides(m); });
}

/// Standard monomials in the variables of `vars` by box enumeration.
inline std::vector<Monomial> brute_standard_monomials(const BinomialIdeal& I, const std::vector<bool>& vars,
                                                      Exponent bound) {
  std::size_t n = I.nvars();
  const auto& G = I.gb();
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  for (;;) {
    Monomial m(e);
    if (is_standard(m, G)) out.push_back(m);
    std::size_t i = 0;
    while (i < n) {
      if (!vars[i] || e[i] == bound) {
        e[i] = 0;
        ++i;
        continue;
      }
      ++e[i];
      break;
    }
    if (i == n) break;
  }
  return out;
}

/// Least e with (I : m^e) = (I : m^(e+1)), by plain iteration.
inline std::int64_t brute_saturation_exponent(const BinomialIdeal& I, const Monomial& m, std::int64_t limit) {
  BinomialIdeal prev = canonical(I);
  for (std::int64_t e = 0; e <= limit; ++e) {
    auto next = colon_monomial(I, m.pow(e + 1));
    if (same_ideal(prev, next)) return e;
    prev = next;
  }
  return -1;
}

/// Products of polynomials over one field.
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const TermOrder& ord, const CyclotomicField& F) {
  std::vector<PolyTerm> terms;
  for (const auto& s : a)
    for (const auto& t : b) terms.push_back({s.monomial * t.monomial, F.mul(s.coeff, t.coeff)});
  std::sort(terms.begin(), terms.end(),
            [&](const PolyTerm& x, const PolyTerm& y) { return ord.less(y.monomial, x.monomial); });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial)
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const PolyTerm& t) { return CyclotomicField::is_zero(t.coeff); }),
            out.end());
  return out;
}

/// Whether f^k lies in I for some k <= max_power.
inline bool some_power_in(const Binomial& f, const BinomialIdeal& I, int max_power) {
  std::vector<RootOfUnity> roots;
  for (const auto& g : I.gb().elements)
    if (g.tail()) roots.push_back(g.tail()->coeff);
  if (f.tail()) roots.push_back(f.tail()->coeff);
  auto F = CyclotomicField::containing(roots);
  auto ord = TermOrder::degrevlex(I.nvars());
  auto X = to_poly_ideal(I, F);
  Polynomial base = to_polynomial(f, ord, *F);
  Polynomial p = base;
  for (int k = 1; k <= max_power; ++k) {
    if (poly_normal_form(p, X.basis, ord, *F).empty()) return true;
    p = poly_mul(p, base, ord, *F);
  }
  return false;
}

/// (lattice, character) pairs of a search result, in canonical order.
inline std::vector<PartialCharacter> characters(const WitnessSearchResult& r) {
  std::vector<PartialCharacter> out;
  for (const auto& e : r.lattices) out.push_back(e.character);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing
