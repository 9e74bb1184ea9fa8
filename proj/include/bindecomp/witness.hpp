#pragma once

// Randomized search for the potentially associated lattices of a cellular
// binomial ideal.  Colon ideals grow along divisibility, so two evaluated
// monomials with equal colon ideals pin down every monomial between them.

#include <cstdint>
#include <random>
#include <vector>

#include "bindecomp/intlat.hpp"
#include "bindecomp/ring.hpp"

namespace bindecomp {

struct WitnessedLattice {
  /// The character of (I : m) restricted to k[J], in the J-coordinates.
  PartialCharacter character;
  /// Divisibility-minimal witnesses, sorted.
  std::vector<Monomial> witnesses;
};

struct SearchStats {
  /// Count of evaluations of (I : m) intersected with k[J].
  std::int64_t colon_computations = 0;
  /// Standard monomials of I in k[oJ], excluding the base witness 1.
  std::int64_t todo_initial = 0;
  /// Monomials discarded without evaluation.
  std::int64_t todo_pruned = 0;
};

struct WitnessSearchResult {
  /// The first entry is the lattice of I itself with witness 1; the rest are
  /// sorted by character.
  std::vector<WitnessedLattice> lattices;
  SearchStats stats;
};

/// The character of (I : m) intersected with k[J].
PartialCharacter colon_character(const BinomialIdeal& I, const CellStructure& cell, const Monomial& m);

WitnessSearchResult witness_search(const BinomialIdeal& I, const CellStructure& cell, std::mt19937_64& rng);
WitnessSearchResult witness_search(const BinomialIdeal& I, const CellStructure& cell, std::uint64_t seed = 0);

/// Evaluates every standard monomial.
WitnessSearchResult witness_search_exhaustive(const BinomialIdeal& I, const CellStructure& cell);

/// Entries whose lattice strictly contains the base lattice.
std::vector<WitnessedLattice> embedded_lattices(const std::vector<WitnessedLattice>& result);

/// The monomial ideal generated by the minimal witnesses of embedded
/// lattices; the zero ideal when there are none.
BinomialIdeal m_emb(const std::vector<WitnessedLattice>& result, const RingSpec& ring);

}  // namespace bindecomp
