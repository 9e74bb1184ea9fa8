#pragma once

// Associated primes, Hull, primary components, minimal primes, radical and
// binomial primary decomposition of binomial ideals with root-of-unity
// coefficients, over the cyclotomic field their characters require.

#include <cstdint>
#include <random>
#include <vector>

#include "bindecomp/cellular.hpp"
#include "bindecomp/intlat.hpp"
#include "bindecomp/ring.hpp"

namespace bindecomp {

/// The prime I_{sigma,J} + m_J for a saturated character sigma on a lattice
/// in Z^J.
struct AssociatedPrime {
  CellStructure cell;
  PartialCharacter character;

  BinomialIdeal ideal(const RingSpec& ring) const;
  /// Krull dimension of the quotient: |J| - rank.
  std::int64_t dimension() const;

  bool operator==(const AssociatedPrime& other) const {
    return cell == other.cell && character == other.character;
  }
  bool operator<(const AssociatedPrime& other) const;
};

struct PrimaryComponent {
  BinomialIdeal ideal;
  AssociatedPrime prime;
  bool embedded = false;
};

struct DecompOptions {
  std::uint64_t seed = 0;
};

struct DecompStats {
  std::int64_t colon_computations = 0;
  std::int64_t witness_searches = 0;
  /// Splits of every cellular decomposition performed.
  std::vector<CellularSplit> splits;
};

/// A decomposition context: owns the random source shared by every
/// witness search it performs and accumulates statistics.
class Decomposer {
 public:
  explicit Decomposer(DecompOptions options = {}) : rng_(options.seed) {}

  std::vector<AssociatedPrime> associated_primes(const BinomialIdeal& I);
  BinomialIdeal hull(const BinomialIdeal& I);
  PrimaryComponent minimal_primary_component(const BinomialIdeal& I, const AssociatedPrime& P);
  std::vector<PrimaryComponent> binomial_primary_decomposition(const BinomialIdeal& I);
  std::vector<AssociatedPrime> minimal_primes(const BinomialIdeal& I);
  BinomialIdeal radical(const BinomialIdeal& I);
  bool is_primary(const BinomialIdeal& Q);

  const DecompStats& stats() const { return stats_; }

 private:
  std::vector<CellularComponent> cells(const BinomialIdeal& I);
  std::vector<AssociatedPrime> primes_of_cell(const BinomialIdeal& C, const CellStructure& cell, bool minimal_only);
  BinomialIdeal hull_of_cell(const BinomialIdeal& I, const CellStructure& cell);
  PrimaryComponent component_of_cell(const BinomialIdeal& C, const CellStructure& cell, const AssociatedPrime& P);

  std::mt19937_64 rng_;
  DecompStats stats_;
};

std::vector<AssociatedPrime> associated_primes(const BinomialIdeal& I, const DecompOptions& options = {});
BinomialIdeal hull(const BinomialIdeal& I, const DecompOptions& options = {});
PrimaryComponent minimal_primary_component(const BinomialIdeal& I, const AssociatedPrime& P,
                                           const DecompOptions& options = {});
std::vector<PrimaryComponent> binomial_primary_decomposition(const BinomialIdeal& I, const DecompOptions& options = {});
std::vector<AssociatedPrime> minimal_primes(const BinomialIdeal& I, const DecompOptions& options = {});
BinomialIdeal radical(const BinomialIdeal& I, const DecompOptions& options = {});
bool is_primary(const BinomialIdeal& Q, const DecompOptions& options = {});

/// Conductor of the cyclotomic field over which the components and their
/// primes are defined.
std::int64_t cyclotomic_order(const std::vector<PrimaryComponent>& components);
std::int64_t cyclotomic_order(const std::vector<AssociatedPrime>& primes);

}  // namespace bindecomp
