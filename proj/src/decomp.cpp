#include "bindecomp/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bindecomp/cellular.hpp"
#include "bindecomp/groebner.hpp"
#include "bindecomp/io.hpp"
#include "bindecomp/polynomial.hpp"
#include "bindecomp/witness.hpp"

namespace bindecomp {

namespace {

void require_proper(const BinomialIdeal& I) {
  if (I.is_unit()) throw UnsupportedInputError("the unit ideal has no decomposition");
}

std::int64_t conductor(std::int64_t d) { return d % 4 == 2 ? d / 2 : d; }

// Deterministic output order: larger dimension first, then by printed form.
template <class T, class Key>
void sort_by_dimension(std::vector<T>& items, Key key) {
  std::vector<std::pair<std::pair<std::int64_t, std::string>, T>> keyed;
  for (auto& it : items) keyed.emplace_back(key(it), std::move(it));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  items.clear();
  for (auto& [k, it] : keyed) items.push_back(std::move(it));
}

std::vector<AssociatedPrime> sorted_primes(std::vector<AssociatedPrime> primes, const RingSpec& ring) {
  sort_by_dimension(primes, [&](const AssociatedPrime& p) {
    return std::make_pair(p.dimension(), canonical_print(p.ideal(ring)));
  });
  return primes;
}

void push_unique(std::vector<AssociatedPrime>& primes, AssociatedPrime p) {
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(std::move(p));
}

// A P-primary component is redundant exactly when the components whose
// primes lie inside P already intersect into it.
bool covered_by_others(const std::vector<BinomialIdeal>& ideals, const std::vector<std::vector<bool>>& below,
                       const std::vector<bool>& alive, std::size_t i) {
  std::vector<BinomialIdeal> others;
  for (std::size_t j = 0; j < ideals.size(); ++j) {
    if (j == i || !alive[j] || !below[i][j]) continue;
    if (contains(ideals[i], ideals[j])) return true;
    others.push_back(ideals[j]);
  }
  if (others.empty()) return false;
  return poly_contained_in(intersect_poly(others), ideals[i]);
}

}  // namespace

// ---------------------------------------------------------------------------
// AssociatedPrime

BinomialIdeal AssociatedPrime::ideal(const RingSpec& ring) const {
  auto lattice = lattice_ideal_of_character(character, cell, ring);
  return canonical(lattice.with(cell.nilpotent_prime_generators()));
}

std::int64_t AssociatedPrime::dimension() const {
  return static_cast<std::int64_t>(cell.regular().size()) - static_cast<std::int64_t>(character.rank());
}

bool AssociatedPrime::operator<(const AssociatedPrime& other) const {
  if (!(cell == other.cell)) return cell < other.cell;
  return character < other.character;
}

// ---------------------------------------------------------------------------
// Decomposer

std::vector<CellularComponent> Decomposer::cells(const BinomialIdeal& I) {
  auto cd = cellular_decomposition(I);
  stats_.splits.insert(stats_.splits.end(), cd.splits.begin(), cd.splits.end());
  return std::move(cd.components);
}

std::vector<AssociatedPrime> Decomposer::primes_of_cell(const BinomialIdeal& C, const CellStructure& cell,
                                                        bool minimal_only) {
  std::vector<AssociatedPrime> out;
  if (minimal_only) {
    auto base = character_of_lattice_ideal(eliminate(C, cell.nilpotent_mask()), cell);
    for (auto& sigma : saturate_character(base)) push_unique(out, {cell, std::move(sigma)});
    return out;
  }
  auto ws = witness_search(C, cell, rng_);
  stats_.colon_computations += ws.stats.colon_computations;
  ++stats_.witness_searches;
  for (const auto& entry : ws.lattices)
    for (auto& sigma : saturate_character(entry.character)) push_unique(out, {cell, std::move(sigma)});
  return out;
}

BinomialIdeal Decomposer::hull_of_cell(const BinomialIdeal& I, const CellStructure& cell) {
  auto base = character_of_lattice_ideal(eliminate(I, cell.nilpotent_mask()), cell);
  if (saturate_character(base).size() != 1)
    throw HullPreconditionError("Hull needs a cellular ideal with exactly one minimal prime");
  auto ws = witness_search(I, cell, rng_);
  stats_.colon_computations += ws.stats.colon_computations;
  ++stats_.witness_searches;
  return canonical(I + m_emb(ws.lattices, I.ring()));
}

PrimaryComponent Decomposer::component_of_cell(const BinomialIdeal& C, const CellStructure& cell,
                                               const AssociatedPrime& P) {
  if (!(P.cell == cell)) throw HullPreconditionError("prime is not associated to the cellular ideal");
  auto lattice = lattice_ideal_of_character(P.character, cell, C.ring());
  // Saturating by the cell variables keeps the component over P and makes
  // the sum cellular again.
  auto K = saturate_by_monomial(C + lattice, cell.regular_product()).ideal;
  if (K.is_unit()) throw HullPreconditionError("prime is not associated to the cellular ideal");
  auto base = character_of_lattice_ideal(eliminate(K, cell.nilpotent_mask()), cell);
  auto sats = saturate_character(base);
  if (sats.size() != 1 || !(sats.front() == P.character))
    throw HullPreconditionError("prime is not the unique minimal prime of the component");
  return {hull_of_cell(K, cell), P, false};
}

std::vector<AssociatedPrime> Decomposer::associated_primes(const BinomialIdeal& I) {
  require_proper(I);
  std::vector<AssociatedPrime> out;
  for (const auto& comp : cells(I))
    for (auto& p : primes_of_cell(comp.ideal, comp.cell, false)) push_unique(out, std::move(p));
  return sorted_primes(std::move(out), I.ring());
}

BinomialIdeal Decomposer::hull(const BinomialIdeal& I) {
  require_proper(I);
  return hull_of_cell(I, require_cellular(I));
}

PrimaryComponent Decomposer::minimal_primary_component(const BinomialIdeal& I, const AssociatedPrime& P) {
  require_proper(I);
  return component_of_cell(canonical(I), require_cellular(I), P);
}

std::vector<PrimaryComponent> Decomposer::binomial_primary_decomposition(const BinomialIdeal& I) {
  require_proper(I);
  std::vector<PrimaryComponent> comps;
  for (const auto& cc : cells(I))
    for (const auto& P : primes_of_cell(cc.ideal, cc.cell, false))
      comps.push_back(component_of_cell(cc.ideal, cc.cell, P));

  // Components over the same prime are merged when their intersection stays
  // binomial; otherwise they are left for the redundancy pass.
  std::vector<PrimaryComponent> merged;
  for (auto& c : comps) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const PrimaryComponent& m) { return m.prime == c.prime; });
    if (it == merged.end()) {
      merged.push_back(std::move(c));
      continue;
    }
    if (contains(c.ideal, it->ideal)) continue;
    if (contains(it->ideal, c.ideal)) {
      it->ideal = c.ideal;
      continue;
    }
    if (auto b = to_binomial_ideal(intersect_poly({it->ideal, c.ideal}))) {
      it->ideal = canonical(*b);
    } else {
      merged.push_back(std::move(c));
    }
  }

  std::vector<BinomialIdeal> primes;
  for (const auto& m : merged) primes.push_back(m.prime.ideal(I.ring()));
  // below[i][j]: the prime of j is contained in the prime of i.
  std::vector<std::vector<bool>> below(merged.size(), std::vector<bool>(merged.size(), false));
  for (std::size_t i = 0; i < merged.size(); ++i)
    for (std::size_t j = 0; j < merged.size(); ++j)
      below[i][j] = i != j && (merged[i].prime == merged[j].prime || contains(primes[i], primes[j]));

  // Greedy removal, largest ideals (smallest dimension) first.
  std::vector<std::size_t> order(merged.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return merged[a].prime.dimension() < merged[b].prime.dimension();
  });
  std::vector<BinomialIdeal> ideals;
  for (const auto& m : merged) ideals.push_back(m.ideal);
  std::vector<bool> alive(merged.size(), true);
  for (auto i : order)
    if (covered_by_others(ideals, below, alive, i)) alive[i] = false;

  std::vector<PrimaryComponent> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < merged.size(); ++j)
      if (alive[j] && below[i][j] && !(merged[i].prime == merged[j].prime)) merged[i].embedded = true;
    out.push_back(std::move(merged[i]));
  }

  sort_by_dimension(out, [](const PrimaryComponent& c) {
    return std::make_pair(c.prime.dimension(), canonical_print(c.ideal));
  });
  return out;
}

std::vector<AssociatedPrime> Decomposer::minimal_primes(const BinomialIdeal& I) {
  require_proper(I);
  std::vector<AssociatedPrime> candidates;
  for (const auto& comp : cells(I))
    for (auto& p : primes_of_cell(comp.ideal, comp.cell, true)) push_unique(candidates, std::move(p));
  std::vector<BinomialIdeal> ideals;
  for (const auto& p : candidates) ideals.push_back(p.ideal(I.ring()));
  std::vector<AssociatedPrime> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j)
      if (i != j && contains(ideals[i], ideals[j]) && !same_ideal(ideals[i], ideals[j])) minimal = false;
    if (minimal) out.push_back(candidates[i]);
  }
  return sorted_primes(std::move(out), I.ring());
}

BinomialIdeal Decomposer::radical(const BinomialIdeal& I) {
  require_proper(I);
  std::vector<BinomialIdeal> parts;
  for (const auto& comp : cells(I)) {
    auto lattice = eliminate(comp.ideal, comp.cell.nilpotent_mask());
    parts.push_back(canonical(lattice.with(comp.cell.nilpotent_prime_generators())));
  }
  if (parts.size() == 1) return parts.front();
  auto b = to_binomial_ideal(intersect_poly(parts));
  if (!b) throw InternalError("radical is not binomial");
  return canonical(*b);
}

bool Decomposer::is_primary(const BinomialIdeal& Q) {
  require_proper(Q);
  auto r = is_cellular(Q);
  if (std::holds_alternative<NotCellular>(r)) return false;
  return primes_of_cell(canonical(Q), std::get<CellStructure>(r), false).size() == 1;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<AssociatedPrime> associated_primes(const BinomialIdeal& I, const DecompOptions& options) {
  return Decomposer(options).associated_primes(I);
}
BinomialIdeal hull(const BinomialIdeal& I, const DecompOptions& options) { return Decomposer(options).hull(I); }
PrimaryComponent minimal_primary_component(const BinomialIdeal& I, const AssociatedPrime& P,
                                           const DecompOptions& options) {
  return Decomposer(options).minimal_primary_component(I, P);
}
std::vector<PrimaryComponent> binomial_primary_decomposition(const BinomialIdeal& I, const DecompOptions& options) {
  return Decomposer(options).binomial_primary_decomposition(I);
}
std::vector<AssociatedPrime> minimal_primes(const BinomialIdeal& I, const DecompOptions& options) {
  return Decomposer(options).minimal_primes(I);
}
BinomialIdeal radical(const BinomialIdeal& I, const DecompOptions& options) { return Decomposer(options).radical(I); }
bool is_primary(const BinomialIdeal& Q, const DecompOptions& options) { return Decomposer(options).is_primary(Q); }

std::int64_t cyclotomic_order(const std::vector<PrimaryComponent>& components) {
  std::int64_t d = 1;
  for (const auto& c : components) {
    d = std::lcm(d, cyclotomic_order(c.ideal));
    d = std::lcm(d, c.prime.character.cyclotomic_order());
  }
  return conductor(d);
}

std::int64_t cyclotomic_order(const std::vector<AssociatedPrime>& primes) {
  std::int64_t d = 1;
  for (const auto& p : primes) d = std::lcm(d, p.character.cyclotomic_order());
  return conductor(d);
}

}  // namespace bindecomp
