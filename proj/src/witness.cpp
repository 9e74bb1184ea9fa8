#include "bindecomp/witness.hpp"

#include <algorithm>

#include "bindecomp/groebner.hpp"

namespace bindecomp {

namespace {

struct SearchState {
  std::vector<WitnessedLattice> entries;
  SearchStats stats;
};

std::vector<Monomial> initial_todo(const BinomialIdeal& I, const CellStructure& cell) {
  Monomial regular = cell.regular_product();
  if (!regular.is_one() && !same_ideal(colon_monomial(I, regular), I))
    throw UnsupportedInputError("witness search needs a cellular ideal: a cell variable is a zerodivisor");
  auto nil = eliminate(I, cell.regular_mask());
  std::vector<Monomial> todo;
  try {
    todo = standard_monomials(nil, cell.nilpotent_mask());
  } catch (const DimensionError&) {
    throw UnsupportedInputError("witness search needs a cellular ideal: a variable outside the cell is not nilpotent");
  }
  todo.erase(std::remove_if(todo.begin(), todo.end(), [](const Monomial& m) { return m.is_one(); }), todo.end());
  return todo;
}

// Keep the witness list divisibility-minimal.
void record_witness(std::vector<Monomial>& witnesses, const Monomial& m) {
  if (std::any_of(witnesses.begin(), witnesses.end(), [&](const Monomial& w) { return w.divides(m); })) return;
  witnesses.erase(std::remove_if(witnesses.begin(), witnesses.end(), [&](const Monomial& w) { return m.divides(w); }),
                  witnesses.end());
  witnesses.push_back(m);
}

SearchState start(const BinomialIdeal& I, const CellStructure& cell) {
  if (cell.nvars() != I.nvars()) throw Error("cell does not match the ring");
  if (I.is_unit()) throw UnsupportedInputError("witness search on the unit ideal");
  SearchState s;
  auto base = character_of_lattice_ideal(eliminate(I, cell.nilpotent_mask()), cell);
  s.entries.push_back({std::move(base), {Monomial(I.nvars())}});
  return s;
}

WitnessSearchResult finish(SearchState s) {
  auto ord = TermOrder::degrevlex(s.entries.front().witnesses.front().size());
  for (auto& e : s.entries)
    std::sort(e.witnesses.begin(), e.witnesses.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  std::sort(s.entries.begin() + 1, s.entries.end(),
            [](const WitnessedLattice& a, const WitnessedLattice& b) { return a.character < b.character; });
  return {std::move(s.entries), s.stats};
}

WitnessedLattice* find_entry(SearchState& s, const PartialCharacter& ch) {
  for (auto& e : s.entries)
    if (e.character == ch) return &e;
  return nullptr;
}

}  // namespace

PartialCharacter colon_character(const BinomialIdeal& I, const CellStructure& cell, const Monomial& m) {
  return character_of_lattice_ideal(eliminate(colon_monomial(I, m), cell.nilpotent_mask()), cell);
}

WitnessSearchResult witness_search(const BinomialIdeal& I, const CellStructure& cell, std::mt19937_64& rng) {
  auto todo = initial_todo(I, cell);
  SearchState s = start(I, cell);
  s.stats.todo_initial = static_cast<std::int64_t>(todo.size());
  while (!todo.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, todo.size() - 1);
    std::size_t idx = pick(rng);
    Monomial m = std::move(todo[idx]);
    todo[idx] = std::move(todo.back());
    todo.pop_back();

    auto ch = colon_character(I, cell, m);
    ++s.stats.colon_computations;
    if (WitnessedLattice* e = find_entry(s, ch)) {
      // Everything between a known witness of this ideal and m has the same
      // colon ideal.
      auto between = [&](const Monomial& p) {
        return std::any_of(e->witnesses.begin(), e->witnesses.end(), [&](const Monomial& w) {
          return (w.divides(p) && p.divides(m)) || (m.divides(p) && p.divides(w));
        });
      };
      auto before = todo.size();
      todo.erase(std::remove_if(todo.begin(), todo.end(), between), todo.end());
      s.stats.todo_pruned += static_cast<std::int64_t>(before - todo.size());
      record_witness(e->witnesses, m);
    } else {
      s.entries.push_back({std::move(ch), {m}});
    }
  }
  return finish(std::move(s));
}

WitnessSearchResult witness_search(const BinomialIdeal& I, const CellStructure& cell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return witness_search(I, cell, rng);
}

WitnessSearchResult witness_search_exhaustive(const BinomialIdeal& I, const CellStructure& cell) {
  auto todo = initial_todo(I, cell);
  SearchState s = start(I, cell);
  s.stats.todo_initial = static_cast<std::int64_t>(todo.size());
  for (const auto& m : todo) {
    auto ch = colon_character(I, cell, m);
    ++s.stats.colon_computations;
    if (WitnessedLattice* e = find_entry(s, ch))
      record_witness(e->witnesses, m);
    else
      s.entries.push_back({std::move(ch), {m}});
  }
  return finish(std::move(s));
}

std::vector<WitnessedLattice> embedded_lattices(const std::vector<WitnessedLattice>& result) {
  std::vector<WitnessedLattice> out;
  if (result.empty()) return out;
  const auto& base = result.front().character.lattice();
  for (std::size_t i = 1; i < result.size(); ++i)
    if (result[i].character.lattice().strictly_contains(base)) out.push_back(result[i]);
  return out;
}

BinomialIdeal m_emb(const std::vector<WitnessedLattice>& result, const RingSpec& ring) {
  std::vector<Binomial> gens;
  for (const auto& e : embedded_lattices(result))
    for (const auto& w : e.witnesses) gens.push_back(Binomial::monomial(w));
  return canonical(BinomialIdeal(ring, std::move(gens)));
}

}  // namespace bindecomp
