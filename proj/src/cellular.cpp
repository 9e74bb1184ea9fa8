#include "bindecomp/cellular.hpp"

#include <algorithm>
#include <numeric>

#include "bindecomp/groebner.hpp"
#include "bindecomp/polynomial.hpp"

namespace bindecomp {

namespace {

void require_proper(const BinomialIdeal& I) {
  if (I.is_unit()) throw UnsupportedInputError("the unit ideal has no cellular structure");
}

VariableClass classify(const BinomialIdeal& I, std::size_t i) {
  Monomial x = Monomial::variable(I.nvars(), i);
  if (same_ideal(colon_monomial(I, x), I)) return VariableClass::Regular;
  if (saturate_by_monomial(I, x).ideal.is_unit()) return VariableClass::Nilpotent;
  return VariableClass::ZeroDivisor;
}

void split(const BinomialIdeal& I, CellularDecomposition& out) {
  if (I.is_unit()) return;
  const std::size_t n = I.nvars();
  std::vector<bool> regular(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = classify(I, i);
    if (c == VariableClass::ZeroDivisor) {
      Monomial x = Monomial::variable(n, i);
      auto sat = saturate_by_monomial(I, x);
      out.splits.push_back({canonical(I), i, sat.exponent});
      split(sat.ideal, out);
      split(canonical(I.with({Binomial::monomial(x.pow(sat.exponent))})), out);
      return;
    }
    regular[i] = c == VariableClass::Regular;
  }
  out.components.push_back({CellStructure::from_mask(std::move(regular)), canonical(I)});
}

// Drop components containing the intersection of the others.  Components
// with more nilpotent variables are tried first.
void remove_redundant(std::vector<CellularComponent>& comps) {
  std::vector<CellularComponent> unique;
  for (auto& c : comps) {
    bool dup = std::any_of(unique.begin(), unique.end(),
                           [&](const CellularComponent& u) { return same_ideal(u.ideal, c.ideal); });
    if (!dup) unique.push_back(std::move(c));
  }
  std::vector<std::size_t> order(unique.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return unique[a].cell.nilpotent().size() > unique[b].cell.nilpotent().size();
  });
  std::vector<bool> alive(unique.size(), true);
  for (auto i : order) {
    std::vector<BinomialIdeal> others;
    bool covered = false;
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j == i || !alive[j]) continue;
      if (contains(unique[i].ideal, unique[j].ideal)) covered = true;
      others.push_back(unique[j].ideal);
    }
    if (others.empty()) continue;
    if (!covered) covered = poly_contained_in(intersect_poly(others), unique[i].ideal);
    if (covered) alive[i] = false;
  }
  comps.clear();
  for (std::size_t j = 0; j < unique.size(); ++j)
    if (alive[j]) comps.push_back(std::move(unique[j]));
}

}  // namespace

std::vector<VariableClass> classify_variables(const BinomialIdeal& I) {
  require_proper(I);
  std::vector<VariableClass> out;
  for (std::size_t i = 0; i < I.nvars(); ++i) out.push_back(classify(I, i));
  return out;
}

std::variant<CellStructure, NotCellular> is_cellular(const BinomialIdeal& I) {
  auto classes = classify_variables(I);
  std::vector<bool> regular(I.nvars(), false);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == VariableClass::ZeroDivisor) return NotCellular{i};
    regular[i] = classes[i] == VariableClass::Regular;
  }
  auto cell = CellStructure::from_mask(std::move(regular));
  // Regular variables have a regular product, so this saturation is a check
  // on the classification rather than a computation that can change I.
  if (!same_ideal(saturate_by_monomial(I, cell.regular_product()).ideal, I))
    throw InternalError("regular variables with a zerodivisor product");
  return cell;
}

CellStructure require_cellular(const BinomialIdeal& I) {
  auto r = is_cellular(I);
  if (auto* nc = std::get_if<NotCellular>(&r))
    throw UnsupportedInputError("ideal is not cellular: variable " + I.ring().name(nc->witness) +
                                " is a zerodivisor but not nilpotent");
  return std::get<CellStructure>(r);
}

CellularDecomposition cellular_decomposition(const BinomialIdeal& I) {
  require_proper(I);
  CellularDecomposition out;
  split(canonical(I), out);
  remove_redundant(out.components);
  return out;
}

}  // namespace bindecomp
