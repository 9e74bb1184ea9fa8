#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bindecomp/ring.hpp"

namespace bindecomp {

enum class VariableClass { Regular, Nilpotent, ZeroDivisor };

/// Per-variable classification modulo a proper ideal.
std::vector<VariableClass> classify_variables(const BinomialIdeal& I);

struct NotCellular {
  /// A variable that is a zerodivisor without being nilpotent.
  std::size_t witness;
};

/// The cell (J = non-nilpotent variables) when I is cellular, otherwise
/// the offending variable.
std::variant<CellStructure, NotCellular> is_cellular(const BinomialIdeal& I);
/// The cell of I, or UnsupportedInputError when I is not cellular.
CellStructure require_cellular(const BinomialIdeal& I);

struct CellularComponent {
  CellStructure cell;
  BinomialIdeal ideal;
};

struct CellularSplit {
  BinomialIdeal ideal;
  std::size_t variable;
  std::int64_t exponent;
};

struct CellularDecomposition {
  std::vector<CellularComponent> components;
  /// Every split performed by the recursion, in order.
  std::vector<CellularSplit> splits;
};

/// A list of cellular binomial ideals intersecting to I.
CellularDecomposition cellular_decomposition(const BinomialIdeal& I);

}  // namespace bindecomp
