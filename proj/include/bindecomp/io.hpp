#pragma once

// Parsing ideal sources (text and JSON dialects) and canonical printing.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bindecomp/ring.hpp"

namespace bindecomp {

struct ParsedIdeal {
  RingSpec ring;
  /// Normalized generators; empty when the source is not unital.
  std::vector<Binomial> generators;
  bool unital = true;
  /// Description of the first generator whose coefficients are not roots of
  /// unity.
  std::string non_unital_reason;

  /// The ideal, or UnsupportedInputError if the source is not unital.
  BinomialIdeal ideal() const;
};

/// "ring: x, y" followed by "I: gen, gen, ...".
ParsedIdeal parse_ideal_text(std::string_view text);
/// A comma-separated generator list over a given ring.
ParsedIdeal parse_generators(const RingSpec& ring, std::string_view generators);
/// {"variables": [...], "generators": [{"lead": [...], "tail": [...] | null,
/// "coeff": {"num": k, "den": d}}, ...]}
ParsedIdeal parse_ideal_json(std::string_view text);
/// Dispatches on the first non-blank character.
ParsedIdeal parse_ideal(std::string_view text);

std::string format_root(const RootOfUnity& r);
std::string format_monomial(const Monomial& m, const RingSpec& ring);
std::string format_binomial(const Binomial& b, const RingSpec& ring);
/// Generator strings of the reduced basis under `ord`, increasing.
std::vector<std::string> canonical_generators(const BinomialIdeal& I, const TermOrder& ord);
std::vector<std::string> canonical_generators(const BinomialIdeal& I);
/// "ideal(g1, g2, ...)" from the reduced degrevlex basis.
std::string canonical_print(const BinomialIdeal& I);
std::string canonical_print(const BinomialIdeal& I, const TermOrder& ord);

}  // namespace bindecomp
