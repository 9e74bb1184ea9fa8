#pragma once

// Core exact types: monomials with checked 64-bit exponents, roots of unity
// as elements of Q/Z, term orders, normalized binomials and binomial ideals.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bindecomp/errors.hpp"

namespace bindecomp {

using Exponent = std::int64_t;

namespace checked {
Exponent add(Exponent a, Exponent b);
Exponent sub(Exponent a, Exponent b);
Exponent mul(Exponent a, Exponent b);
}  // namespace checked

class RingSpec {
 public:
  RingSpec() = default;
  explicit RingSpec(std::vector<std::string> names);

  /// Variables named x1..xn.
  static RingSpec with_size(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const RingSpec&) const = default;

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent degree() const;
  bool is_one() const;
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// True when the support lies inside `vars` (a mask over variables).
  bool supported_in(const std::vector<bool>& vars) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws if `divisor` does not divide.
  Monomial operator/(const Monomial& divisor) const;
  Monomial pow(Exponent k) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Lexicographic comparison of exponent vectors for container use.
  /// This is not a term order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// e^{2 pi i q} for a reduced fraction q in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// Reduces num/den modulo 1.
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Multiplicative order, equal to the reduced denominator.
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;
  /// All d values t with t^d equal to this root.
  std::vector<RootOfUnity> nth_roots(std::int64_t d) const;

  auto operator<=>(const RootOfUnity&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b);
std::vector<RootOfUnity> root_nth_roots(const RootOfUnity& a, std::int64_t d);

/// Multiplicative well-orders on monomials.  Blocks compare the first
/// block's restriction first and break ties on the rest; both blocks use
/// degrevlex internally.
class TermOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  TermOrder() = default;
  static TermOrder degrevlex(std::size_t n);
  static TermOrder lex(std::size_t n);
  static TermOrder elimination(std::vector<bool> first_block);

  Kind kind() const { return kind_; }
  std::size_t size() const { return nvars_; }
  const std::vector<bool>& first_block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const TermOrder&) const = default;
  auto operator<=>(const TermOrder&) const = default;

 private:
  Kind kind_ = Kind::DegRevLex;
  std::size_t nvars_ = 0;
  std::vector<bool> block_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord);

/// The element x^lead - coeff * x^tail, or the monomial x^lead when the tail
/// is absent.  The lead is strictly greater than the tail under the order it
/// was normalized with.
class Binomial {
 public:
  struct Tail {
    Monomial monomial;
    RootOfUnity coeff;
    auto operator<=>(const Tail&) const = default;
  };

  Binomial() = default;
  static Binomial monomial(Monomial m);

  /// Normalizes a * x^s + b * x^t (b, t optional) under `ord`.  Returns
  /// nothing for the zero polynomial.  Two equal monomials with coefficients
  /// that do not cancel leave a unit multiple of the monomial, which is
  /// normalized to the monomial itself.
  static std::optional<Binomial> from_terms(const Monomial& s, RootOfUnity a,
                                            const std::optional<std::pair<Monomial, RootOfUnity>>& t,
                                            const TermOrder& ord);
  /// x^u - lambda x^v normalized under `ord`.
  static std::optional<Binomial> difference(const Monomial& u, RootOfUnity lambda,
                                            const Monomial& v, const TermOrder& ord);

  const Monomial& lead() const { return lead_; }
  const std::optional<Tail>& tail() const { return tail_; }
  bool is_monomial() const { return !tail_.has_value(); }
  bool is_unit() const { return is_monomial() && lead_.is_one(); }
  std::size_t size() const { return lead_.size(); }

  /// Renormalize under another order (the lead may swap with the tail).
  Binomial normalized(const TermOrder& ord) const;
  /// Multiply by a monomial.
  Binomial times(const Monomial& m) const;
  bool supported_in(const std::vector<bool>& vars) const;

  auto operator<=>(const Binomial&) const = default;

 private:
  Monomial lead_;
  std::optional<Tail> tail_;
};

struct ReducedGB {
  TermOrder order;
  /// Sorted by increasing lead under `order`.
  std::vector<Binomial> elements;
  bool is_unit() const { return elements.size() == 1 && elements.front().is_unit(); }
  bool operator==(const ReducedGB&) const = default;
};

class BinomialIdeal {
 public:
  BinomialIdeal() = default;
  BinomialIdeal(RingSpec ring, std::vector<Binomial> generators);

  static BinomialIdeal zero(RingSpec ring) { return {std::move(ring), {}}; }
  static BinomialIdeal unit(RingSpec ring);

  const RingSpec& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.size(); }
  const std::vector<Binomial>& generators() const { return gens_; }

  /// Reduced Groebner basis under `ord`, memoized per order.
  const ReducedGB& gb(const TermOrder& ord) const;
  /// Reduced Groebner basis under degrevlex.
  const ReducedGB& gb() const;

  bool is_unit() const { return gb().is_unit(); }
  bool is_zero() const { return gb().elements.empty(); }

  /// Ideal generated by both generator lists.
  BinomialIdeal operator+(const BinomialIdeal& other) const;
  BinomialIdeal with(std::vector<Binomial> extra) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const ReducedGB>> entries;
  };

  RingSpec ring_;
  std::vector<Binomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// J, the set of regular variables of a cellular ideal.  The complement
/// holds the nilpotent variables and m_J is the prime they generate.
class CellStructure {
 public:
  CellStructure() = default;
  CellStructure(std::size_t n, std::vector<std::size_t> regular);
  static CellStructure from_mask(std::vector<bool> mask);

  std::size_t nvars() const { return mask_.size(); }
  const std::vector<std::size_t>& regular() const { return regular_; }
  const std::vector<std::size_t>& nilpotent() const { return nilpotent_; }
  const std::vector<bool>& regular_mask() const { return mask_; }
  std::vector<bool> nilpotent_mask() const;
  bool is_regular(std::size_t i) const { return mask_.at(i); }

  /// Product of the regular variables.
  Monomial regular_product() const;
  /// Embed an exponent vector over J into the full ring.
  Monomial embed(const std::vector<Exponent>& on_regular) const;
  /// Restrict an exponent vector to J.
  std::vector<Exponent> restrict(const Monomial& m) const;
  /// Generators x_i for i outside J.
  std::vector<Binomial> nilpotent_prime_generators() const;

  auto operator<=>(const CellStructure&) const = default;

 private:
  std::vector<bool> mask_;
  std::vector<std::size_t> regular_;
  std::vector<std::size_t> nilpotent_;
};

}  // namespace bindecomp
