#include "bindecomp/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bindecomp/groebner.hpp"

namespace bindecomp {

namespace checked {
Exponent add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in addition");
  return r;
}
Exponent sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("exponent overflow in subtraction");
  return r;
}
Exponent mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in multiplication");
  return r;
}
}  // namespace checked

// ---------------------------------------------------------------------------
// RingSpec

namespace {
bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

// "ww" followed by digits is reserved for printed roots of unity.
bool reserved_identifier(const std::string& s) {
  if (s.size() < 3 || s[0] != 'w' || s[1] != 'w') return false;
  return std::all_of(s.begin() + 2, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}
}  // namespace

RingSpec::RingSpec(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw ParseError("invalid variable name '" + n + "'");
    if (reserved_identifier(n)) throw ParseError("variable name '" + n + "' is reserved for roots of unity");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

RingSpec RingSpec::with_size(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return RingSpec(std::move(names));
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e < 0) throw Error("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  Monomial m(n);
  m.exps_.at(i) = power;
  return m;
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (auto e : exps_) d = checked::add(d, e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::supported_in(const std::vector<bool>& vars) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && !vars[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked::add(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw Error("monomial division is not exact");
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  }
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked::mul(exps_[i], k);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("root of unity with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  auto g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  auto g = std::gcd(den_, other.den_);
  __int128 den = static_cast<__int128>(den_ / g) * other.den_;
  __int128 num = static_cast<__int128>(num_) * (other.den_ / g) + static_cast<__int128>(other.num_) * (den_ / g);
  if (den > INT64_MAX) throw OverflowError("root of unity order exceeds 64 bits");
  num %= den;
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

RootOfUnity RootOfUnity::inverse() const { return {den_ - num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  __int128 num = (static_cast<__int128>(num_) * (k % den_)) % den_;
  return {static_cast<std::int64_t>(num), den_};
}

std::vector<RootOfUnity> RootOfUnity::nth_roots(std::int64_t d) const {
  if (d < 1) throw Error("root degree must be positive");
  __int128 den = static_cast<__int128>(den_) * d;
  if (den > INT64_MAX) throw OverflowError("root of unity order exceeds 64 bits");
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(d));
  // (num/den + j) / d = (num + j*den) / (den*d)
  for (std::int64_t j = 0; j < d; ++j)
    out.emplace_back(static_cast<std::int64_t>(num_ + static_cast<__int128>(j) * den_), static_cast<std::int64_t>(den));
  std::sort(out.begin(), out.end(), [](const RootOfUnity& a, const RootOfUnity& b) {
    return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
  });
  return out;
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) { return a * b; }
std::vector<RootOfUnity> root_nth_roots(const RootOfUnity& a, std::int64_t d) { return a.nth_roots(d); }

// ---------------------------------------------------------------------------
// TermOrder

TermOrder TermOrder::degrevlex(std::size_t n) {
  TermOrder o;
  o.kind_ = Kind::DegRevLex;
  o.nvars_ = n;
  return o;
}

TermOrder TermOrder::lex(std::size_t n) {
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = n;
  return o;
}

TermOrder TermOrder::elimination(std::vector<bool> first_block) {
  TermOrder o;
  o.kind_ = Kind::Elimination;
  o.nvars_ = first_block.size();
  o.block_ = std::move(first_block);
  return o;
}

namespace {
// degrevlex restricted to the variables where mask[i] == want (all when mask empty).
std::strong_ordering degrevlex_on(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
  Exponent da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask && (*mask)[i] != want) continue;
    da = checked::add(da, a[i]);
    db = checked::add(db, b[i]);
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (mask && (*mask)[i] != want) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}
}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_on(a, b, nullptr, true);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      auto first = degrevlex_on(a, b, &block_, true);
      if (first != 0) return first;
      return degrevlex_on(a, b, &block_, false);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord) { return ord.compare(a, b); }

// ---------------------------------------------------------------------------
// Binomial

Binomial Binomial::monomial(Monomial m) {
  Binomial b;
  b.lead_ = std::move(m);
  return b;
}

std::optional<Binomial> Binomial::from_terms(const Monomial& s, RootOfUnity a,
                                             const std::optional<std::pair<Monomial, RootOfUnity>>& t,
                                             const TermOrder& ord) {
  if (!t) return monomial(s);
  const auto& [tm, b] = *t;
  auto c = ord.compare(s, tm);
  if (c == 0) {
    // a + b vanishes exactly when b = -a.
    if (b == a * RootOfUnity::minus_one()) return std::nullopt;
    return monomial(s);
  }
  Binomial r;
  if (c > 0) {
    r.lead_ = s;
    r.tail_ = Tail{tm, b * a.inverse() * RootOfUnity::minus_one()};
  } else {
    r.lead_ = tm;
    r.tail_ = Tail{s, a * b.inverse() * RootOfUnity::minus_one()};
  }
  return r;
}

std::optional<Binomial> Binomial::difference(const Monomial& u, RootOfUnity lambda, const Monomial& v,
                                             const TermOrder& ord) {
  return from_terms(u, RootOfUnity::one(), std::make_pair(v, lambda * RootOfUnity::minus_one()), ord);
}

Binomial Binomial::normalized(const TermOrder& ord) const {
  if (!tail_) return *this;
  return *difference(lead_, tail_->coeff, tail_->monomial, ord);
}

Binomial Binomial::times(const Monomial& m) const {
  Binomial r;
  r.lead_ = lead_ * m;
  if (tail_) r.tail_ = Tail{tail_->monomial * m, tail_->coeff};
  return r;
}

bool Binomial::supported_in(const std::vector<bool>& vars) const {
  return lead_.supported_in(vars) && (!tail_ || tail_->monomial.supported_in(vars));
}

// ---------------------------------------------------------------------------
// BinomialIdeal

BinomialIdeal::BinomialIdeal(RingSpec ring, std::vector<Binomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != ring_.size()) throw Error("generator does not live in the ideal's ring");
}

BinomialIdeal BinomialIdeal::unit(RingSpec ring) {
  auto n = ring.size();
  return {std::move(ring), {Binomial::monomial(Monomial(n))}};
}

const ReducedGB& BinomialIdeal::gb(const TermOrder& ord) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->entries.find(ord);
    if (it != cache_->entries.end()) return *it->second;
  }
  auto computed = std::make_shared<const ReducedGB>(reduced_gb(gens_, ord));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->entries.emplace(ord, std::move(computed));
  return *it->second;
}

const ReducedGB& BinomialIdeal::gb() const { return gb(TermOrder::degrevlex(nvars())); }

BinomialIdeal BinomialIdeal::operator+(const BinomialIdeal& other) const {
  if (!(ring_ == other.ring_)) throw Error("ideal sum across different rings");
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return {ring_, std::move(gens)};
}

BinomialIdeal BinomialIdeal::with(std::vector<Binomial> extra) const {
  auto gens = gens_;
  gens.insert(gens.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return {ring_, std::move(gens)};
}

// ---------------------------------------------------------------------------
// CellStructure

CellStructure::CellStructure(std::size_t n, std::vector<std::size_t> regular) : mask_(n, false) {
  for (auto i : regular) mask_.at(i) = true;
  *this = from_mask(mask_);
}

CellStructure CellStructure::from_mask(std::vector<bool> mask) {
  CellStructure c;
  c.mask_ = std::move(mask);
  for (std::size_t i = 0; i < c.mask_.size(); ++i) (c.mask_[i] ? c.regular_ : c.nilpotent_).push_back(i);
  return c;
}

std::vector<bool> CellStructure::nilpotent_mask() const {
  std::vector<bool> m(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) m[i] = !mask_[i];
  return m;
}

Monomial CellStructure::regular_product() const {
  Monomial m(nvars());
  for (auto i : regular_) m = m * Monomial::variable(nvars(), i);
  return m;
}

Monomial CellStructure::embed(const std::vector<Exponent>& on_regular) const {
  if (on_regular.size() != regular_.size()) throw Error("exponent vector does not match the cell");
  std::vector<Exponent> e(nvars(), 0);
  for (std::size_t k = 0; k < regular_.size(); ++k) e[regular_[k]] = on_regular[k];
  return Monomial(std::move(e));
}

std::vector<Exponent> CellStructure::restrict(const Monomial& m) const {
  std::vector<Exponent> e;
  e.reserve(regular_.size());
  for (auto i : regular_) e.push_back(m[i]);
  return e;
}

std::vector<Binomial> CellStructure::nilpotent_prime_generators() const {
  std::vector<Binomial> g;
  for (auto i : nilpotent_) g.push_back(Binomial::monomial(Monomial::variable(nvars(), i)));
  return g;
}

}  // namespace bindecomp
