#include "bindecomp/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "bindecomp/polynomial.hpp"

namespace bindecomp {

namespace {

using TermPair = std::optional<std::pair<Monomial, RootOfUnity>>;

const RootOfUnity kMinusOne = RootOfUnity::minus_one();

// Reduce the lead of h by g, assuming lead(g) | lead(h).
std::optional<Binomial> reduce_lead(const Binomial& h, const Binomial& g, const TermOrder& ord) {
  Monomial q = h.lead() / g.lead();
  if (h.tail()) {
    const auto& [b, lambda] = *h.tail();
    if (g.tail()) {
      // h - x^q g = -lambda x^b + mu x^{q+z}
      return Binomial::from_terms(b, lambda * kMinusOne, std::make_pair(q * g.tail()->monomial, g.tail()->coeff), ord);
    }
    return Binomial::monomial(b);
  }
  if (g.tail()) return Binomial::monomial(q * g.tail()->monomial);
  return std::nullopt;
}

// Reduce the tail of h by g, assuming lead(g) | tail(h).
Binomial reduce_tail(const Binomial& h, const Binomial& g, const TermOrder& ord) {
  const auto& [b, lambda] = *h.tail();
  if (!g.tail()) return Binomial::monomial(h.lead());
  Monomial q = b / g.lead();
  // h + lambda x^q g = x^a - lambda mu x^{q+z}; the new tail stays below the lead.
  return *Binomial::difference(h.lead(), lambda * g.tail()->coeff, q * g.tail()->monomial, ord);
}

const Binomial* find_divisor(const Monomial& m, const std::vector<Binomial>& basis, const std::vector<bool>* alive,
                             std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip || (alive && !(*alive)[i])) continue;
    if (basis[i].lead().divides(m)) return &basis[i];
  }
  return nullptr;
}

std::optional<Binomial> reduce_fully(Binomial h, const std::vector<Binomial>& basis, const TermOrder& ord,
                                     const std::vector<bool>* alive = nullptr, std::size_t skip = SIZE_MAX,
                                     bool tail_only = false) {
  if (!tail_only) {
    while (const Binomial* g = find_divisor(h.lead(), basis, alive, skip)) {
      auto r = reduce_lead(h, *g, ord);
      if (!r) return std::nullopt;
      h = std::move(*r);
    }
  }
  while (h.tail()) {
    const Binomial* g = find_divisor(h.tail()->monomial, basis, alive, skip);
    if (!g) break;
    h = reduce_tail(h, *g, ord);
  }
  return h;
}

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const TermOrder& ord) {
  Monomial L = lcm(f.lead(), g.lead());
  Monomial qf = L / f.lead();
  Monomial qg = L / g.lead();
  if (f.tail() && g.tail()) {
    // -lambda x^{qf v} + mu x^{qg z}
    return Binomial::from_terms(qf * f.tail()->monomial, f.tail()->coeff * kMinusOne,
                                std::make_pair(qg * g.tail()->monomial, g.tail()->coeff), ord);
  }
  if (f.tail()) return Binomial::monomial(qf * f.tail()->monomial);
  if (g.tail()) return Binomial::monomial(qg * g.tail()->monomial);
  return std::nullopt;
}

ReducedGB unit_basis(const TermOrder& ord) {
  return {ord, {Binomial::monomial(Monomial(ord.size()))}};
}

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& ord) : ord_(ord) {}

  // Returns false once the unit ideal is detected.
  bool add(const Binomial& f) {
    auto r = reduce_fully(f.normalized(ord_), basis_, ord_, &alive_);
    if (!r) return true;
    if (r->lead().is_one()) return false;
    const std::size_t j = basis_.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (!alive_[i]) continue;
      auto L = lcm(basis_[i].lead(), r->lead());
      queue_.emplace(L.degree(), j, i);
      pending_.emplace(i, j);
    }
    basis_.push_back(std::move(*r));
    alive_.push_back(true);
    return true;
  }

  bool run() {
    while (!queue_.empty()) {
      auto [deg, j, i] = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({i, j});
      const auto& f = basis_[i];
      const auto& g = basis_[j];
      if (gcd(f.lead(), g.lead()).is_one()) continue;
      if (chain_criterion(i, j)) continue;
      auto s = s_pair(f, g, ord_);
      if (!s) continue;
      if (!add(*s)) return false;
    }
    return true;
  }

  ReducedGB finish() {
    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Binomial> kept;
    std::vector<std::size_t> order(basis_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ord_.less(basis_[a].lead(), basis_[b].lead()); });
    for (auto idx : order) {
      const auto& b = basis_[idx];
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Binomial& k) { return k.lead().divides(b.lead()); });
      if (!redundant) kept.push_back(b);
    }
    // Interreduce tails until stable; monomial reducers can collapse a
    // binomial into a monomial, which may enable further reductions.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (!kept[i].tail()) continue;
        auto r = *reduce_fully(kept[i], kept, ord_, nullptr, i, true);
        if (!(r == kept[i])) {
          kept[i] = std::move(r);
          changed = true;
        }
      }
    }
    return {ord_, std::move(kept)};
  }

 private:
  bool chain_criterion(std::size_t i, std::size_t j) const {
    auto L = lcm(basis_[i].lead(), basis_[j].lead());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j || !basis_[k].lead().divides(L)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (pending_.count({p1.first, p1.second}) || pending_.count({p2.first, p2.second})) continue;
      return true;
    }
    return false;
  }

  TermOrder ord_;
  std::vector<Binomial> basis_;
  std::vector<bool> alive_;
  std::set<std::tuple<Exponent, std::size_t, std::size_t>> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

Binomial extend(const Binomial& b, std::size_t extra) {
  auto widen = [&](const Monomial& m) {
    auto e = m.exponents();
    e.resize(e.size() + extra, 0);
    return Monomial(std::move(e));
  };
  if (!b.tail()) return Binomial::monomial(widen(b.lead()));
  return *Binomial::difference(widen(b.lead()), b.tail()->coeff, widen(b.tail()->monomial),
                               TermOrder::lex(b.size() + extra));
}

Monomial narrow(const Monomial& m, std::size_t n) {
  auto e = m.exponents();
  e.resize(n);
  return Monomial(std::move(e));
}

// Basis of I intersected with <m>, computed over one auxiliary variable t:
// t*I + (1-t)*<m>, with t eliminated.
std::vector<Binomial> intersection_with_monomial(const BinomialIdeal& I, const Monomial& m) {
  const std::size_t n = I.nvars();
  std::vector<bool> block(n + 1, false);
  block[n] = true;
  auto ord = TermOrder::elimination(block);
  Monomial t = Monomial::variable(n + 1, n);
  std::vector<Binomial> gens;
  for (const auto& g : I.gb().elements) gens.push_back(extend(g, 1).times(t));
  Monomial mm = narrow(m, n);
  auto me = extend(Binomial::monomial(mm), 1).lead();
  gens.push_back(*Binomial::difference(me * t, RootOfUnity::one(), me, ord));
  auto G = reduced_gb(gens, ord);
  std::vector<Binomial> out;
  for (const auto& g : G.elements) {
    if (g.lead()[n] != 0 || (g.tail() && g.tail()->monomial[n] != 0)) continue;
    if (!g.tail()) {
      out.push_back(Binomial::monomial(narrow(g.lead(), n)));
    } else {
      out.push_back(*Binomial::difference(narrow(g.lead(), n), g.tail()->coeff, narrow(g.tail()->monomial, n),
                                          TermOrder::degrevlex(n)));
    }
  }
  return out;
}

std::int64_t conductor(std::int64_t d) { return d % 4 == 2 ? d / 2 : d; }

}  // namespace

ReducedGB reduced_gb(const std::vector<Binomial>& gens, const TermOrder& ord) {
  Buchberger engine(ord);
  for (const auto& g : gens) {
    if (g.size() != ord.size()) throw Error("generator and term order disagree on the variable count");
    if (!engine.add(g)) return unit_basis(ord);
  }
  if (!engine.run()) return unit_basis(ord);
  return engine.finish();
}

std::optional<Binomial> normal_form(const Binomial& b, const ReducedGB& G) {
  return reduce_fully(b.normalized(G.order), G.elements, G.order);
}

bool contains(const BinomialIdeal& I, const Binomial& b) { return !normal_form(b, I.gb()).has_value(); }

bool contains(const BinomialIdeal& I, const BinomialIdeal& K) {
  if (I.is_unit()) return true;
  const auto& G = I.gb();
  return std::all_of(K.gb().elements.begin(), K.gb().elements.end(),
                     [&](const Binomial& b) { return !normal_form(b, G).has_value(); });
}

bool same_ideal(const BinomialIdeal& I, const BinomialIdeal& K) { return I.gb().elements == K.gb().elements; }

BinomialIdeal canonical(const BinomialIdeal& I) { return {I.ring(), I.gb().elements}; }

BinomialIdeal eliminate(const BinomialIdeal& I, const std::vector<bool>& drop) {
  if (drop.size() != I.nvars()) throw Error("elimination mask does not match the ring");
  if (std::none_of(drop.begin(), drop.end(), [](bool b) { return b; })) return canonical(I);
  const auto& G = I.gb(TermOrder::elimination(drop));
  std::vector<bool> keep(drop.size());
  for (std::size_t i = 0; i < drop.size(); ++i) keep[i] = !drop[i];
  std::vector<Binomial> out;
  for (const auto& g : G.elements)
    if (g.supported_in(keep)) out.push_back(g.normalized(TermOrder::degrevlex(I.nvars())));
  return {I.ring(), std::move(out)};
}

BinomialIdeal intersect_with_monomial(const BinomialIdeal& I, const Monomial& m) {
  if (I.is_unit()) return {I.ring(), {Binomial::monomial(m)}};
  return {I.ring(), intersection_with_monomial(I, m)};
}

BinomialIdeal colon_monomial(const BinomialIdeal& I, const Monomial& m) {
  if (m.size() != I.nvars()) throw Error("monomial does not live in the ideal's ring");
  if (m.is_one() || I.is_unit()) return canonical(I);
  std::vector<Binomial> out;
  for (const auto& g : intersection_with_monomial(I, m)) {
    if (!g.tail()) {
      out.push_back(Binomial::monomial(g.lead() / m));
    } else {
      out.push_back(*Binomial::difference(g.lead() / m, g.tail()->coeff, g.tail()->monomial / m,
                                          TermOrder::degrevlex(I.nvars())));
    }
  }
  return {I.ring(), std::move(out)};
}

Saturation saturate_by_monomial(const BinomialIdeal& I, const Monomial& m) {
  if (m.is_one()) return {canonical(I), 0};
  auto first = colon_monomial(I, m);
  if (same_ideal(first, I)) return {canonical(I), 0};
  // Doubling finds a power k at which the chain is stable; the least
  // stabilizing exponent then lies in (k/2, k].
  std::int64_t k = 1;
  BinomialIdeal stable = first;
  while (true) {
    auto next = colon_monomial(I, m.pow(checked::mul(k, 2)));
    if (same_ideal(next, stable)) break;
    stable = std::move(next);
    k *= 2;
  }
  std::int64_t lo = k / 2, hi = k;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (same_ideal(colon_monomial(I, m.pow(mid)), stable))
      hi = mid;
    else
      lo = mid;
  }
  return {canonical(stable), hi};
}

BinomialIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& K) {
  if (I.is_unit()) return canonical(K);
  if (K.is_unit()) return canonical(I);
  auto general = intersect_poly({I, K});
  auto b = to_binomial_ideal(general);
  if (!b) throw InternalError("intersection of binomial ideals is not binomial");
  return *b;
}

std::vector<Monomial> standard_monomials(const BinomialIdeal& I, const std::vector<bool>& vars_in) {
  const std::size_t n = I.nvars();
  std::vector<bool> vars = vars_in.empty() ? std::vector<bool>(n, true) : vars_in;
  const auto& G = I.gb();
  std::vector<Monomial> leads;
  for (const auto& g : G.elements) leads.push_back(g.lead());
  for (std::size_t i = 0; i < n; ++i) {
    if (!vars[i]) continue;
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      if (l[i] == 0) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && l[j] != 0) return false;
      return true;
    });
    if (!pure) throw DimensionError("quotient is infinite-dimensional in variable " + I.ring().name(i));
  }
  auto in_leads = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  Monomial one(n);
  if (in_leads(one)) return out;
  std::set<Monomial> seen{one};
  std::vector<Monomial> frontier{one};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      for (std::size_t i = 0; i < n; ++i) {
        if (!vars[i]) continue;
        auto c = m * Monomial::variable(n, i);
        if (in_leads(c) || !seen.insert(c).second) continue;
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  auto ord = TermOrder::degrevlex(n);
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

BinomialIdeal lattice_ideal_of_character(const PartialCharacter& rho, const CellStructure& cell, const RingSpec& ring) {
  if (rho.ambient() != cell.regular().size()) throw Error("character dimension does not match the cell");
  if (cell.nvars() != ring.size()) throw Error("cell does not match the ring");
  const auto& B = rho.lattice().basis();
  auto ord = TermOrder::degrevlex(ring.size());
  std::vector<Binomial> gens;
  for (std::size_t r = 0; r < B.rows(); ++r) {
    std::vector<Exponent> plus(B.cols(), 0), minus(B.cols(), 0);
    for (std::size_t c = 0; c < B.cols(); ++c) {
      const auto& v = B(r, c);
      if (!v.fits_slong_p()) throw OverflowError("lattice entry exceeds 64 bits");
      long x = v.get_si();
      (x >= 0 ? plus[c] : minus[c]) = x >= 0 ? x : checked::sub(0, x);
    }
    gens.push_back(*Binomial::difference(cell.embed(plus), rho.values()[r], cell.embed(minus), ord));
  }
  BinomialIdeal I(ring, std::move(gens));
  if (B.rows() == 0) return I;
  return saturate_by_monomial(I, cell.regular_product()).ideal;
}

PartialCharacter character_of_lattice_ideal(const BinomialIdeal& I, const CellStructure& cell) {
  const auto& G = I.gb();
  const auto& regular = cell.regular_mask();
  std::vector<std::vector<mpz_class>> rows;
  std::vector<RootOfUnity> values;
  for (const auto& g : G.elements) {
    if (!g.tail()) throw InternalError("monomial in what should be a lattice ideal");
    if (!g.supported_in(regular)) throw InternalError("lattice ideal involves a nilpotent variable");
    auto u = cell.restrict(g.lead());
    auto v = cell.restrict(g.tail()->monomial);
    std::vector<mpz_class> d;
    for (std::size_t k = 0; k < u.size(); ++k) d.emplace_back(static_cast<long>(u[k] - v[k]));
    rows.push_back(std::move(d));
    values.push_back(g.tail()->coeff);
  }
  const std::size_t dim = cell.regular().size();
  if (rows.empty()) return PartialCharacter(dim);
  return PartialCharacter::from_generators(IntMatrix(dim, rows), values);
}

std::int64_t cyclotomic_order(const BinomialIdeal& I) {
  std::int64_t d = 1;
  for (const auto& g : I.gb().elements)
    if (g.tail()) d = std::lcm(d, g.tail()->coeff.den());
  return conductor(d);
}

}  // namespace bindecomp
