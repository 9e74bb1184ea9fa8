#include "bindecomp/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace bindecomp {

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and fields

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("cyclotomic division of a lower degree polynomial");
  std::vector<mpz_class> q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw Error("cyclotomic polynomial of non-positive order");
  std::vector<mpz_class> p(static_cast<std::size_t>(d) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e = 1; e < d; ++e)
    if (d % e == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(e));
  return p;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::containing(const std::vector<RootOfUnity>& roots) {
  std::int64_t d = 2;
  for (const auto& r : roots) d = std::lcm(d, r.den());
  return std::make_shared<const CyclotomicField>(d);
}

CyclotomicField::CyclotomicField(std::int64_t order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
  if (order % 2 != 0) throw Error("cyclotomic fields are indexed by even orders");
  Element x = zero();
  powers_.push_back(one());
  if (degree() == 1) {
    // Q itself: zeta = -1.
    for (std::int64_t k = 1; k < order; ++k) powers_.push_back(from_integer(k % 2 == 0 ? 1 : -1));
    return;
  }
  x[1] = 1;
  for (std::int64_t k = 1; k < order; ++k) powers_.push_back(mul(powers_.back(), x));
}

CyclotomicField::Element CyclotomicField::one() const { return from_integer(1); }

CyclotomicField::Element CyclotomicField::from_integer(long v) const {
  Element e = zero();
  e[0] = v;
  return e;
}

CyclotomicField::Element CyclotomicField::from_root(const RootOfUnity& r) const {
  if (order_ % r.den() != 0) throw InternalError("root of unity outside the cyclotomic field");
  return powers_[static_cast<std::size_t>(r.num() * (order_ / r.den()))];
}

std::optional<RootOfUnity> CyclotomicField::as_root(const Element& e) const {
  for (std::size_t k = 0; k < powers_.size(); ++k)
    if (powers_[k] == e) return RootOfUnity(static_cast<std::int64_t>(k), order_);
  return std::nullopt;
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const {
  Element r = a;
  for (auto& c : r) c = -c;
  return r;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  const std::size_t n = degree();
  if (n == 1) return {a[0] * b[0]};
  std::vector<mpq_class> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = prod.size(); i-- > n;) {
    mpq_class c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) prod[i - n + j] -= c * modulus_[j];
  }
  prod.resize(n);
  return prod;
}

CyclotomicField::Element CyclotomicField::inv(const Element& a) const {
  if (is_zero(a)) throw InternalError("inverse of zero in a cyclotomic field");
  const std::size_t n = degree();
  // Solve (multiplication by a) y = 1 by Gaussian elimination.
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n + 1));
  Element col = a;
  Element x = zero();
  if (n > 1) x[1] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) M[i][j] = col[i];
    if (n > 1) col = mul(col, x);
  }
  M[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) throw InternalError("singular multiplication matrix in a cyclotomic field");
    std::swap(M[p], M[c]);
    mpq_class pivot = M[c][c];
    for (auto& v : M[c]) v /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      mpq_class f = M[i][c];
      for (std::size_t k = c; k <= n; ++k) M[i][k] -= f * M[c][k];
    }
  }
  Element y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = M[i][n];
  return y;
}

bool CyclotomicField::is_zero(const Element& a) {
  return std::all_of(a.begin(), a.end(), [](const mpq_class& c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic

namespace {

struct OrderLess {
  const TermOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

using TermMap = std::map<Monomial, CyclotomicField::Element, OrderLess>;

TermMap to_map(const Polynomial& p, const TermOrder& ord) {
  TermMap m(OrderLess{&ord});
  for (const auto& t : p) m.emplace(t.monomial, t.coeff);
  return m;
}

Polynomial from_map(const TermMap& m) {
  Polynomial p;
  p.reserve(m.size());
  for (const auto& [mono, c] : m) p.push_back({mono, c});
  return p;
}

// m -= c * x^shift * g
void sub_scaled(TermMap& m, const CyclotomicField::Element& c, const Monomial& shift, const Polynomial& g,
                const CyclotomicField& F) {
  for (const auto& t : g) {
    auto mono = t.monomial * shift;
    auto delta = F.mul(c, t.coeff);
    auto it = m.find(mono);
    if (it == m.end()) {
      m.emplace(std::move(mono), F.neg(delta));
    } else {
      it->second = F.sub(it->second, delta);
      if (CyclotomicField::is_zero(it->second)) m.erase(it);
    }
  }
}

Polynomial make_monic(Polynomial p, const CyclotomicField& F) {
  if (p.empty()) return p;
  auto inv = F.inv(p.front().coeff);
  for (auto& t : p) t.coeff = F.mul(t.coeff, inv);
  return p;
}

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis, std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip || basis[i].empty()) continue;
    if (basis[i].front().monomial.divides(m)) return &basis[i];
  }
  return nullptr;
}

// Full reduction by a monic basis.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& ord,
                  const CyclotomicField& F, std::size_t skip = SIZE_MAX) {
  TermMap work = to_map(p, ord);
  Polynomial out;
  while (!work.empty()) {
    auto it = work.begin();
    if (const Polynomial* g = find_reducer(it->first, basis, skip)) {
      auto c = it->second;
      auto shift = it->first / g->front().monomial;
      sub_scaled(work, c, shift, *g, F);
    } else {
      out.push_back({it->first, it->second});
      work.erase(it);
    }
  }
  return out;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const TermOrder& ord, const CyclotomicField& F) {
  auto L = lcm(f.front().monomial, g.front().monomial);
  TermMap m(OrderLess{&ord});
  sub_scaled(m, F.neg(F.one()), L / f.front().monomial, f, F);
  sub_scaled(m, F.one(), L / g.front().monomial, g, F);
  return from_map(m);
}

Monomial widen(const Monomial& m, std::size_t n) {
  auto e = m.exponents();
  e.resize(n, 0);
  return Monomial(std::move(e));
}

std::vector<Exponent> exps_narrow(const Monomial& m, std::size_t n) {
  auto e = m.exponents();
  e.resize(n);
  return e;
}

CyclotomicField::Element embed(const CyclotomicField::Element& e, const CyclotomicField& from,
                               const CyclotomicField& to) {
  if (from.order() == to.order()) return e;
  if (to.order() % from.order() != 0) throw InternalError("cyclotomic field embedding into a non-extension");
  const std::int64_t step = to.order() / from.order();
  auto out = to.zero();
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    auto z = to.from_root(RootOfUnity(static_cast<std::int64_t>(j) * step % to.order(), to.order()));
    for (auto& c : z) c *= e[j];
    out = to.add(out, z);
  }
  return out;
}

std::vector<RootOfUnity> coefficient_roots(const BinomialIdeal& I) {
  std::vector<RootOfUnity> roots;
  for (const auto& g : I.gb().elements)
    if (g.tail()) roots.push_back(g.tail()->coeff);
  return roots;
}

PolyIdeal reembed(const PolyIdeal& X, std::shared_ptr<const CyclotomicField> F) {
  if (X.field->order() == F->order()) return X;
  PolyIdeal out{X.ring, F, {}};
  for (const auto& p : X.basis) {
    Polynomial q;
    for (const auto& t : p) q.push_back({t.monomial, embed(t.coeff, *X.field, *F)});
    out.basis.push_back(std::move(q));
  }
  return out;
}

std::shared_ptr<const CyclotomicField> common_field(const PolyIdeal& X, const BinomialIdeal& I) {
  auto roots = coefficient_roots(I);
  roots.emplace_back(1, X.field->order());
  return CyclotomicField::containing(roots);
}

PolyIdeal intersect_two(const PolyIdeal& A, const PolyIdeal& B) {
  if (A.is_unit()) return B;
  if (B.is_unit()) return A;
  const auto& F = *A.field;
  const std::size_t n = A.ring.size();
  std::vector<bool> block(n + 1, false);
  block[n] = true;
  auto ord = TermOrder::elimination(block);
  Monomial t = Monomial::variable(n + 1, n);
  std::vector<Polynomial> gens;
  for (const auto& p : A.basis) {
    Polynomial q;
    for (const auto& term : p) q.push_back({widen(term.monomial, n + 1) * t, term.coeff});
    gens.push_back(std::move(q));
  }
  for (const auto& p : B.basis) {
    TermMap m(OrderLess{&ord});
    for (const auto& term : p) {
      auto w = widen(term.monomial, n + 1);
      m.emplace(w, term.coeff);
      m.emplace(w * t, F.neg(term.coeff));
    }
    gens.push_back(from_map(m));
  }
  auto G = poly_reduced_gb(std::move(gens), ord, F);
  PolyIdeal out{A.ring, A.field, {}};
  for (const auto& p : G) {
    bool has_t = std::any_of(p.begin(), p.end(), [&](const PolyTerm& term) { return term.monomial[n] != 0; });
    if (has_t) continue;
    Polynomial q;
    for (const auto& term : p) q.push_back({Monomial(exps_narrow(term.monomial, n)), term.coeff});
    out.basis.push_back(std::move(q));
  }
  auto dr = TermOrder::degrevlex(n);
  std::sort(out.basis.begin(), out.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return dr.less(a.front().monomial, b.front().monomial);
  });
  return out;
}

bool same_polynomial(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].monomial == b[i].monomial) || a[i].coeff != b[i].coeff) return false;
  return true;
}

}  // namespace

Polynomial poly_normal_form(Polynomial p, const std::vector<Polynomial>& basis, const TermOrder& ord,
                            const CyclotomicField& F) {
  return reduce(p, basis, ord, F);
}

std::vector<Polynomial> poly_reduced_gb(std::vector<Polynomial> gens, const TermOrder& ord, const CyclotomicField& F) {
  std::vector<Polynomial> basis;
  std::set<std::tuple<Exponent, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit = false;

  auto add = [&](const Polynomial& f) {
    auto r = make_monic(reduce(f, basis, ord, F), F);
    if (r.empty()) return;
    if (r.front().monomial.is_one()) {
      unit = true;
      return;
    }
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i) {
      queue.emplace(lcm(basis[i].front().monomial, r.front().monomial).degree(), j, i);
      pending.emplace(i, j);
    }
    basis.push_back(std::move(r));
  };

  auto chain = [&](std::size_t i, std::size_t j) {
    auto L = lcm(basis[i].front().monomial, basis[j].front().monomial);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j || !basis[k].front().monomial.divides(L)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (pending.count({p1.first, p1.second}) || pending.count({p2.first, p2.second})) continue;
      return true;
    }
    return false;
  };

  for (auto& g : gens) {
    TermMap m = to_map(g, ord);
    add(from_map(m));
    if (unit) break;
  }
  while (!unit && !queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (gcd(basis[i].front().monomial, basis[j].front().monomial).is_one()) continue;
    if (chain(i, j)) continue;
    add(s_poly(basis[i], basis[j], ord, F));
  }
  if (unit) return {Polynomial{{Monomial(ord.size()), F.one()}}};

  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.front().monomial, b.front().monomial); });
  std::vector<Polynomial> kept;
  for (auto& p : basis) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& k) {
      return k.front().monomial.divides(p.front().monomial);
    });
    if (!redundant) kept.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Polynomial tail(kept[i].begin() + 1, kept[i].end());
    Polynomial r{kept[i].front()};
    for (auto& t : reduce(tail, kept, ord, F, i)) r.push_back(std::move(t));
    reduced.push_back(std::move(r));
  }
  return reduced;
}

Polynomial to_polynomial(const Binomial& b, const TermOrder& ord, const CyclotomicField& F) {
  auto nb = b.normalized(ord);
  Polynomial p{{nb.lead(), F.one()}};
  if (nb.tail()) p.push_back({nb.tail()->monomial, F.neg(F.from_root(nb.tail()->coeff))});
  return p;
}

PolyIdeal to_poly_ideal(const BinomialIdeal& I, std::shared_ptr<const CyclotomicField> F) {
  PolyIdeal X{I.ring(), F, {}};
  auto ord = TermOrder::degrevlex(I.nvars());
  for (const auto& g : I.gb().elements) X.basis.push_back(to_polynomial(g, ord, *F));
  return X;
}

PolyIdeal intersect_poly(const std::vector<BinomialIdeal>& ideals) {
  if (ideals.empty()) throw Error("intersection of an empty list of ideals");
  std::vector<RootOfUnity> roots;
  for (const auto& I : ideals) {
    if (!(I.ring() == ideals.front().ring())) throw Error("intersection across different rings");
    auto r = coefficient_roots(I);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  auto F = CyclotomicField::containing(roots);
  // Smaller ideals first keeps intermediate bases small.
  std::vector<const BinomialIdeal*> order;
  for (const auto& I : ideals) order.push_back(&I);
  PolyIdeal X = to_poly_ideal(*order.front(), F);
  for (std::size_t k = 1; k < order.size(); ++k) X = intersect_two(X, to_poly_ideal(*order[k], F));
  return X;
}

bool poly_contained_in(const PolyIdeal& X, const BinomialIdeal& I) {
  if (I.is_unit()) return true;
  auto F = common_field(X, I);
  auto Xe = reembed(X, F);
  auto Ip = to_poly_ideal(I, F);
  auto ord = TermOrder::degrevlex(I.nvars());
  return std::all_of(Xe.basis.begin(), Xe.basis.end(),
                     [&](const Polynomial& p) { return reduce(p, Ip.basis, ord, *F).empty(); });
}

bool poly_equals(const PolyIdeal& X, const BinomialIdeal& I) {
  auto F = common_field(X, I);
  auto Xe = reembed(X, F);
  auto Ip = to_poly_ideal(I, F);
  if (Xe.basis.size() != Ip.basis.size()) return false;
  for (std::size_t i = 0; i < Xe.basis.size(); ++i)
    if (!same_polynomial(Xe.basis[i], Ip.basis[i])) return false;
  return true;
}

std::optional<BinomialIdeal> to_binomial_ideal(const PolyIdeal& X) {
  std::vector<Binomial> gens;
  const auto& F = *X.field;
  for (const auto& p : X.basis) {
    if (p.size() > 2) return std::nullopt;
    if (p.size() == 1) {
      gens.push_back(Binomial::monomial(p.front().monomial));
      continue;
    }
    auto lambda = F.as_root(F.neg(p[1].coeff));
    if (!lambda) return std::nullopt;
    gens.push_back(*Binomial::difference(p[0].monomial, *lambda, p[1].monomial, TermOrder::degrevlex(X.ring.size())));
  }
  return BinomialIdeal(X.ring, std::move(gens));
}

std::string format_polynomial(const Polynomial& p, const RingSpec& ring, const CyclotomicField* field) {
  if (p.empty()) return "0";
  std::string zeta = field ? "ww" + std::to_string(field->order()) : "ww";
  auto power = [&](std::size_t j) { return j == 1 ? zeta : zeta + "^" + std::to_string(j); };
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p[i].coeff;
    std::string mono;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      auto e = p[i].monomial[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    bool rational = std::all_of(c.begin() + (c.empty() ? 0 : 1), c.end(), [](const mpq_class& q) { return q == 0; });
    if (rational) {
      mpq_class q = c.empty() ? mpq_class(0) : c[0];
      bool negative = q < 0;
      if (negative) q = -q;
      if (i) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      if (q != 1 || mono.empty()) os << q << (mono.empty() ? "" : "*");
    } else {
      if (i) os << " + ";
      os << "(";
      bool first = true;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        mpq_class q = c[j];
        bool negative = q < 0;
        if (negative) q = -q;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (j == 0) os << q;
        else if (q == 1) os << power(j);
        else os << q << "*" << power(j);
      }
      os << ")" << (mono.empty() ? "" : "*");
    }
    os << mono;
  }
  return os.str();
}

}  // namespace bindecomp
