#include "bindecomp/io.hpp"

#include <gmpxx.h>

#include <cctype>
#include <sstream>

#include "bindecomp/groebner.hpp"
#include "json.hpp"

namespace bindecomp {

namespace {

// A term q * z * x^m with q rational and z a root of unity.
struct RawTerm {
  mpq_class scalar = 1;
  RootOfUnity root;
  Monomial monomial;
};

class GeneratorParser {
 public:
  GeneratorParser(const RingSpec& ring, std::string_view src) : ring_(ring), src_(src) {}

  std::vector<std::vector<RawTerm>> parse_list() {
    std::vector<std::vector<RawTerm>> gens;
    skip_ws();
    if (at_end()) return gens;
    while (true) {
      gens.push_back(parse_generator());
      skip_ws();
      if (at_end()) break;
      expect(',');
    }
    return gens;
  }

 private:
  std::vector<RawTerm> parse_generator() {
    std::vector<RawTerm> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    terms.push_back(parse_term(negative));
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = get() == '-';
      terms.push_back(parse_term(negative));
    }
    if (terms.size() > 2) throw ParseError("generator has " + std::to_string(terms.size()) + " terms; binomials have at most two");
    return terms;
  }

  RawTerm parse_term(bool negative) {
    RawTerm t;
    t.monomial = Monomial(ring_.size());
    if (negative) t.scalar = -1;
    parse_factor(t);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      get();
      parse_factor(t);
    }
    return t;
  }

  void parse_factor(RawTerm& t) {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(parse_digits(), 10);
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        mpz_class den(parse_digits(), 10);
        if (den == 0) throw ParseError("zero denominator");
        q /= den;
      }
      q.canonicalize();
      t.scalar *= q;
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) throw error("expected a variable or a number");
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name.push_back(get());
    Exponent power = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      power = parse_exponent();
    }
    if (auto root = root_symbol(name)) {
      t.root = t.root * root->pow(power % root->den());
      return;
    }
    auto idx = ring_.index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'");
    t.monomial = t.monomial * Monomial::variable(ring_.size(), *idx, power);
  }

  static std::optional<RootOfUnity> root_symbol(const std::string& name) {
    if (name.size() < 3 || name[0] != 'w' || name[1] != 'w') return std::nullopt;
    std::int64_t d = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      d = checked::add(checked::mul(d, 10), name[i] - '0');
    }
    if (d < 1) throw ParseError("root of unity symbol of order zero");
    return RootOfUnity(1, d);
  }

  std::string parse_digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(get());
    if (s.empty()) throw error("expected digits");
    return s;
  }

  Exponent parse_exponent() {
    auto s = parse_digits();
    Exponent e = 0;
    for (char c : s) e = checked::add(checked::mul(e, 10), c - '0');
    return e;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  char get() { return src_[pos_++]; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw error(std::string("expected '") + c + "'");
    get();
  }
  ParseError error(const std::string& what) const {
    return ParseError(what + " at offset " + std::to_string(pos_));
  }

  const RingSpec& ring_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

// -1 as a root of unity times a rational sign.
std::optional<RootOfUnity> unit_ratio(const mpq_class& q) {
  if (q == 1) return RootOfUnity::one();
  if (q == -1) return RootOfUnity::minus_one();
  return std::nullopt;
}

// Combine like terms and normalize.  Returns false (with a reason) when the
// generator is a binomial whose coefficient ratio is not a root of unity.
bool build_generator(std::vector<RawTerm> terms, const RingSpec& ring, std::vector<Binomial>& out,
                     std::string& reason) {
  auto ord = TermOrder::degrevlex(ring.size());
  if (terms.size() == 2 && terms[0].monomial == terms[1].monomial) {
    auto& a = terms[0];
    auto& b = terms[1];
    mpq_class sum;
    if (a.root == b.root) {
      sum = a.scalar + b.scalar;
    } else if (a.root == b.root * RootOfUnity::minus_one()) {
      sum = a.scalar - b.scalar;
    } else {
      throw ParseError("sum of distinct roots of unity in one coefficient is not supported");
    }
    if (sum == 0) return true;
    a.scalar = sum;
    terms.pop_back();
  }
  for (const auto& t : terms)
    if (t.scalar == 0) {
      terms.erase(std::remove_if(terms.begin(), terms.end(), [](const RawTerm& r) { return r.scalar == 0; }),
                  terms.end());
      break;
    }
  if (terms.empty()) return true;
  if (terms.size() == 1) {
    out.push_back(Binomial::monomial(terms[0].monomial));
    return true;
  }
  auto sign = unit_ratio(terms[1].scalar / terms[0].scalar);
  if (!sign) {
    mpq_class r = terms[1].scalar / terms[0].scalar;
    reason = "coefficient ratio " + r.get_str() + " is not a root of unity";
    return false;
  }
  auto b = Binomial::from_terms(terms[0].monomial, terms[0].root,
                                std::make_pair(terms[1].monomial, terms[1].root * *sign), ord);
  if (b) out.push_back(*b);
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.emplace_back(trim(cur));
  return out;
}

}  // namespace

BinomialIdeal ParsedIdeal::ideal() const {
  if (!unital) throw UnsupportedInputError("ideal is not generated by unital binomials: " + non_unital_reason);
  return {ring, generators};
}

ParsedIdeal parse_generators(const RingSpec& ring, std::string_view generators) {
  ParsedIdeal p;
  p.ring = ring;
  GeneratorParser parser(ring, generators);
  for (auto& terms : parser.parse_list()) {
    std::string reason;
    if (!build_generator(std::move(terms), ring, p.generators, reason) && p.unital) {
      p.unital = false;
      p.non_unital_reason = reason;
    }
  }
  if (!p.unital) p.generators.clear();
  return p;
}

ParsedIdeal parse_ideal_text(std::string_view text) {
  std::optional<RingSpec> ring;
  std::string gens;
  bool in_gens = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("ring:", 0) == 0) {
      if (ring) throw ParseError("more than one ring line");
      ring = RingSpec(split_names(t.substr(5)));
      in_gens = false;
      continue;
    }
    if (t.rfind("I:", 0) == 0) {
      if (!ring) throw ParseError("the ring line must precede the ideal");
      if (in_gens || !gens.empty()) throw ParseError("one ideal per source");
      gens = std::string(t.substr(2));
      in_gens = true;
      continue;
    }
    if (!in_gens) throw ParseError("unexpected line '" + std::string(t) + "'");
    gens += " ";
    gens += std::string(t);
  }
  if (!ring) throw ParseError("missing 'ring:' line");
  if (!in_gens) throw ParseError("missing 'I:' line");
  return parse_generators(*ring, gens);
}

ParsedIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> names = j.at("variables").get<std::vector<std::string>>();
    ParsedIdeal p;
    p.ring = RingSpec(names);
    const std::size_t n = names.size();
    auto ord = TermOrder::degrevlex(n);
    auto exps = [&](const nlohmann::json& a) {
      auto v = a.get<std::vector<Exponent>>();
      if (v.size() != n) throw ParseError("exponent vector has the wrong length");
      for (auto e : v)
        if (e < 0) throw ParseError("negative exponent");
      return Monomial(std::move(v));
    };
    for (const auto& g : j.at("generators")) {
      Monomial lead = exps(g.at("lead"));
      if (!g.contains("tail") || g.at("tail").is_null()) {
        p.generators.push_back(Binomial::monomial(lead));
        continue;
      }
      Monomial tail = exps(g.at("tail"));
      RootOfUnity lambda;
      if (g.contains("coeff")) {
        const auto& c = g.at("coeff");
        auto den = c.at("den").get<std::int64_t>();
        if (den == 0) throw ParseError("zero denominator in coefficient");
        lambda = RootOfUnity(c.at("num").get<std::int64_t>(), den);
      }
      if (auto b = Binomial::difference(lead, lambda, tail, ord)) p.generators.push_back(*b);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

ParsedIdeal parse_ideal(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_ideal_json(t);
  return parse_ideal_text(t);
}

// ---------------------------------------------------------------------------
// Printing

std::string format_root(const RootOfUnity& r) {
  if (r.is_one()) return "1";
  std::string s = "ww" + std::to_string(r.den());
  if (r.num() != 1) s += "^" + std::to_string(r.num());
  return s;
}

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string format_binomial(const Binomial& b, const RingSpec& ring) {
  std::string s = format_monomial(b.lead(), ring);
  if (!b.tail()) return s;
  const auto& [v, lambda] = *b.tail();
  // x^u - lambda x^v, printed with "+" when -lambda has the smaller order.
  RootOfUnity negated = lambda * RootOfUnity::minus_one();
  bool plus = negated.den() < lambda.den();
  RootOfUnity c = plus ? negated : lambda;
  s += plus ? " + " : " - ";
  if (c.is_one()) return s + format_monomial(v, ring);
  s += format_root(c);
  if (!v.is_one()) s += "*" + format_monomial(v, ring);
  return s;
}

std::vector<std::string> canonical_generators(const BinomialIdeal& I, const TermOrder& ord) {
  std::vector<std::string> out;
  for (const auto& g : I.gb(ord).elements) out.push_back(format_binomial(g, I.ring()));
  return out;
}

std::vector<std::string> canonical_generators(const BinomialIdeal& I) {
  return canonical_generators(I, TermOrder::degrevlex(I.nvars()));
}

std::string canonical_print(const BinomialIdeal& I, const TermOrder& ord) {
  std::string s = "ideal(";
  auto gens = canonical_generators(I, ord);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i];
  }
  return s + ")";
}

std::string canonical_print(const BinomialIdeal& I) { return canonical_print(I, TermOrder::degrevlex(I.nvars())); }

}  // namespace bindecomp
