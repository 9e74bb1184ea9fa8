#include "bindecomp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bindecomp/cellular.hpp"
#include "bindecomp/decomp.hpp"
#include "bindecomp/errors.hpp"
#include "bindecomp/groebner.hpp"
#include "bindecomp/io.hpp"
#include "bindecomp/polynomial.hpp"
#include "bindecomp/witness.hpp"
#include "json.hpp"

namespace bindecomp::cli {

namespace {

using nlohmann::json;

struct VerifyFailure : Error {
  using Error::Error;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

RingSpec parse_ring_list(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(trim(item));
  if (names.empty()) throw ParseError("empty variable list");
  return RingSpec(std::move(names));
}

ParsedIdeal read_input(const RunConfig& cfg) {
  if (cfg.ideal) {
    if (!cfg.ring) throw ParseError("--ideal needs --ring");
    return parse_generators(parse_ring_list(*cfg.ring), *cfg.ideal);
  }
  std::string text;
  if (cfg.path.empty() || cfg.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + cfg.path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (cfg.ring) return parse_generators(parse_ring_list(*cfg.ring), text);
  return parse_ideal(text);
}

class Renderer {
 public:
  Renderer(const RunConfig& cfg, const RingSpec& ring)
      : json_(cfg.format == "json"),
        ord_(cfg.order == "lex" ? TermOrder::lex(ring.size()) : TermOrder::degrevlex(ring.size())) {}

  bool json_mode() const { return json_; }

  std::vector<std::string> gens(const BinomialIdeal& I) const { return canonical_generators(I, ord_); }

  std::string print(const BinomialIdeal& I) const {
    auto g = gens(I);
    std::string s = "ideal(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i];
    return s + ")";
  }

  std::string print_set(const std::vector<BinomialIdeal>& ideals) const {
    std::string s = "{";
    for (std::size_t i = 0; i < ideals.size(); ++i) s += (i ? ", " : "") + print(ideals[i]);
    return s + "}";
  }

 private:
  bool json_;
  TermOrder ord_;
};

std::string variable_set(const RingSpec& ring, const std::vector<std::size_t>& vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + ring.name(vars[i]);
  return s + "}";
}

json variable_list(const RingSpec& ring, const std::vector<std::size_t>& vars) {
  json a = json::array();
  for (auto v : vars) a.push_back(ring.name(v));
  return a;
}

json splits_json(const RingSpec& ring, const std::vector<CellularSplit>& splits) {
  json a = json::array();
  for (const auto& s : splits) a.push_back({{"variable", ring.name(s.variable)}, {"exponent", s.exponent}});
  return a;
}

void print_splits(std::ostream& out, const RingSpec& ring, const std::vector<CellularSplit>& splits) {
  for (const auto& s : splits) out << "-- split on " << ring.name(s.variable) << ", exponent " << s.exponent << "\n";
}

void print_cyclotomic(std::ostream& out, std::int64_t d) {
  if (d > 1) out << "-- cyclotomic order " << d << " (ww" << d << ")\n";
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerifyFailure("verification failed: " + what);
}

bool intersection_equals(const std::vector<BinomialIdeal>& parts, const BinomialIdeal& I) {
  if (parts.empty()) return I.is_unit();
  if (parts.size() == 1) return same_ideal(parts.front(), I);
  return poly_equals(intersect_poly(parts), I);
}

std::vector<BinomialIdeal> prime_ideals(const std::vector<AssociatedPrime>& primes, const RingSpec& ring) {
  std::vector<BinomialIdeal> out;
  for (const auto& p : primes) out.push_back(p.ideal(ring));
  return out;
}

void verify_primes(const std::vector<AssociatedPrime>& primes, const BinomialIdeal& I) {
  for (const auto& p : primes) {
    check(saturate_character(p.character).size() == 1, "a prime has an unsaturated character");
    check(contains(p.ideal(I.ring()), I), "a prime does not contain the input");
  }
}

void finish_text(std::ostream& out, const RunConfig& cfg) {
  if (cfg.verify) out << "verified: true\n";
}

void finish_json(std::ostream& out, json doc, const RunConfig& cfg) {
  if (cfg.verify) doc["verified"] = true;
  out << doc.dump(2) << "\n";
}

json prime_components(const std::vector<AssociatedPrime>& primes, const Renderer& r, const RingSpec& ring,
                      bool mark_embedded) {
  auto ideals = prime_ideals(primes, ring);
  json comps = json::array();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool embedded = false;
    if (mark_embedded)
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (j != i && contains(ideals[i], ideals[j]) && !same_ideal(ideals[i], ideals[j])) embedded = true;
    auto g = r.gens(ideals[i]);
    comps.push_back({{"generators", g},
                     {"cyclotomic_order", cyclotomic_order(std::vector<AssociatedPrime>{primes[i]})},
                     {"associated_prime", g},
                     {"embedded", embedded}});
  }
  return comps;
}

int cmd_is_cellular(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out) {
  Renderer r(cfg, I.ring());
  if (I.is_unit()) throw UnsupportedInputError("the unit ideal has no cellular structure");
  auto res = is_cellular(I);
  if (cfg.verify) {
    if (auto* cell = std::get_if<CellStructure>(&res)) {
      check(same_ideal(colon_monomial(I, cell->regular_product()), I), "a cell variable is a zerodivisor");
      for (auto v : cell->nilpotent())
        check(saturate_by_monomial(I, Monomial::variable(I.nvars(), v)).ideal.is_unit(),
              "a variable outside the cell is not nilpotent");
    }
  }
  json doc;
  if (auto* cell = std::get_if<CellStructure>(&res)) {
    if (r.json_mode()) {
      doc = {{"cellular", true}, {"cell", variable_list(I.ring(), cell->regular())}};
    } else {
      out << "cellular, cell " << variable_set(I.ring(), cell->regular()) << "\n";
    }
  } else {
    const auto& nc = std::get<NotCellular>(res);
    if (r.json_mode()) {
      doc = {{"cellular", false}, {"zerodivisor", I.ring().name(nc.witness)}};
    } else {
      out << "not cellular, " << I.ring().name(nc.witness) << " is a zerodivisor but not nilpotent\n";
    }
  }
  if (r.json_mode()) finish_json(out, doc, cfg);
  else finish_text(out, cfg);
  return kOk;
}

int cmd_cellular_decomposition(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out) {
  Renderer r(cfg, I.ring());
  auto cd = cellular_decomposition(I);
  std::vector<BinomialIdeal> parts;
  for (const auto& c : cd.components) parts.push_back(c.ideal);
  if (cfg.verify) {
    check(intersection_equals(parts, I), "the components do not intersect to the input");
    for (const auto& c : cd.components) {
      auto res = is_cellular(c.ideal);
      check(std::holds_alternative<CellStructure>(res) && std::get<CellStructure>(res) == c.cell,
            "a component is not cellular");
    }
  }
  if (r.json_mode()) {
    json comps = json::array();
    for (const auto& c : cd.components)
      comps.push_back({{"generators", r.gens(c.ideal)},
                       {"cyclotomic_order", cyclotomic_order(c.ideal)},
                       {"cell", variable_list(I.ring(), c.cell.regular())}});
    finish_json(out, {{"components", comps}, {"stats", {{"splits", splits_json(I.ring(), cd.splits)}}}}, cfg);
  } else {
    print_splits(out, I.ring(), cd.splits);
    out << r.print_set(parts) << "\n";
    finish_text(out, cfg);
  }
  return kOk;
}

int cmd_primes(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out, bool minimal) {
  Renderer r(cfg, I.ring());
  Decomposer d({cfg.seed});
  auto primes = minimal ? d.minimal_primes(I) : d.associated_primes(I);
  if (cfg.verify) {
    verify_primes(primes, I);
    if (minimal) check(intersection_equals(prime_ideals(primes, I.ring()), d.radical(I)),
                       "the minimal primes do not intersect to the radical");
  }
  if (r.json_mode()) {
    json doc = {{"components", prime_components(primes, r, I.ring(), !minimal)},
                {"stats", {{"colon_computations", d.stats().colon_computations}}}};
    finish_json(out, doc, cfg);
  } else {
    print_cyclotomic(out, cyclotomic_order(primes));
    out << r.print_set(prime_ideals(primes, I.ring())) << "\n";
    finish_text(out, cfg);
  }
  return kOk;
}

int cmd_radical(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out) {
  Renderer r(cfg, I.ring());
  Decomposer d({cfg.seed});
  auto rad = d.radical(I);
  if (cfg.verify) {
    check(contains(rad, I), "the radical does not contain the input");
    check(intersection_equals(prime_ideals(d.minimal_primes(I), I.ring()), rad),
          "the radical is not the intersection of the minimal primes");
  }
  if (r.json_mode()) {
    json comps = json::array({{{"generators", r.gens(rad)}, {"cyclotomic_order", cyclotomic_order(rad)}}});
    finish_json(out, {{"components", comps}, {"stats", {{"colon_computations", 0}}}}, cfg);
  } else {
    out << r.print(rad) << "\n";
    finish_text(out, cfg);
  }
  return kOk;
}

int cmd_hull(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out) {
  Renderer r(cfg, I.ring());
  Decomposer d({cfg.seed});
  auto H = d.hull(I);
  if (cfg.verify) {
    check(contains(H, I), "the Hull does not contain the input");
    check(is_primary(H, {cfg.seed}), "the Hull is not primary");
    DecompOptions opts{cfg.seed};
    check(minimal_primes(H, opts) == minimal_primes(I, opts), "the Hull changes the minimal prime");
  }
  if (r.json_mode()) {
    auto primes = minimal_primes(I, {cfg.seed});
    json comp = {{"generators", r.gens(H)}, {"cyclotomic_order", cyclotomic_order(H)}, {"embedded", false}};
    if (primes.size() == 1) comp["associated_prime"] = r.gens(primes.front().ideal(I.ring()));
    finish_json(out, {{"components", json::array({comp})},
                      {"stats", {{"colon_computations", d.stats().colon_computations}}}}, cfg);
  } else {
    out << r.print(H) << "\n";
    finish_text(out, cfg);
  }
  return kOk;
}

int cmd_primary_decomposition(const RunConfig& cfg, const BinomialIdeal& I, std::ostream& out) {
  Renderer r(cfg, I.ring());
  Decomposer d({cfg.seed});
  auto comps = d.binomial_primary_decomposition(I);
  std::vector<BinomialIdeal> parts;
  for (const auto& c : comps) parts.push_back(c.ideal);
  if (cfg.verify) {
    check(intersection_equals(parts, I), "the components do not intersect to the input");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      check(is_primary(comps[i].ideal, {cfg.seed}), "a component is not primary");
      for (std::size_t j = 0; j < i; ++j) check(!(comps[i].prime == comps[j].prime), "two components share a prime");
    }
  }
  std::int64_t d_all = cyclotomic_order(comps);
  if (r.json_mode()) {
    json a = json::array();
    for (const auto& c : comps)
      a.push_back({{"generators", r.gens(c.ideal)},
                   {"cyclotomic_order", d_all},
                   {"associated_prime", r.gens(c.prime.ideal(I.ring()))},
                   {"embedded", c.embedded}});
    json stats = {{"colon_computations", d.stats().colon_computations},
                  {"splits", splits_json(I.ring(), d.stats().splits)}};
    finish_json(out, {{"components", a}, {"stats", stats}}, cfg);
  } else {
    print_splits(out, I.ring(), d.stats().splits);
    print_cyclotomic(out, d_all);
    out << r.print_set(parts) << "\n";
    finish_text(out, cfg);
  }
  return kOk;
}

int cmd_witness_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != "chain") throw UnsupportedInputError("unknown family " + cfg.family);
  if (cfg.size < 1) throw UnsupportedInputError("chain size must be positive");
  if (cfg.seeds < 1) throw UnsupportedInputError("at least one seed is needed");
  RingSpec ring({"a", "b"});
  BinomialIdeal I(ring, {Binomial::monomial(Monomial::variable(2, 0, cfg.size))});
  CellStructure cell(2, {1});
  std::vector<std::int64_t> counts;
  json per_seed = json::array();
  for (std::int64_t k = 0; k < cfg.seeds; ++k) {
    std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
    auto res = witness_search(I, cell, seed);
    counts.push_back(res.stats.colon_computations);
    per_seed.push_back({{"seed", seed}, {"colon_computations", res.stats.colon_computations}});
  }
  auto sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  std::int64_t median = sorted[sorted.size() / 2];
  std::optional<std::int64_t> exhaustive;
  if (cfg.exhaustive) exhaustive = witness_search_exhaustive(I, cell).stats.colon_computations;
  if (cfg.format == "json") {
    json doc = {{"family", cfg.family}, {"size", cfg.size}, {"ideal", canonical_print(I)}, {"seeds", per_seed},
                {"median", median}};
    if (exhaustive) doc["exhaustive"] = *exhaustive;
    out << doc.dump(2) << "\n";
  } else {
    out << "family " << cfg.family << " " << cfg.size << ": " << canonical_print(I) << ", cell {b}\n";
    for (std::size_t k = 0; k < counts.size(); ++k)
      out << "seed " << per_seed[k]["seed"].get<std::uint64_t>() << ": " << counts[k] << " colon computations\n";
    out << "median: " << median << "\n";
    if (exhaustive) out << "exhaustive: " << *exhaustive << "\n";
  }
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "text" && cfg.format != "json") throw ParseError("unknown format " + cfg.format);
  if (cfg.order != "degrevlex" && cfg.order != "lex") throw ParseError("unknown order " + cfg.order);
  if (cfg.command == "witness-bench") return cmd_witness_bench(cfg, out);
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end())
    throw ParseError("unknown command " + cfg.command);
  auto I = read_input(cfg).ideal();
  if (cfg.command == "is-cellular") return cmd_is_cellular(cfg, I, out);
  if (cfg.command == "cellular-decomposition") return cmd_cellular_decomposition(cfg, I, out);
  if (cfg.command == "associated-primes") return cmd_primes(cfg, I, out, false);
  if (cfg.command == "minimal-primes") return cmd_primes(cfg, I, out, true);
  if (cfg.command == "radical") return cmd_radical(cfg, I, out);
  if (cfg.command == "hull") return cmd_hull(cfg, I, out);
  return cmd_primary_decomposition(cfg, I, out);
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list = {"is-cellular", "cellular-decomposition", "associated-primes",
                                                "minimal-primes", "radical", "hull", "primary-decomposition",
                                                "witness-bench"};
  return list;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  // Output is buffered so a failing run writes nothing partial to stdout.
  std::ostringstream buf;
  int code = kOk;
  try {
    code = dispatch(config, buf);
  } catch (const VerifyFailure& e) {
    out << buf.str();
    err << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsupportedInputError& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  out << buf.str();
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Decompositions of binomial ideals", "bindecomp"};
  app.add_option("command", cfg.command, "command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("input", cfg.path, "input file (stdin when omitted)");
  app.add_option("--ring", cfg.ring, "comma-separated variables for --ideal or a bare generator list");
  app.add_option("--ideal", cfg.ideal, "comma-separated generators");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--verify", cfg.verify, "re-check each result");
  app.add_option("--order", cfg.order, "term order for printing")
      ->check(CLI::IsMember({"degrevlex", "lex"}))
      ->capture_default_str();
  app.add_option("--family", cfg.family, "witness-bench family")->capture_default_str();
  app.add_option("--size", cfg.size, "witness-bench family size")->capture_default_str();
  app.add_option("--seeds", cfg.seeds, "witness-bench seed count, starting at --seed")->capture_default_str();
  app.add_flag("!--no-exhaustive", cfg.exhaustive, "skip the exhaustive count in witness-bench");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  return run(cfg, out, err);
}

}  // namespace bindecomp::cli
