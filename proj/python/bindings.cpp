#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bindecomp/cellular.hpp"
#include "bindecomp/cli.hpp"
#include "bindecomp/decomp.hpp"
#include "bindecomp/errors.hpp"
#include "bindecomp/groebner.hpp"
#include "bindecomp/io.hpp"
#include "bindecomp/witness.hpp"

namespace py = pybind11;
using namespace bindecomp;

namespace {

BinomialIdeal make_ideal(const std::vector<std::string>& variables, const std::string& generators) {
  return parse_generators(RingSpec(variables), generators).ideal();
}

std::vector<std::string> names_of(const RingSpec& ring, const std::vector<std::size_t>& vars) {
  std::vector<std::string> out;
  for (auto v : vars) out.push_back(ring.name(v));
  return out;
}

py::dict character_dict(const PartialCharacter& ch) {
  std::vector<std::vector<long>> basis;
  const auto& B = ch.lattice().basis();
  for (std::size_t r = 0; r < B.rows(); ++r) {
    std::vector<long> row;
    for (std::size_t c = 0; c < B.cols(); ++c) row.push_back(B(r, c).get_si());
    basis.push_back(row);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> values;
  for (const auto& v : ch.values()) values.emplace_back(v.num(), v.den());
  py::dict d;
  d["basis"] = basis;
  d["values"] = values;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decompositions of binomial ideals with root-of-unity coefficients";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "ExponentOverflowError", PyExc_OverflowError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<BinomialIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("variables"), py::arg("generators"))
      .def_static("parse", [](const std::string& text) { return parse_ideal(text).ideal(); }, py::arg("text"),
                  "Parse the text or JSON dialect.")
      .def_property_readonly("variables", [](const BinomialIdeal& I) { return I.ring().names(); })
      .def_property_readonly("generators", [](const BinomialIdeal& I) { return canonical_generators(I); })
      .def("is_unit", &BinomialIdeal::is_unit)
      .def("is_zero", &BinomialIdeal::is_zero)
      .def("contains", [](const BinomialIdeal& I, const BinomialIdeal& K) { return contains(I, K); },
           "Whether the other ideal lies in this one.")
      .def("__eq__", [](const BinomialIdeal& I, const BinomialIdeal& K) { return same_ideal(I, K); })
      .def("__hash__", [](const BinomialIdeal& I) { return py::hash(py::str(canonical_print(I))); })
      .def("__str__", [](const BinomialIdeal& I) { return canonical_print(I); })
      .def("__repr__", [](const BinomialIdeal& I) { return "<Ideal " + canonical_print(I) + ">"; });

  py::class_<PrimaryComponent>(m, "Component")
      .def_readonly("ideal", &PrimaryComponent::ideal)
      .def_readonly("embedded", &PrimaryComponent::embedded)
      .def_property_readonly("prime", [](const PrimaryComponent& c) { return c.prime.ideal(c.ideal.ring()); })
      .def("__repr__", [](const PrimaryComponent& c) {
        return "<Component " + canonical_print(c.ideal) + (c.embedded ? " embedded>" : ">");
      });

  m.def("is_cellular", [](const BinomialIdeal& I) -> py::object {
        auto r = is_cellular(I);
        if (auto* cell = std::get_if<CellStructure>(&r)) return py::cast(names_of(I.ring(), cell->regular()));
        return py::none();
      }, py::arg("ideal"), "The cell variables, or None when the ideal is not cellular.");

  m.def("cellular_decomposition", [](const BinomialIdeal& I) {
        std::vector<BinomialIdeal> out;
        for (auto& c : cellular_decomposition(I).components) out.push_back(c.ideal);
        return out;
      }, py::arg("ideal"));

  auto primes = [](std::vector<AssociatedPrime> ps, const RingSpec& ring) {
    std::vector<BinomialIdeal> out;
    for (const auto& p : ps) out.push_back(p.ideal(ring));
    return out;
  };
  m.def("associated_primes", [primes](const BinomialIdeal& I, std::uint64_t seed) {
        return primes(associated_primes(I, {seed}), I.ring());
      }, py::arg("ideal"), py::arg("seed") = 0);
  m.def("minimal_primes", [primes](const BinomialIdeal& I) { return primes(minimal_primes(I), I.ring()); },
        py::arg("ideal"));
  m.def("radical", [](const BinomialIdeal& I) { return radical(I); }, py::arg("ideal"));
  m.def("hull", [](const BinomialIdeal& I, std::uint64_t seed) { return hull(I, {seed}); }, py::arg("ideal"),
        py::arg("seed") = 0);
  m.def("is_primary", [](const BinomialIdeal& I) { return is_primary(I); }, py::arg("ideal"));
  m.def("primary_decomposition", [](const BinomialIdeal& I, std::uint64_t seed) {
        return binomial_primary_decomposition(I, {seed});
      }, py::arg("ideal"), py::arg("seed") = 0);
  m.def("cyclotomic_order", [](const std::vector<PrimaryComponent>& comps) { return cyclotomic_order(comps); },
        py::arg("components"));

  m.def("witness_search", [](const BinomialIdeal& I, std::uint64_t seed, bool exhaustive) {
        auto cell = require_cellular(I);
        auto r = exhaustive ? witness_search_exhaustive(I, cell) : witness_search(I, cell, seed);
        py::list lattices;
        for (const auto& e : r.lattices) {
          py::dict d = character_dict(e.character);
          std::vector<std::string> w;
          for (const auto& mono : e.witnesses) w.push_back(format_monomial(mono, I.ring()));
          d["witnesses"] = w;
          lattices.append(d);
        }
        py::dict stats;
        stats["colon_computations"] = r.stats.colon_computations;
        stats["todo_initial"] = r.stats.todo_initial;
        stats["todo_pruned"] = r.stats.todo_pruned;
        return py::make_tuple(lattices, stats);
      }, py::arg("ideal"), py::arg("seed") = 0, py::arg("exhaustive") = false);

  m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      }, py::arg("args"), "Run a command-line invocation in-process: (exit code, stdout, stderr).");
}
