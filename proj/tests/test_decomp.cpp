#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("associated primes") {
  auto I = ideal("x, b", "x^2, x*b - x");
  CHECK(show_primes(associated_primes(I), I.ring()) == std::vector<std::string>{"ideal(b - 1, x)", "ideal(x)"});
  auto C = ideal("x", "x^3 - 1");
  CHECK(show_primes(associated_primes(C), C.ring()) ==
        std::vector<std::string>{"ideal(x - 1)", "ideal(x - ww3)", "ideal(x - ww3^2)"});
  auto P = ideal("x, y", "x - y");
  CHECK(show_primes(associated_primes(P), P.ring()) == std::vector<std::string>{"ideal(x - y)"});
  CHECK_THROWS_AS(associated_primes(BinomialIdeal::unit(P.ring())), UnsupportedInputError);
}

TEST_CASE("hull") {
  auto I = ideal("x, b", "x^2, x*b - x");
  CHECK(show(hull(I)) == "ideal(x)");
  auto Q = ideal("x, y", "x, y^2");
  CHECK(same_ideal(hull(Q), Q));
  auto M = ideal("x, y", "x^2, x*y, y^2");
  CHECK(same_ideal(hull(M), M));
  CHECK(same_ideal(hull(hull(I)), hull(I)));
  CHECK_THROWS_AS(hull(ideal("x", "x^3 - 1")), HullPreconditionError);
  CHECK_THROWS_AS(hull(ideal("x, y", "x^2 - x*y, x*y - y^2")), UnsupportedInputError);
}

TEST_CASE("minimal primary components") {
  auto I = ideal("x, b", "x^2, x*b - x");
  auto primes = associated_primes(I);
  REQUIRE(primes.size() == 2);
  std::map<std::string, std::string> got;
  for (const auto& p : primes) got[show(p.ideal(I.ring()))] = show(minimal_primary_component(I, p).ideal);
  CHECK(got["ideal(b - 1, x)"] == show(ideal("x, b", "x^2, b - 1")));
  CHECK(got["ideal(x)"] == "ideal(x)");
  auto P = ideal("x, y", "x - y");
  auto pp = associated_primes(P);
  CHECK(same_ideal(minimal_primary_component(P, pp.front()).ideal, P));
  auto other = associated_primes(ideal("x", "x^3 - 1"));
  CHECK_THROWS_AS(minimal_primary_component(ideal("x", "x - 1"), other.back()), HullPreconditionError);
}

TEST_CASE("binomial primary decomposition examples") {
  auto o4 = binomial_primary_decomposition(ideal("x, y", "x^2 - x*y, x*y - y^2"));
  CHECK(show_components(o4) == std::vector<std::string>{"ideal(x - y)", "ideal(x, y^2)"});
  for (const auto& c : o4) CHECK(c.embedded == (show(c.ideal) == "ideal(x, y^2)"));
  auto o3 = binomial_primary_decomposition(ideal("x", "x^3 - 1"));
  CHECK(show_components(o3) == std::vector<std::string>{"ideal(x - 1)", "ideal(x - ww3)", "ideal(x - ww3^2)"});
  CHECK(cyclotomic_order(o3) == 3);
  auto chain = binomial_primary_decomposition(ideal("a, b", "a^10000*b - a^10000"));
  CHECK(show_components(chain) == std::vector<std::string>{"ideal(a^10000)", "ideal(b - 1)"});
  CHECK_THROWS_AS(binomial_primary_decomposition(ideal("x", "1")), UnsupportedInputError);
}

TEST_CASE("minimal primes and radicals") {
  auto I = ideal("x, y", "x^2 - x*y, x*y - y^2");
  CHECK(show_primes(minimal_primes(I), I.ring()) == std::vector<std::string>{"ideal(x - y)"});
  CHECK(show(radical(I)) == "ideal(x - y)");
  auto C = ideal("x", "x^3 - 1");
  CHECK(minimal_primes(C).size() == 3);
  auto W = ideal("x, b", "x^2, x*b - x");
  CHECK(show(radical(W)) == "ideal(x)");
  auto P = ideal("x, y", "x - y");
  CHECK(same_ideal(radical(P), P));
  CHECK(show_primes(minimal_primes(P), P.ring()) == std::vector<std::string>{"ideal(x - y)"});
}

TEST_CASE("primary tests") {
  CHECK(is_primary(ideal("x, y", "x, y^2")));
  CHECK_FALSE(is_primary(ideal("x, y", "x^2 - x*y, x*y - y^2")));
  CHECK(is_primary(ideal("x, y", "x - y")));
  CHECK_FALSE(is_primary(ideal("x", "x^3 - 1")));
}

TEST_CASE("decomposition properties on random ideals") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 30; ++k) {
    auto I = random_unital_ideal(rng);
    Decomposer d({static_cast<std::uint64_t>(k)});
    auto comps = d.binomial_primary_decomposition(I);
    std::vector<BinomialIdeal> parts;
    for (const auto& c : comps) {
      parts.push_back(c.ideal);
      auto ap = associated_primes(c.ideal);
      REQUIRE(ap.size() == 1);
      CHECK(same_ideal(ap.front().ideal(I.ring()), c.prime.ideal(I.ring())));
    }
    CHECK(poly_equals(intersect_poly(parts), I));
    auto rad = radical(I);
    for (const auto& g : rad.gb().elements) CHECK(some_power_in(g, I, 6));
    CHECK(same_ideal(radical(rad), rad));
    auto mins = minimal_primes(I);
    auto ass = associated_primes(I, {99});
    for (const auto& p : mins) CHECK(std::find(ass.begin(), ass.end(), p) != ass.end());
    CHECK(associated_primes(I, {1}) == ass);
  }
}

TEST_CASE("hull matches the minimal part of the decomposition") {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (const auto& I : random_layered_ideals(rng, 25)) {
    if (minimal_primes(I).size() != 1) continue;
    ++checked;
    auto H = hull(I);
    CHECK(contains(H, I));
    CHECK(same_ideal(hull(H), H));
    std::vector<BinomialIdeal> minimal;
    for (const auto& c : binomial_primary_decomposition(I))
      if (!c.embedded) minimal.push_back(c.ideal);
    CHECK(poly_equals(intersect_poly(minimal), H));
    CHECK(is_primary(H));
  }
  CHECK(checked >= 5);
}
