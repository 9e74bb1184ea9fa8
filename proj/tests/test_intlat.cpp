#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& M) {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t r = 0; r < M.rows(); ++r) out.push_back(M.row(r));
  return out;
}

bool echelon(const IntMatrix& H) {
  std::size_t prev = 0;
  for (std::size_t r = 0; r < H.rows(); ++r) {
    std::size_t p = 0;
    while (p < H.cols() && H(r, p) == 0) ++p;
    if (p == H.cols() || (r > 0 && p <= prev) || H(r, p) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (H(above, p) < 0 || H(above, p) >= H(r, p)) return false;
    prev = p;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  auto id = IntMatrix::identity(3);
  CHECK(hnf(id).H == id);
  CHECK(hnf(id).U == id);
  auto h = hnf(IntMatrix::from_rows(2, {{4, 6}, {2, 2}}));
  CHECK(h.H == IntMatrix::from_rows(2, {{2, 0}, {0, 2}}));
  CHECK(hnf(IntMatrix::from_rows(2, {{0, 0}})).H.rows() == 0);
}

TEST_CASE("hnf and snf on random matrices") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 80; ++k) {
    std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::uniform_int_distribution<int> e(-9, 9);
    std::vector<std::vector<std::int64_t>> data(rows, std::vector<std::int64_t>(cols));
    for (auto& r : data)
      for (auto& x : r) x = e(rng);
    auto M = IntMatrix::from_rows(cols, data);

    auto h = hnf(M);
    CHECK(echelon(h.H));
    CHECK(abs(cofactor_det(rows_of(h.U))) == 1);
    auto UM = h.U * M;
    for (std::size_t r = 0; r < UM.rows(); ++r) {
      if (r < h.H.rows()) CHECK(UM.row(r) == h.H.row(r));
      else CHECK(UM.is_zero_row(r));
    }
    CHECK(hnf(h.H).H == h.H);
    for (std::size_t r = 0; r < M.rows(); ++r) CHECK(Lattice::span(h.H).contains(M.row(r)));

    auto s = snf(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(abs(cofactor_det(rows_of(s.U))) == 1);
    CHECK(abs(cofactor_det(rows_of(s.V))) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    for (const auto& d : s.invariants) CHECK(d > 0);
    if (rows == cols) {
      mpz_class prod = 1;
      for (const auto& d : s.invariants) prod *= d;
      auto det = cofactor_det(rows_of(M));
      if (det != 0) CHECK(prod == abs(det));
      CHECK(determinant(M) == det);
    }
  }
}

TEST_CASE("snf examples") {
  auto s = snf(IntMatrix::from_rows(2, {{2, 0}, {0, 3}}));
  CHECK(s.invariants == std::vector<mpz_class>{1, 6});
  CHECK(snf(IntMatrix::identity(3)).invariants == std::vector<mpz_class>{1, 1, 1});
  CHECK(snf(IntMatrix::from_rows(1, {{2}})).invariants == std::vector<mpz_class>{2});
}

TEST_CASE("integer kernel") {
  auto M = IntMatrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}});
  auto K = integer_kernel(M);
  CHECK(K.rows() == 2);
  for (std::size_t r = 0; r < K.rows(); ++r) {
    auto row = K.row(r);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      mpz_class dot = 0;
      for (std::size_t c = 0; c < 3; ++c) dot += M(i, c) * row[c];
      CHECK(dot == 0);
    }
  }
  // Saturated: index 1.
  CHECK(minor_rank_and_index(rows_of(K), 3).second == 1);
}

TEST_CASE("lattice saturation examples") {
  auto L = Lattice::span(IntMatrix::from_rows(2, {{2, -2}}));
  auto s = saturate_lattice(L);
  CHECK(s.lattice == Lattice::span(IntMatrix::from_rows(2, {{1, -1}})));
  CHECK(s.index == 2);
  auto e = Lattice::span(IntMatrix::from_rows(2, {{1, 0}}));
  CHECK(saturate_lattice(e).lattice == e);
  CHECK(saturate_lattice(e).index == 1);
  auto three = Lattice::span(IntMatrix::from_rows(1, {{3}}));
  CHECK(saturate_lattice(three).lattice == Lattice::span(IntMatrix::from_rows(1, {{1}})));
  CHECK(saturate_lattice(three).index == 3);
  CHECK(lattice_index(three) == 3);
}

TEST_CASE("saturation against the minor-gcd oracle") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    auto L = Lattice::span(random_lattice_basis(rng, 4, 3, 6));
    auto s = saturate_lattice(L);
    auto [rank, index] = minor_rank_and_index(rows_of(L.basis()), 4);
    CHECK(L.rank() == rank);
    CHECK(s.lattice.rank() == rank);
    CHECK(s.index == index);
    CHECK(s.lattice.contains(L));
    auto again = saturate_lattice(s.lattice);
    CHECK(again.lattice == s.lattice);
    CHECK(again.index == 1);
  }
}

TEST_CASE("character saturation examples") {
  auto three = PartialCharacter::from_generators(IntMatrix::from_rows(1, {{3}}), {RootOfUnity::one()});
  auto sats = saturate_character(three);
  REQUIRE(sats.size() == 3);
  std::vector<RootOfUnity> values;
  for (const auto& s : sats) values.push_back(s(to_mpz({1})));
  CHECK(values == std::vector<RootOfUnity>{{0, 1}, {1, 3}, {2, 3}});

  auto sat = PartialCharacter::from_generators(IntMatrix::from_rows(2, {{1, -1}}), {{1, 5}});
  CHECK(saturate_character(sat) == std::vector<PartialCharacter>{sat});

  auto twice = PartialCharacter::from_generators(IntMatrix::from_rows(2, {{2, -2}}), {RootOfUnity::one()});
  auto two = saturate_character(twice);
  REQUIRE(two.size() == 2);
  std::vector<RootOfUnity> tv;
  for (const auto& s : two) tv.push_back(s(to_mpz({1, -1})));
  std::sort(tv.begin(), tv.end());
  CHECK(tv == std::vector<RootOfUnity>{RootOfUnity::one(), RootOfUnity::minus_one()});
}

TEST_CASE("character evaluation") {
  auto triv = PartialCharacter::from_generators(IntMatrix::from_rows(2, {{1, 1}}), {RootOfUnity::one()});
  CHECK(character_eval(triv, to_mpz({-3, -3})).is_one());
  auto z = PartialCharacter::from_generators(IntMatrix::from_rows(1, {{1}}), {{1, 3}});
  CHECK(character_eval(z, to_mpz({2})) == RootOfUnity(2, 3));
  CHECK_THROWS_AS(character_eval(triv, to_mpz({1, 0})), InternalError);
  CHECK_THROWS_AS(
      PartialCharacter::from_generators(IntMatrix::from_rows(1, {{2}, {4}}), {RootOfUnity::one(), {1, 2}}),
      InternalError);
}

TEST_CASE("character saturations restrict to the original character") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> den(1, 6), num(0, 5), coef(-4, 4);
  for (int k = 0; k < 40; ++k) {
    auto B = random_lattice_basis(rng, 4, 3, 4);
    auto L = Lattice::span(B);
    std::vector<RootOfUnity> vals;
    for (std::size_t r = 0; r < L.rank(); ++r) vals.push_back({num(rng), den(rng)});
    auto rho = PartialCharacter::from_generators(L.basis(), vals);
    auto sats = saturate_character(rho);
    CHECK(mpz_class(static_cast<long>(sats.size())) == saturate_lattice(L).index);
    for (std::size_t i = 0; i < sats.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(sats[i] == sats[j]);
    for (const auto& s : sats) {
      CHECK(s.is_saturated());
      for (int t = 0; t < 10; ++t) {
        std::vector<mpz_class> v(4, 0);
        RootOfUnity expect = RootOfUnity::one();
        for (std::size_t r = 0; r < L.rank(); ++r) {
          auto c = coef(rng);
          for (std::size_t col = 0; col < 4; ++col) v[col] += c * L.basis()(r, col);
          expect = expect * vals[r].pow(c);
        }
        CHECK(s(v) == expect);
      }
    }
  }
}
