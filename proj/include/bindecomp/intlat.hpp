#pragma once

// Integer lattices and partial characters.  Lattice bases are kept in row
// Hermite normal form, so two lattices are equal exactly when their stored
// bases are equal.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bindecomp/ring.hpp"

namespace bindecomp {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t cols, const std::vector<std::vector<mpz_class>>& rows);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<mpz_class> row(std::size_t r) const;
  void append_row(const std::vector<mpz_class>& row);
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool is_zero_row(std::size_t r) const;

  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct HnfResult {
  /// Nonzero rows of U * M, in row Hermite normal form.
  IntMatrix H;
  /// Unimodular; U * M is H followed by zero rows.
  IntMatrix U;
};

struct SnfResult {
  /// U * M * V, diagonal with each entry dividing the next.
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  /// The nonzero diagonal entries.
  std::vector<mpz_class> invariants;
};

HnfResult hnf(const IntMatrix& M);
SnfResult snf(const IntMatrix& M);
mpz_class determinant(const IntMatrix& M);
/// Basis (as rows) of {x : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& M);

class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  /// The lattice spanned by the rows of `generators`.
  static Lattice span(const IntMatrix& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Integer coordinates of v in the stored basis, or nothing when v is not
  /// in the lattice.
  std::optional<std::vector<mpz_class>> coordinates(const std::vector<mpz_class>& v) const;
  bool contains(const std::vector<mpz_class>& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  bool strictly_contains(const Lattice& other) const { return contains(other) && !(*this == other); }

  bool operator==(const Lattice& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

struct SaturatedLattice {
  Lattice lattice;
  mpz_class index;
};

SaturatedLattice saturate_lattice(const Lattice& L);
/// [Sat(L) : L] from the Smith invariants of the basis.
mpz_class lattice_index(const Lattice& L);

/// A homomorphism from a lattice into the roots of unity, stored by its
/// values on the Hermite basis.
class PartialCharacter {
 public:
  PartialCharacter() = default;
  explicit PartialCharacter(std::size_t ambient) : lattice_(ambient) {}
  /// Character on the lattice spanned by `generators` taking the given
  /// values there.  Throws InternalError when the values are inconsistent
  /// with the relations among the generators.
  static PartialCharacter from_generators(const IntMatrix& generators, const std::vector<RootOfUnity>& values);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<RootOfUnity>& values() const { return values_; }
  std::size_t ambient() const { return lattice_.ambient(); }
  std::size_t rank() const { return lattice_.rank(); }

  /// rho(v); throws InternalError when v is outside the lattice.
  RootOfUnity operator()(const std::vector<mpz_class>& v) const;
  bool is_saturated() const;
  /// Least common multiple of the orders of the basis values.
  std::int64_t cyclotomic_order() const;

  bool operator<(const PartialCharacter& other) const;
  bool operator==(const PartialCharacter& other) const {
    return lattice_ == other.lattice_ && values_ == other.values_;
  }

 private:
  Lattice lattice_;
  std::vector<RootOfUnity> values_;
};

RootOfUnity character_eval(const PartialCharacter& rho, const std::vector<mpz_class>& v);

/// All extensions of rho to the saturation of its lattice, sorted.
std::vector<PartialCharacter> saturate_character(const PartialCharacter& rho);

/// Canonical ordering helpers for deterministic output.
bool lattice_less(const Lattice& a, const Lattice& b);

std::vector<mpz_class> to_mpz(const std::vector<std::int64_t>& v);

}  // namespace bindecomp
