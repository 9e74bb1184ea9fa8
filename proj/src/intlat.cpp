#include "bindecomp/intlat.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace bindecomp {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t cols, const std::vector<std::vector<mpz_class>>& rows)
    : rows_(rows.size()), cols_(cols), data_(rows.size() * cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) (*this)(r, c) = rows[r][c];
  }
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
  if (row.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix dimension mismatch");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

bool IntMatrix::is_zero_row(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

// ---------------------------------------------------------------------------
// Row operations

namespace {

void swap_rows(IntMatrix& A, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
}

void swap_cols(IntMatrix& A, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& A, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < A.cols(); ++c) A(dst, c) -= q * A(src, c);
}

void sub_col(IntMatrix& A, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < A.rows(); ++r) A(r, dst) -= q * A(r, src);
}

void negate_row(IntMatrix& A, std::size_t r) {
  for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = -A(r, c);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class trunc_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& M) {
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (A(i, c) == 0) continue;
        if (best == m || abs(A(i, c)) < abs(A(best, c))) best = i;
      }
      if (best == m) break;
      swap_rows(A, r, best);
      swap_rows(U, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (A(i, c) == 0) continue;
        mpz_class q = trunc_div(A(i, c), A(r, c));
        sub_row(A, i, r, q);
        sub_row(U, i, r, q);
        if (A(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (A(r, c) == 0) continue;
    if (A(r, c) < 0) {
      negate_row(A, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(A(i, c), A(r, c));
      sub_row(A, i, r, q);
      sub_row(U, i, r, q);
    }
    ++r;
  }
  IntMatrix H(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) H(i, c) = A(i, c);
  return {std::move(H), std::move(U)};
}

SnfResult snf(const IntMatrix& M) {
  IntMatrix A = M;
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  std::vector<mpz_class> invariants;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (bi == m || abs(A(i, j)) < abs(A(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      swap_rows(A, t, bi);
      swap_rows(U, t, bi);
      swap_cols(A, t, bj);
      swap_cols(V, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        mpz_class q = trunc_div(A(i, t), A(t, t));
        sub_row(A, i, t, q);
        sub_row(U, i, t, q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        mpz_class q = trunc_div(A(t, j), A(t, t));
        sub_col(A, j, t, q);
        sub_col(V, j, t, q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            sub_row(A, t, i, -1);
            sub_row(U, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A(t, t) == 0) break;
    if (A(t, t) < 0) {
      negate_row(A, t);
      negate_row(U, t);
    }
    invariants.push_back(A(t, t));
  }
  return {std::move(A), std::move(U), std::move(V), std::move(invariants)};
}

mpz_class determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error("determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix A = M;
  const std::size_t n = A.rows();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && A(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(A, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        A(i, j) = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& M) {
  auto [H, U] = hnf(M.transposed());
  IntMatrix K(0, M.cols());
  for (std::size_t i = H.rows(); i < U.rows(); ++i) K.append_row(U.row(i));
  return hnf(K).H;
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::span(const IntMatrix& generators) {
  Lattice L(generators.cols());
  L.basis_ = hnf(generators).H;
  return L;
}

std::optional<std::vector<mpz_class>> Lattice::coordinates(const std::vector<mpz_class>& v) const {
  if (v.size() != ambient_) throw Error("vector length does not match the lattice");
  std::vector<mpz_class> w = v;
  std::vector<mpz_class> coords(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (basis_(i, col) == 0) {
      if (w[col] != 0) return std::nullopt;
      ++col;
    }
    if (w[col] % basis_(i, col) != 0) return std::nullopt;
    coords[i] = w[col] / basis_(i, col);
    for (std::size_t c = col; c < ambient_; ++c) w[c] -= coords[i] * basis_(i, c);
    ++col;
  }
  for (std::size_t c = col; c < ambient_; ++c)
    if (w[c] != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

mpz_class lattice_index(const Lattice& L) {
  mpz_class index = 1;
  for (const auto& d : snf(L.basis()).invariants) index *= d;
  return index;
}

SaturatedLattice saturate_lattice(const Lattice& L) {
  if (L.rank() == 0) return {L, 1};
  IntMatrix orth = integer_kernel(L.basis());
  Lattice sat = Lattice::span(integer_kernel(orth));
  return {std::move(sat), lattice_index(L)};
}

bool lattice_less(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t r = 0; r < a.rank(); ++r)
    for (std::size_t c = 0; c < a.ambient(); ++c)
      if (a.basis()(r, c) != b.basis()(r, c)) return a.basis()(r, c) < b.basis()(r, c);
  return false;
}

std::vector<mpz_class> to_mpz(const std::vector<std::int64_t>& v) {
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

// ---------------------------------------------------------------------------
// PartialCharacter

namespace {

RootOfUnity root_pow(const RootOfUnity& r, const mpz_class& k) {
  mpz_class red;
  mpz_class den = static_cast<long>(r.den());
  mpz_fdiv_r(red.get_mpz_t(), k.get_mpz_t(), den.get_mpz_t());
  return r.pow(red.get_si());
}

RootOfUnity combine(const IntMatrix& U, std::size_t row, const std::vector<RootOfUnity>& values) {
  RootOfUnity acc;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (U(row, k) != 0) acc = acc * root_pow(values[k], U(row, k));
  return acc;
}

bool root_less(const RootOfUnity& a, const RootOfUnity& b) {
  return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
}

}  // namespace

PartialCharacter PartialCharacter::from_generators(const IntMatrix& generators, const std::vector<RootOfUnity>& values) {
  if (generators.rows() != values.size()) throw Error("one character value per generator is required");
  auto [H, U] = hnf(generators);
  PartialCharacter rho(generators.cols());
  for (std::size_t i = 0; i < U.rows(); ++i) {
    auto v = combine(U, i, values);
    if (i < H.rows()) {
      rho.values_.push_back(v);
    } else if (!v.is_one()) {
      throw InternalError("character values are inconsistent with the lattice relations");
    }
  }
  rho.lattice_ = Lattice(generators.cols());
  rho.lattice_ = Lattice::span(H);
  return rho;
}

RootOfUnity PartialCharacter::operator()(const std::vector<mpz_class>& v) const {
  auto coords = lattice_.coordinates(v);
  if (!coords) throw InternalError("vector is not in the character's lattice");
  RootOfUnity acc;
  for (std::size_t i = 0; i < coords->size(); ++i) acc = acc * root_pow(values_[i], (*coords)[i]);
  return acc;
}

RootOfUnity character_eval(const PartialCharacter& rho, const std::vector<mpz_class>& v) { return rho(v); }

bool PartialCharacter::is_saturated() const { return lattice_index(lattice_) == 1; }

std::int64_t PartialCharacter::cyclotomic_order() const {
  std::int64_t d = 1;
  for (const auto& v : values_) d = std::lcm(d, v.den());
  return d;
}

bool PartialCharacter::operator<(const PartialCharacter& other) const {
  if (!(lattice_ == other.lattice_)) return lattice_less(lattice_, other.lattice_);
  return std::lexicographical_compare(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                                      root_less);
}

std::vector<PartialCharacter> saturate_character(const PartialCharacter& rho) {
  const auto& B = rho.lattice().basis();
  const std::size_t r = B.rows();
  if (r == 0) return {rho};
  auto s = snf(B);
  // Rows of U*B are d_i times the first rows of V^{-1}, which span Sat(L).
  IntMatrix Vinv = hnf(s.V).U;
  IntMatrix sat_basis(0, B.cols());
  for (std::size_t i = 0; i < r; ++i) sat_basis.append_row(Vinv.row(i));

  std::vector<RootOfUnity> on_scaled;
  std::vector<std::vector<RootOfUnity>> choices;
  for (std::size_t i = 0; i < r; ++i) {
    auto value = combine(s.U, i, rho.values());
    if (!s.invariants[i].fits_slong_p()) throw OverflowError("lattice index too large to enumerate");
    choices.push_back(value.nth_roots(s.invariants[i].get_si()));
  }

  std::vector<PartialCharacter> out;
  std::vector<std::size_t> pick(r, 0);
  while (true) {
    std::vector<RootOfUnity> vals;
    for (std::size_t i = 0; i < r; ++i) vals.push_back(choices[i][pick[i]]);
    out.push_back(PartialCharacter::from_generators(sat_basis, vals));
    std::size_t k = 0;
    while (k < r && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bindecomp
