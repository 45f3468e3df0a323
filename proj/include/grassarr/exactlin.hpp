#pragma once

// Exact linear algebra over Q. Subspaces are kept in a canonical form so that
// set equality is structural equality of the stored basis.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grassarr/error.hpp"
#include "grassarr/rational.hpp"

namespace grassarr {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // Every row must have length `cols`; `cols` is explicit so that a 0-row
  // matrix still knows its width.
  static RationalMatrix from_rows(std::span<const Vector> rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged row");
      std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Rows of `top` followed by rows of `bottom`.
inline RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
  RationalMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), m.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), m.row(top.rows() + r).begin());
  return m;
}

struct EchelonForm {
  RationalMatrix reduced;            // zero rows trimmed
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Gauss-Jordan elimination to reduced row echelon form.
inline EchelonForm rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  RationalMatrix trimmed(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(m.row(r).begin(), m.row(r).end(), trimmed.row(r).begin());
  return {std::move(trimmed), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

// Determinant by Gaussian elimination with exact pivoting. The 0x0
// determinant is 1.
inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Determinant of the square submatrix on the given rows and columns.
// Index lists must be strictly increasing; minor(M, {}, {}) = 1.
inline Rational minor(const RationalMatrix& m, std::span<const std::size_t> row_set,
                      std::span<const std::size_t> col_set) {
  if (row_set.size() != col_set.size()) throw std::invalid_argument("minor: size mismatch");
  auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= bound) throw std::out_of_range(std::string("minor: ") + what + " index out of range");
      if (i > 0 && idx[i] <= idx[i - 1])
        throw std::invalid_argument(std::string("minor: ") + what + " indices not increasing");
    }
  };
  check(row_set, m.rows(), "row");
  check(col_set, m.cols(), "column");
  RationalMatrix sub(row_set.size(), col_set.size());
  for (std::size_t r = 0; r < row_set.size(); ++r)
    for (std::size_t c = 0; c < col_set.size(); ++c) sub(r, c) = m(row_set[r], col_set[c]);
  return determinant(std::move(sub));
}

class Subspace;
Subspace canonical_subspace(const RationalMatrix& m);

// A linear subspace of Q^n. The basis is the RREF of any spanning set with
// each row rescaled to coprime integers (leading entry positive), so equal
// subspaces have identical bases. The zero subspace has an empty basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace whole(std::size_t n) { return canonical_subspace(RationalMatrix::identity(n)); }

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const RationalMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rational> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("contains: ambient mismatch");
    Vector rest(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
      const std::size_t p = pivots_[r];
      if (sgn(rest[p]) == 0) continue;
      Rational f = rest[p] / basis_(r, p);
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= f * basis_(r, j);
    }
    return is_zero(rest);
  }

  bool is_subspace_of(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("is_subspace_of: ambient mismatch");
    if (dim() > other.dim()) return false;
    for (std::size_t r = 0; r < dim(); ++r)
      if (!other.contains(basis_.row(r))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  // Deterministic total order: ambient dimension, dimension, then basis
  // entries lexicographically.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return compare(a.basis_.entries(), b.basis_.entries()) < 0;
  }

 private:
  friend Subspace canonical_subspace(const RationalMatrix& m);

  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace canonical_subspace(const RationalMatrix& m) {
  EchelonForm ef = rref(m);
  Subspace s(m.cols());
  for (std::size_t r = 0; r < ef.reduced.rows(); ++r) {
    Vector scaled = primitive_integer(ef.reduced.row(r));
    std::copy(scaled.begin(), scaled.end(), ef.reduced.row(r).begin());
  }
  s.basis_ = std::move(ef.reduced);
  s.pivots_ = std::move(ef.pivots);
  return s;
}

inline Subspace span_of(std::span<const Vector> vectors, std::size_t n) {
  return canonical_subspace(RationalMatrix::from_rows(vectors, n));
}

// {v : Mv = 0}
inline Subspace kernel(const RationalMatrix& m) {
  EchelonForm ef = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, f);
    generators.push_back(std::move(v));
  }
  return span_of(generators, n);
}

inline Subspace orth_complement(const Subspace& u) { return kernel(u.basis()); }

inline void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch");
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_sum");
  return canonical_subspace(stack(u.basis(), v.basis()));
}

// U ∩ V = (U⊥ + V⊥)⊥
inline Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "intersect");
  return kernel(stack(orth_complement(u).basis(), orth_complement(v).basis()));
}

// True iff U ⊕ V = Q^n, decided by the determinant of the stacked bases.
inline bool is_direct_sum_full(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "is_direct_sum_full");
  if (u.dim() + v.dim() != u.ambient_dim()) return false;
  return sgn(determinant(stack(u.basis(), v.basis()))) != 0;
}

// Solves G x = b for invertible square G.
inline Vector solve(RationalMatrix g, Vector b) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(g(p, c)) == 0) ++p;
    if (p == n) throw InternalError("solve: singular system");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(g(p, j), g(c, j));
      std::swap(b[p], b[c]);
    }
    Rational inv = 1 / g(c, c);
    for (std::size_t j = c; j < n; ++j) g(c, j) *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(g(r, c)) == 0) continue;
      Rational f = g(r, c);
      for (std::size_t j = c; j < n; ++j) g(r, j) -= f * g(c, j);
      b[r] -= f * b[c];
    }
  }
  return b;
}

// Orthogonal projection of v onto U: Bᵀ(BBᵀ)⁻¹Bv for the basis matrix B.
inline Vector project(const Subspace& u, std::span<const Rational> v) {
  const std::size_t n = u.ambient_dim();
  if (v.size() != n) throw std::invalid_argument("project: vector length mismatch");
  const RationalMatrix& b = u.basis();
  const std::size_t k = b.rows();
  Vector out(n);
  if (k == 0) return out;
  RationalMatrix gram(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(b.row(i), v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(b.row(i), b.row(j));
  }
  Vector coeffs = solve(std::move(gram), std::move(rhs));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j] += coeffs[i] * b(i, j);
  return out;
}

}  // namespace grassarr
