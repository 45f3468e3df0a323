#pragma once

// Test-only helpers: fixed arrangements, seeded generators, and oracles that
// recompute quantities by routes independent of the library code paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grassarr/grassarr.hpp"

namespace grassarr::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  std::size_t cols = 0;
  for (auto r : rows) {
    vs.push_back(vec(r));
    cols = r.size();
  }
  return RationalMatrix::from_rows(vs, cols);
}

inline Subspace span(std::initializer_list<std::initializer_list<long>> rows, std::size_t n) {
  std::vector<Vector> vs;
  for (auto r : rows) vs.push_back(vec(r));
  return span_of(vs, n);
}

inline Arrangement braid3() { return braid_arrangement(3); }

inline Arrangement coordinate_pair_r3() {
  return build_arrangement(3, std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0})});
}

inline Arrangement empty_arrangement(std::size_t n) { return build_arrangement(n, std::vector<Vector>{}); }

// m distinct hyperplanes in R^n with entries in [-bound, bound].
inline Arrangement random_arrangement(std::size_t n, std::size_t m, std::uint64_t seed, long bound = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<Vector> normals;
  std::set<Vector, bool (*)(const Vector&, const Vector&)> seen(
      [](const Vector& a, const Vector& b) { return compare(a, b) < 0; });
  while (normals.size() < m) {
    Vector v(n);
    for (auto& x : v) x = entry(rng);
    if (is_zero(v)) continue;
    if (!seen.insert(primitive_integer(v)).second) continue;
    normals.push_back(v);
  }
  return build_arrangement(n, normals);
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t k, long bound = 3) {
  while (true) {
    Subspace s = canonical_subspace(random_matrix(rng, k, n, -bound, bound));
    if (s.dim() == k) return s;
  }
}

// Random invertible k x k mix applied to the rows of m.
inline RationalMatrix mix_rows(std::mt19937_64& rng, const RationalMatrix& m) {
  const std::size_t k = m.rows();
  while (true) {
    RationalMatrix g = random_matrix(rng, k, k, -3, 3);
    if (sgn(determinant(g)) == 0) continue;
    RationalMatrix out(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) += g(i, j) * m(j, c);
    return out;
  }
}

// Determinant by recursive cofactor expansion along the first row.
inline Rational cofactor_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, j = 0; cc < n; ++cc)
        if (cc != c) sub(r - 1, j++) = m(r, cc);
    Rational term = m(0, c) * cofactor_determinant(sub);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

// Every ⋂_{i∈S} H_i for S ⊆ [m], via the kernel of the selected normals.
inline std::set<Subspace> subset_intersection_flats(const Arrangement& a) {
  std::set<Subspace> out;
  const std::size_t m = a.size();
  for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
    std::vector<Vector> picked;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1u) picked.push_back(a.normals[i]);
    out.insert(kernel(RationalMatrix::from_rows(picked, a.ambient_dim)));
  }
  return out;
}

// Two vectors are proportional (same point of projective space).
inline bool proportional(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  return primitive_integer(a) == primitive_integer(b) ||
         primitive_integer(a) == primitive_integer([&] {
           Vector neg = b;
           for (auto& x : neg) x = -x;
           return neg;
         }());
}

}  // namespace grassarr::testing
