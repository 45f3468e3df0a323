#pragma once

// Plücker coordinates, adjoint hyperplanes of k-flats and the defect subspace
// U ∩ (U⊥ + T⊥) of a subspace relative to an arrangement.

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"

namespace grassarr {

using Subset = std::vector<std::size_t>;

// All k-subsets of {0..n-1} in lexicographic order. This order is part of
// every serialized Plücker or adjoint vector.
class KSubsetIndex {
 public:
  KSubsetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k > n) throw std::invalid_argument("KSubsetIndex: k > n");
    Subset s(k);
    std::iota(s.begin(), s.end(), std::size_t{0});
    while (true) {
      position_.emplace(s, subsets_.size());
      subsets_.push_back(s);
      std::size_t i = k;
      while (i > 0 && s[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  const std::vector<Subset>& subsets() const noexcept { return subsets_; }
  const Subset& operator[](std::size_t pos) const { return subsets_.at(pos); }
  std::size_t position(const Subset& s) const { return position_.at(s); }

  Subset complement(const Subset& s) const {
    Subset out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (j < s.size() && s[j] == i) {
        ++j;
        continue;
      }
      out.push_back(i);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Subset> subsets_;
  std::map<Subset, std::size_t> position_;
};

// Δ(U) up to scale: coords is primitive (coprime integers, first nonzero
// positive) and raw minors = scale * coords for U's canonical basis.
struct PlueckerVector {
  std::size_t n = 0;
  std::size_t k = 0;
  Vector coords;
  Rational scale = 1;

  friend bool operator==(const PlueckerVector& a, const PlueckerVector& b) {
    return a.n == b.n && a.k == b.k && a.coords == b.coords;
  }
};

inline PlueckerVector pluecker_vector(const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  const std::size_t k = u.dim();
  KSubsetIndex index(n, k);
  Subset all_rows(k);
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  Vector raw;
  raw.reserve(index.size());
  for (const auto& cols : index.subsets()) raw.push_back(minor(u.basis(), all_rows, cols));
  PlueckerVector p{n, k, {}, 1};
  p.coords = primitive_integer(raw, &p.scale);
  return p;
}

// Sign (-1)^{k(k+1)/2 + sum of I} with I read 1-based.
inline int adjoint_sign(const Subset& zero_based, std::size_t k) {
  std::size_t exponent = k * (k + 1) / 2;
  for (auto i : zero_based) exponent += i + 1;
  return exponent % 2 == 0 ? 1 : -1;
}

// H(X) ⊂ R^{C(n,k)} for a k-flat X: a_I(X) = sign(I) Δ_{[n]-I}(X).
// `coeffs` is primitive; raw coefficients = scale * coeffs.
struct AdjointHyperplane {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t source_flat = 0;   // id in the intersection lattice
  Subspace flat;
  Vector coeffs;
  Rational scale = 1;
};

inline AdjointHyperplane adjoint_hyperplane(const Flat& x, std::size_t k, std::size_t flat_id = 0) {
  const std::size_t n = x.subspace.ambient_dim();
  if (k > n || x.subspace.dim() != n - k)
    throw std::invalid_argument("adjoint_hyperplane: flat of rank " + std::to_string(x.rank) +
                                " is not a " + std::to_string(k) + "-flat");
  KSubsetIndex index(n, k);
  Subset all_rows(n - k);
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  Vector raw;
  raw.reserve(index.size());
  for (const auto& subset : index.subsets())
    raw.push_back(adjoint_sign(subset, k) * minor(x.subspace.basis(), all_rows, index.complement(subset)));
  AdjointHyperplane h{n, k, flat_id, x.subspace, {}, 1};
  h.coeffs = primitive_integer(raw, &h.scale);
  if (is_zero(h.coeffs)) throw InternalError("adjoint_hyperplane: all coefficients vanish");
  return h;
}

// A^{(k)}: one adjoint per k-flat, in lattice order. A^{(n)} is empty.
inline std::vector<AdjointHyperplane> k_adjoint(const IntersectionLattice& lat, std::size_t k) {
  std::vector<AdjointHyperplane> out;
  if (k >= lat.ambient_dim()) return out;
  for (std::size_t id : lat.flats_of_rank(k)) out.push_back(adjoint_hyperplane(lat.flat(id), k, id));
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].coeffs == out[b].coeffs)
        throw InternalError("k_adjoint: distinct flats share an adjoint hyperplane");
  return out;
}

inline std::vector<AdjointHyperplane> k_adjoint(const Arrangement& a, std::size_t k) {
  if (k > a.ambient_dim) throw std::invalid_argument("k_adjoint: k > n");
  return k_adjoint(intersection_lattice(a), k);
}

// Σ_I a_I x_I on the primitive representatives.
inline Rational eval_adjoint(const AdjointHyperplane& h, const PlueckerVector& p) {
  if (h.n != p.n || h.k != p.k)
    throw std::invalid_argument("eval_adjoint: index mismatch (n=" + std::to_string(h.n) + ",k=" +
                                std::to_string(h.k) + " vs n=" + std::to_string(p.n) +
                                ",k=" + std::to_string(p.k) + ")");
  return dot(h.coeffs, p.coords);
}

// U ∩ (U⊥ + T⊥), cross-checked against span{Proj_U alpha_i} and its
// expected dimension dim U - dim(U ∩ T).
inline Subspace defect_subspace(const Arrangement& a, const Subspace& u, const Subspace& t) {
  require_same_ambient(u, t, "defect_subspace");
  Subspace defect = intersect(u, subspace_sum(orth_complement(u), orth_complement(t)));
  std::vector<Vector> projections;
  for (const auto& alpha : a.normals) projections.push_back(project(u, alpha));
  Subspace spanned = span_of(projections, a.ambient_dim);
  if (!(defect == spanned))
    throw InternalError("defect_subspace: U ∩ (U⊥+T⊥) differs from the span of projected normals");
  if (defect.dim() != u.dim() - intersect(u, t).dim())
    throw InternalError("defect_subspace: dimension differs from dim U - dim(U ∩ T)");
  return defect;
}

inline Subspace defect_subspace(const Arrangement& a, const Subspace& u) {
  return defect_subspace(a, u, center(a));
}

}  // namespace grassarr
