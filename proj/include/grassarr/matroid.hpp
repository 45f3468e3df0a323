#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"

namespace grassarr {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 16;
inline constexpr std::size_t kMaxLatticeElements = 64;
// Above this ground size the dual rank computation is checked on a sample.
inline constexpr std::size_t kExhaustiveRankCheck = 10;

inline std::vector<std::size_t> mask_elements(Mask s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

// Labeled matroid on [m] given by its full rank table, indexed by bitmask.
struct Matroid {
  std::size_t ground_size = 0;
  std::vector<int> rank_table;

  int rank() const { return rank_table.back(); }
  int rank_of(Mask s) const { return rank_table.at(s); }
  Mask full() const { return static_cast<Mask>((Mask{1} << ground_size) - 1); }

  friend bool operator==(const Matroid&, const Matroid&) = default;
};

// Throws InternalError unless rk(∅)=0, rk(S) ≤ rk(S+e) ≤ rk(S)+1 and
// rk(S+e)+rk(S+f) ≥ rk(S+e+f)+rk(S) for all S, e, f; the last is the local
// form of submodularity, equivalent to it given the unit-increase axiom.
inline void check_rank_axioms(const Matroid& m) {
  if (m.rank_table.size() != (std::size_t{1} << m.ground_size))
    throw InternalError("matroid: rank table has wrong size");
  if (m.rank_table[0] != 0) throw InternalError("matroid: rk(empty) != 0");
  const Mask full = m.full();
  for (Mask s = 0; s <= full; ++s) {
    for (std::size_t e = 0; e < m.ground_size; ++e) {
      const Mask be = Mask{1} << e;
      if (s & be) continue;
      const int d = m.rank_table[s | be] - m.rank_table[s];
      if (d < 0 || d > 1) throw InternalError("matroid: rank not monotone with unit increase");
      for (std::size_t f = e + 1; f < m.ground_size; ++f) {
        const Mask bf = Mask{1} << f;
        if (s & bf) continue;
        if (m.rank_table[s | be] + m.rank_table[s | bf] < m.rank_table[s | be | bf] + m.rank_table[s])
          throw InternalError("matroid: rank function not submodular");
      }
    }
    if (s == full) break;
  }
}

// Ranks of the projected normals beta_i = Proj_U alpha_i.
inline std::vector<Vector> projected_normals(const Arrangement& a, const Subspace& u) {
  std::vector<Vector> betas;
  for (const auto& alpha : a.normals) betas.push_back(project(u, alpha));
  return betas;
}

inline std::size_t rank_of_rows(const std::vector<Vector>& rows, Mask s, std::size_t n) {
  std::vector<Vector> picked;
  for (auto i : mask_elements(s)) picked.push_back(rows[i]);
  return rank(RationalMatrix::from_rows(picked, n));
}

// dim U - dim(U ∩ ⋂_{i∈S} H_i), the intersection route to the rank.
inline std::size_t codim_in_subspace(const Arrangement& a, const Subspace& u, Mask s) {
  std::vector<Vector> picked;
  for (auto i : mask_elements(s)) picked.push_back(a.normals[i]);
  Subspace cut = kernel(RationalMatrix::from_rows(picked, a.ambient_dim));
  return u.dim() - intersect(u, cut).dim();
}

// M_A(U): rk(S) = dim span{beta_i : i ∈ S}. The table is cross-checked
// against the intersection route for every S when m ≤ 10 and on a fixed
// stride of subsets beyond, and the rank axioms are verified exhaustively.
inline Matroid matroid_from(const Arrangement& a, const Subspace& u) {
  const std::size_t m = a.size();
  if (m > kMaxGroundSize) throw GuardError("matroid ground set", m, kMaxGroundSize);
  if (u.ambient_dim() != a.ambient_dim) throw std::invalid_argument("matroid_from: ambient mismatch");
  const auto betas = projected_normals(a, u);
  Matroid mat{m, std::vector<int>(std::size_t{1} << m)};
  for (std::size_t s = 0; s < mat.rank_table.size(); ++s)
    mat.rank_table[s] = static_cast<int>(rank_of_rows(betas, static_cast<Mask>(s), a.ambient_dim));

  const std::size_t stride = m <= kExhaustiveRankCheck ? 1 : 97;
  for (std::size_t s = 0; s < mat.rank_table.size(); s += stride)
    if (static_cast<std::size_t>(mat.rank_table[s]) != codim_in_subspace(a, u, static_cast<Mask>(s)))
      throw InternalError("matroid_from: projection rank differs from intersection codimension");
  if (static_cast<std::size_t>(mat.rank()) != codim_in_subspace(a, u, mat.full()))
    throw InternalError("matroid_from: full rank differs from dim U - dim(U ∩ T)");
  check_rank_axioms(mat);
  return mat;
}

// Subsets I with |I| = rk(I) = rank, ascending by mask. Never empty.
inline std::vector<Mask> bases(const Matroid& m) {
  std::vector<Mask> out;
  const Mask full = m.full();
  for (Mask s = 0;; ++s) {
    if (std::popcount(s) == m.rank() && m.rank_table[s] == m.rank()) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

inline std::vector<std::size_t> loops(const Matroid& m) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < m.ground_size; ++e)
    if (m.rank_table[Mask{1} << e] == 0) out.push_back(e);
  return out;
}

// A finite graded poset with opaque elements. leq[a][b] means a ≤ b.
struct RankedLattice {
  std::vector<int> rank;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const noexcept { return rank.size(); }
};

// L ordered by reverse inclusion: X ≤ Y iff Y ⊆ X.
inline RankedLattice to_ranked_lattice(const IntersectionLattice& lat) {
  RankedLattice out;
  const std::size_t size = lat.size();
  out.rank.resize(size);
  out.leq.assign(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    out.rank[a] = static_cast<int>(lat.flat(a).rank);
    for (std::size_t b = 0; b < size; ++b) {
      const auto& ga = lat.flat(a).generators;
      const auto& gb = lat.flat(b).generators;
      out.leq[a][b] = std::includes(gb.begin(), gb.end(), ga.begin(), ga.end());
    }
  }
  return out;
}

inline RankedLattice restriction_lattice(const Arrangement& a, const Subspace& u) {
  return to_ranked_lattice(intersection_lattice(restriction(a, u)));
}

namespace detail {

struct ElementSignature {
  int rank;
  std::size_t below;
  std::size_t above;
  std::size_t covers_below;
  std::size_t covers_above;
  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> signatures(const RankedLattice& l) {
  std::vector<ElementSignature> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    ElementSignature s{l.rank[a], 0, 0, 0, 0};
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (a == b) continue;
      if (l.leq[b][a]) {
        ++s.below;
        if (l.rank[b] + 1 == l.rank[a]) ++s.covers_below;
      }
      if (l.leq[a][b]) {
        ++s.above;
        if (l.rank[a] + 1 == l.rank[b]) ++s.covers_above;
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

// Rank-preserving order isomorphism by backtracking; candidates are pruned
// by (rank, up/down set sizes, cover degrees).
inline bool lattice_isomorphic(const RankedLattice& l1, const RankedLattice& l2,
                               std::size_t limit = kMaxLatticeElements) {
  if (l1.size() > limit) throw GuardError("lattice isomorphism", l1.size(), limit);
  if (l2.size() > limit) throw GuardError("lattice isomorphism", l2.size(), limit);
  if (l1.size() != l2.size()) return false;
  const auto sig1 = detail::signatures(l1);
  const auto sig2 = detail::signatures(l2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  const std::size_t size = l1.size();
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return l1.rank[a] < l1.rank[b]; });
  std::vector<std::size_t> image(size, size);
  std::vector<bool> used(size, false);

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == size) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < size; ++y) {
      if (used[y] || !(sig1[x] == sig2[y])) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t x2 = order[d];
        const std::size_t y2 = image[x2];
        ok = l1.leq[x][x2] == l2.leq[y][y2] && l1.leq[x2][x] == l2.leq[y2][y];
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      image[x] = size;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace grassarr
