#pragma once

// The three stratum labels of a k-subspace U relative to an arrangement A:
//   matroid   - the labeled matroid of the projected normals,
//   adjoint   - (i, zero set of the (k-i)-adjoint at Δ(defect of U)),
//   schubert  - (i, jump set of dim(U ∩ F_l) along every maximal chain F),
// where i = dim(U ∩ T). Two subspaces share a stratum iff their labels are
// equal, so labels double as partition keys.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"
#include "grassarr/matroid.hpp"
#include "grassarr/pluecker.hpp"

namespace grassarr {

struct MatroidLabel {
  Matroid matroid;
  friend bool operator==(const MatroidLabel&, const MatroidLabel&) = default;
  friend auto operator<=>(const MatroidLabel& a, const MatroidLabel& b) {
    if (auto c = a.matroid.ground_size <=> b.matroid.ground_size; c != 0) return c;
    return a.matroid.rank_table <=> b.matroid.rank_table;
  }
};

// zero_set = L^U(A): the (k-i)-flats whose adjoint contains Δ(defect).
struct AdjointLabel {
  std::size_t i = 0;
  std::vector<std::size_t> zero_set;  // flat ids, ascending
  friend bool operator==(const AdjointLabel&, const AdjointLabel&) = default;
  friend auto operator<=>(const AdjointLabel&, const AdjointLabel&) = default;
};

// sigma[c] lists the 1-based positions l in [r] where
// dim(U ∩ F_l) > dim(U ∩ F_{l-1}) along chain c.
struct SchubertLabel {
  std::size_t i = 0;
  std::vector<std::vector<std::size_t>> sigma;
  friend bool operator==(const SchubertLabel&, const SchubertLabel&) = default;
  friend auto operator<=>(const SchubertLabel&, const SchubertLabel&) = default;
};

struct SubspaceLabels {
  MatroidLabel matroid;
  AdjointLabel adjoint;
  SchubertLabel schubert;
};

struct StratifierLimits {
  std::size_t max_chains = kDefaultChainLimit;
  std::size_t max_lattice = kMaxLatticeElements;
};

// Everything about (A, k) that labeling reuses: the lattice, the center, the
// maximal chains and the adjoint hyperplanes of every rank ≤ min(k, r).
// Immutable after construction and safe to share across threads.
class Stratifier {
 public:
  Stratifier(Arrangement a, std::size_t k, StratifierLimits limits = {})
      : arrangement_(std::move(a)),
        k_(k),
        limits_(limits),
        lattice_(intersection_lattice(arrangement_)),
        center_(center(arrangement_)) {
    if (k_ > arrangement_.ambient_dim)
      throw InputError("k=" + std::to_string(k_) + " exceeds n=" + std::to_string(arrangement_.ambient_dim));
    if (arrangement_.size() > kMaxGroundSize)
      throw GuardError("matroid ground set", arrangement_.size(), kMaxGroundSize);
    if (!(lattice_.flat(lattice_.top()).subspace == center_))
      throw InternalError("Stratifier: lattice top differs from the center");
    chains_ = maximal_chains(lattice_, limits_.max_chains);
    const std::size_t max_rank = std::min(k_, lattice_.rank());
    for (std::size_t r = 0; r <= max_rank; ++r) {
      std::vector<AdjointHyperplane> level;
      for (std::size_t id : lattice_.flats_of_rank(r)) level.push_back(adjoint_hyperplane(lattice_.flat(id), r, id));
      adjoints_.push_back(std::move(level));
    }
  }

  const Arrangement& arrangement() const noexcept { return arrangement_; }
  const IntersectionLattice& lattice() const noexcept { return lattice_; }
  const Subspace& center_subspace() const noexcept { return center_; }
  const std::vector<Chain>& chains() const noexcept { return chains_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return arrangement_.ambient_dim; }
  const StratifierLimits& limits() const noexcept { return limits_; }

  // Adjoints H(X) for X ∈ L_rank(A), in lattice order.
  const std::vector<AdjointHyperplane>& adjoints(std::size_t rank) const { return adjoints_.at(rank); }

  void require_dim(const Subspace& u) const {
    if (u.ambient_dim() != n())
      throw InputError("subspace lives in R^" + std::to_string(u.ambient_dim()) + ", arrangement in R^" +
                       std::to_string(n()));
    if (u.dim() != k_)
      throw InputError("subspace has dimension " + std::to_string(u.dim()) + ", expected k=" + std::to_string(k_));
  }

  std::size_t defect_rank(const Subspace& u) const { return k_ - intersect(u, center_).dim(); }

 private:
  Arrangement arrangement_;
  std::size_t k_;
  StratifierLimits limits_;
  IntersectionLattice lattice_;
  Subspace center_;
  std::vector<Chain> chains_;
  std::vector<std::vector<AdjointHyperplane>> adjoints_;
};

inline AdjointLabel adjoint_label(const Stratifier& ctx, const Subspace& u) {
  ctx.require_dim(u);
  AdjointLabel label;
  label.i = intersect(u, ctx.center_subspace()).dim();
  const Subspace defect = defect_subspace(ctx.arrangement(), u, ctx.center_subspace());
  const PlueckerVector delta = pluecker_vector(defect);
  for (const auto& h : ctx.adjoints(ctx.k() - label.i))
    if (sgn(eval_adjoint(h, delta)) == 0) label.zero_set.push_back(h.source_flat);
  return label;
}

// dim(U ∩ X) for every flat X of the lattice.
inline std::vector<std::size_t> flat_intersection_dims(const Stratifier& ctx, const Subspace& u) {
  std::vector<std::size_t> dims;
  dims.reserve(ctx.lattice().size());
  for (const auto& f : ctx.lattice().flats()) dims.push_back(intersect(u, f.subspace).dim());
  return dims;
}

inline SchubertLabel schubert_label(const Stratifier& ctx, const Subspace& u) {
  ctx.require_dim(u);
  const auto dims = flat_intersection_dims(ctx, u);
  SchubertLabel label;
  label.i = dims[ctx.lattice().top()];
  for (const Chain& chain : ctx.chains()) {
    std::vector<std::size_t> jumps;
    for (std::size_t l = 1; l < chain.size(); ++l)
      if (dims[chain[l]] > dims[chain[l - 1]]) jumps.push_back(l);
    if (jumps.size() != ctx.k() - label.i)
      throw InternalError("schubert_label: jump set size differs from k - i");
    label.sigma.push_back(std::move(jumps));
  }
  return label;
}

inline MatroidLabel matroid_label(const Stratifier& ctx, const Subspace& u) {
  ctx.require_dim(u);
  MatroidLabel label{matroid_from(ctx.arrangement(), u)};
  if (static_cast<std::size_t>(label.matroid.rank()) != ctx.defect_rank(u))
    throw InternalError("matroid_label: rank differs from k - dim(U ∩ T)");
  return label;
}

inline SubspaceLabels label_subspace(const Stratifier& ctx, const Subspace& u) {
  return {matroid_label(ctx, u), adjoint_label(ctx, u), schubert_label(ctx, u)};
}

// Convenience forms that build the context for a single subspace.
inline AdjointLabel adjoint_label(const Arrangement& a, const Subspace& u) {
  return adjoint_label(Stratifier(a, u.dim()), u);
}
inline SchubertLabel schubert_label(const Arrangement& a, const Subspace& u) {
  return schubert_label(Stratifier(a, u.dim()), u);
}
inline MatroidLabel matroid_label(const Arrangement& a, const Subspace& u) {
  return matroid_label(Stratifier(a, u.dim()), u);
}

// L_U(A) read off the Schubert side: F_{r-k+i} over chains whose jump set is
// the final block {r-k+i+1, ..., r}.
inline std::vector<std::size_t> schubert_direct_sum_flats(const Stratifier& ctx, const SchubertLabel& label) {
  const std::size_t r = ctx.lattice().rank();
  const std::size_t d = ctx.k() - label.i;
  std::vector<std::size_t> tail;
  for (std::size_t l = r - d + 1; l <= r; ++l) tail.push_back(l);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ctx.chains().size(); ++c)
    if (label.sigma[c] == tail) out.push_back(ctx.chains()[c][r - d]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Consistency checks on one subspace. Each counts how many instances
// were compared and how many agreed.
struct Agreement {
  std::size_t checked = 0;
  std::size_t agreed = 0;
  bool all() const noexcept { return checked == agreed; }
  Agreement& operator+=(const Agreement& o) {
    checked += o.checked;
    agreed += o.agreed;
    return *this;
  }
};

struct SubspaceChecks {
  Agreement direct_sum;      // adjoint zero-status vs determinant direct-sum test
  Agreement rank_formula;    // projection rank vs intersection codimension
  Agreement basis_triple;    // basis ⟺ independent projections ⟺ direct-sum flat
  Agreement schubert_lu;     // L_U(A) from the adjoint side vs the Schubert side

  SubspaceChecks& operator+=(const SubspaceChecks& o) {
    direct_sum += o.direct_sum;
    rank_formula += o.rank_formula;
    basis_triple += o.basis_triple;
    schubert_lu += o.schubert_lu;
    return *this;
  }
  bool all() const noexcept {
    return direct_sum.all() && rank_formula.all() && basis_triple.all() && schubert_lu.all();
  }
};

inline Agreement check_direct_sum(const Stratifier& ctx, const Subspace& u) {
  Agreement out;
  const std::size_t d = ctx.defect_rank(u);
  const Subspace defect = defect_subspace(ctx.arrangement(), u, ctx.center_subspace());
  const PlueckerVector delta = pluecker_vector(defect);
  for (const auto& h : ctx.adjoints(d)) {
    const bool off_hyperplane = sgn(eval_adjoint(h, delta)) != 0;
    const bool direct = is_direct_sum_full(defect, h.flat);
    ++out.checked;
    if (off_hyperplane == direct) ++out.agreed;
  }
  return out;
}

// Exhaustive over all 2^m subsets for m ≤ 10, fixed stride beyond.
inline Agreement check_rank_formula(const Arrangement& a, const Subspace& u) {
  Agreement out;
  const auto betas = projected_normals(a, u);
  const std::size_t total = std::size_t{1} << a.size();
  const std::size_t stride = a.size() <= kExhaustiveRankCheck ? 1 : 97;
  for (std::size_t s = 0; s < total; s += stride) {
    ++out.checked;
    if (rank_of_rows(betas, static_cast<Mask>(s), a.ambient_dim) == codim_in_subspace(a, u, static_cast<Mask>(s)))
      ++out.agreed;
  }
  return out;
}

// Over every I ⊆ [m] with |I| = k - i.
inline Agreement check_basis_triple(const Stratifier& ctx, const Subspace& u, const Matroid& m) {
  Agreement out;
  const Arrangement& a = ctx.arrangement();
  const std::size_t d = ctx.defect_rank(u);
  const Subspace defect = defect_subspace(a, u, ctx.center_subspace());
  const auto betas = projected_normals(a, u);
  const Mask full = m.full();
  for (Mask s = 0;; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == d) {
      const bool is_basis = m.rank_of(s) == m.rank() && static_cast<std::size_t>(m.rank()) == d;
      const bool independent = rank_of_rows(betas, s, a.ambient_dim) == d;
      std::vector<Vector> normals;
      for (auto e : mask_elements(s)) normals.push_back(a.normals[e]);
      const Subspace cut = kernel(RationalMatrix::from_rows(normals, a.ambient_dim));
      // ⋂H_i is a (k-i)-flat exactly when the chosen normals are independent.
      const bool in_lu = cut.dim() == a.ambient_dim - d && is_direct_sum_full(defect, cut);
      ++out.checked;
      if (is_basis == independent && independent == in_lu) ++out.agreed;
    }
    if (s == full) break;
  }
  return out;
}

inline Agreement check_schubert_lu(const Stratifier& ctx, const AdjointLabel& adj, const SchubertLabel& sch) {
  std::vector<std::size_t> from_adjoint;
  for (std::size_t id : ctx.lattice().flats_of_rank(ctx.k() - adj.i))
    if (!std::binary_search(adj.zero_set.begin(), adj.zero_set.end(), id)) from_adjoint.push_back(id);
  return {1, from_adjoint == schubert_direct_sum_flats(ctx, sch) ? std::size_t{1} : std::size_t{0}};
}

inline SubspaceChecks check_subspace(const Stratifier& ctx, const Subspace& u, const SubspaceLabels& labels) {
  return {check_direct_sum(ctx, u), check_rank_formula(ctx.arrangement(), u),
          check_basis_triple(ctx, u, labels.matroid.matroid),
          check_schubert_lu(ctx, labels.adjoint, labels.schubert)};
}

}  // namespace grassarr
