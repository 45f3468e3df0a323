#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"

namespace grassarr {

// A central arrangement {H_i : <alpha_i, v> = 0}. Normals are primitive
// integer vectors with positive leading entry, pairwise distinct. Hyperplane
// labels are the 0-based positions in `normals` (printed 1-based).
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Vector> normals;

  std::size_t size() const noexcept { return normals.size(); }

  RationalMatrix normal_matrix() const { return RationalMatrix::from_rows(normals, ambient_dim); }

  Subspace hyperplane(std::size_t i) const {
    return kernel(RationalMatrix::from_rows(std::span(&normals.at(i), 1), ambient_dim));
  }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

inline Arrangement build_arrangement(std::size_t n, std::span<const Vector> raw_normals) {
  Arrangement a{n, {}};
  for (std::size_t i = 0; i < raw_normals.size(); ++i) {
    const Vector& raw = raw_normals[i];
    const std::string where = "normal " + std::to_string(i + 1);
    if (raw.size() != n)
      throw InputError(where + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(raw.size()));
    if (is_zero(raw)) throw InputError(where + ": zero normal does not define a hyperplane");
    Vector normal = primitive_integer(raw);
    for (std::size_t j = 0; j < a.normals.size(); ++j)
      if (a.normals[j] == normal)
        throw InputError(where + ": duplicate hyperplane (same as normal " + std::to_string(j + 1) + ")");
    a.normals.push_back(std::move(normal));
  }
  return a;
}

inline Arrangement boolean_arrangement(std::size_t n) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    normals.push_back(std::move(e));
  }
  return build_arrangement(n, normals);
}

// x_i - x_j = 0 for i < j, in lexicographic (i, j) order.
inline Arrangement braid_arrangement(std::size_t n) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n);
      v[i] = 1;
      v[j] = -1;
      normals.push_back(std::move(v));
    }
  return build_arrangement(n, normals);
}

inline Subspace center(const Arrangement& a) { return kernel(a.normal_matrix()); }

inline bool is_essential(const Arrangement& a) { return center(a).dim() == 0; }

struct Flat {
  Subspace subspace;
  std::size_t rank = 0;                  // n - dim
  std::vector<std::size_t> generators;   // {i : subspace ⊆ H_i}, ascending
};

inline std::vector<std::size_t> containing_hyperplanes(const Arrangement& a, const Subspace& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool inside = true;
    for (std::size_t r = 0; r < x.dim() && inside; ++r) inside = sgn(dot(a.normals[i], x.basis().row(r))) == 0;
    if (inside) out.push_back(i);
  }
  return out;
}

// L(A) ordered by reverse inclusion. Flats are sorted by rank, then by
// canonical subspace order; index 0 is the whole space and the last index is
// the center T.
class IntersectionLattice {
 public:
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return by_rank_.size() - 1; }
  std::size_t size() const noexcept { return flats_.size(); }

  const std::vector<Flat>& flats() const noexcept { return flats_; }
  const Flat& flat(std::size_t id) const { return flats_.at(id); }
  const std::vector<std::size_t>& flats_of_rank(std::size_t r) const {
    static const std::vector<std::size_t> none;
    return r < by_rank_.size() ? by_rank_[r] : none;
  }
  const std::vector<std::vector<std::size_t>>& by_rank() const noexcept { return by_rank_; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return flats_.size() - 1; }

  // Flats of rank r+1 contained in flat `id`, and flats of rank r-1
  // containing it; both ascending.
  const std::vector<std::size_t>& upper_covers(std::size_t id) const { return up_.at(id); }
  const std::vector<std::size_t>& lower_covers(std::size_t id) const { return down_.at(id); }

  std::optional<std::size_t> find(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend IntersectionLattice intersection_lattice(const Arrangement& a);

  std::size_t ambient_dim_ = 0;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> by_rank_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::map<Subspace, std::size_t> index_;
};

// Breadth-first closure: each flat of rank r is cut by every hyperplane not
// containing it, giving the flats of rank r+1.
inline IntersectionLattice intersection_lattice(const Arrangement& a) {
  const std::size_t n = a.ambient_dim;
  std::vector<Subspace> hyperplanes;
  for (std::size_t i = 0; i < a.size(); ++i) hyperplanes.push_back(a.hyperplane(i));

  IntersectionLattice lat;
  lat.ambient_dim_ = n;
  std::vector<Subspace> level{Subspace::whole(n)};
  while (!level.empty()) {
    std::vector<std::size_t> ids;
    std::map<Subspace, bool> next;
    for (auto& x : level) {
      Flat f{x, n - x.dim(), containing_hyperplanes(a, x)};
      std::size_t g = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (g < f.generators.size() && f.generators[g] == j) {
          ++g;
          continue;
        }
        next.emplace(intersect(x, hyperplanes[j]), true);
      }
      ids.push_back(lat.flats_.size());
      lat.index_.emplace(f.subspace, lat.flats_.size());
      lat.flats_.push_back(std::move(f));
    }
    lat.by_rank_.push_back(std::move(ids));
    level.clear();
    for (auto& [s, unused] : next) level.push_back(s);
  }

  lat.up_.assign(lat.flats_.size(), {});
  lat.down_.assign(lat.flats_.size(), {});
  for (std::size_t r = 0; r + 1 < lat.by_rank_.size(); ++r)
    for (std::size_t lo : lat.by_rank_[r])
      for (std::size_t hi : lat.by_rank_[r + 1])
        if (lat.flats_[hi].subspace.is_subspace_of(lat.flats_[lo].subspace)) {
          lat.up_[lo].push_back(hi);
          lat.down_[hi].push_back(lo);
        }
  return lat;
}

// A|_U expressed in the canonical basis B of U: the trace of H_i is the
// hyperplane of R^{dim U} with normal B·alpha_i. Hyperplanes containing U are
// dropped and coinciding traces are merged, keeping first occurrence order.
inline Arrangement restriction(const Arrangement& a, const Subspace& u) {
  if (u.ambient_dim() != a.ambient_dim) throw std::invalid_argument("restriction: ambient mismatch");
  if (u.dim() == 0) throw std::invalid_argument("restriction: subspace has dimension 0");
  Arrangement out{u.dim(), {}};
  for (const auto& alpha : a.normals) {
    Vector trace(u.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) trace[r] = dot(u.basis().row(r), alpha);
    if (is_zero(trace)) continue;
    Vector normal = primitive_integer(trace);
    if (std::find(out.normals.begin(), out.normals.end(), normal) == out.normals.end())
      out.normals.push_back(std::move(normal));
  }
  return out;
}

// A maximal chain T = F_0 ⊊ F_1 ⊊ ... ⊊ F_r = R^n as flat ids.
using Chain = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultChainLimit = 1'000'000;

// Number of maximal chains, counted without enumerating them.
inline std::uint64_t count_maximal_chains(const IntersectionLattice& lat) {
  std::vector<std::uint64_t> paths(lat.size(), 0);
  paths[lat.bottom()] = 1;
  for (std::size_t r = 1; r <= lat.rank(); ++r)
    for (std::size_t id : lat.flats_of_rank(r))
      for (std::size_t lo : lat.lower_covers(id)) paths[id] += paths[lo];
  return paths[lat.top()];
}

// Depth-first enumeration from T towards R^n, taking cover candidates in
// ascending flat order, so chains come out lexicographically.
inline std::vector<Chain> maximal_chains(const IntersectionLattice& lat,
                                         std::size_t limit = kDefaultChainLimit) {
  const std::uint64_t total = count_maximal_chains(lat);
  if (total > limit) throw GuardError("maximal chain enumeration", total, limit);
  std::vector<Chain> chains;
  chains.reserve(total);
  Chain current{lat.top()};
  auto walk = [&](auto&& self) -> void {
    std::size_t last = current.back();
    if (last == lat.bottom()) {
      chains.push_back(current);
      return;
    }
    for (std::size_t lo : lat.lower_covers(last)) {
      current.push_back(lo);
      self(self);
      current.pop_back();
    }
  };
  walk(walk);
  return chains;
}

}  // namespace grassarr
