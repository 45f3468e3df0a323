#pragma once

// Reproducible subspace sampling. Every draw is a pure function of
// (seed, stream, counter), so samples can be generated in any order or in
// parallel and still come out bit-identical.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"

namespace grassarr {

inline constexpr std::size_t kMaxSampleAttempts = 10'000;

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t domain, std::uint64_t stream)
      : key_(mix64(mix64(seed) ^ mix64(domain + 0x632be59bd9b4e019ULL) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

  std::uint64_t next() { return mix64(key_ + counter_++ * 0x9e3779b97f4a7c15ULL); }

  // Uniform integer in [lo, hi], by rejection so no value is favored.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Random domains; distinct so structured draws never reuse random streams.
enum class SampleDomain : std::uint64_t { kRandom = 1, kInsideFlat = 2, kFlatPair = 3 };

// k x n integer matrices with entries uniform in [-bound, bound], redrawn
// until the rank is k.
inline Subspace sample_subspace(std::size_t n, std::size_t k, std::uint64_t bound, std::uint64_t seed,
                                std::uint64_t index) {
  if (k > n) throw InputError("sample_subspace: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (k == 0) return Subspace::zero(n);
  const auto b = static_cast<std::int64_t>(bound);
  CounterRng rng(seed, static_cast<std::uint64_t>(SampleDomain::kRandom), index);
  for (std::size_t attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    RationalMatrix m(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.uniform(-b, b);
    Subspace s = canonical_subspace(m);
    if (s.dim() == k) return s;
  }
  throw InputError("sample_subspace: no rank-" + std::to_string(k) + " draw after " +
                   std::to_string(kMaxSampleAttempts) + " attempts (bound " + std::to_string(bound) + ")");
}

// Random integer combination of the rows of `basis`.
inline Vector random_combination(const RationalMatrix& basis, CounterRng& rng, std::int64_t bound) {
  Vector v(basis.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Rational c = rng.uniform(-bound, bound);
    for (std::size_t j = 0; j < basis.cols(); ++j) v[j] += c * basis(r, j);
  }
  return v;
}

struct Sample {
  Subspace subspace;
  std::string origin;       // "random", "flat", "inside-flat", "flat-pair"
  std::uint64_t stream = 0;  // generator stream, or flat id for "flat"
};

struct SampleConfig {
  std::size_t k = 1;
  std::size_t count = 0;
  std::uint64_t bound = 5;
  std::uint64_t seed = 0;
  bool include_flats = false;
};

inline std::size_t flat_pair_count(std::size_t count) { return std::min<std::size_t>(count, 100); }

// Random samples first, then (with include_flats) every flat of dimension
// k, a random k-subspace inside each flat of larger dimension, and
// subspaces spanned partly inside one flat and partly inside another.
inline std::vector<Sample> build_corpus(const IntersectionLattice& lat, const SampleConfig& cfg) {
  const std::size_t n = lat.ambient_dim();
  const std::size_t k = cfg.k;
  if (k > n) throw InputError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  const auto bound = static_cast<std::int64_t>(std::max<std::uint64_t>(cfg.bound, 1));
  std::vector<Sample> out;
  for (std::size_t i = 0; i < cfg.count; ++i)
    out.push_back({sample_subspace(n, k, cfg.bound, cfg.seed, i), "random", i});
  if (!cfg.include_flats) return out;

  for (std::size_t id = 0; id < lat.size(); ++id)
    if (lat.flat(id).subspace.dim() == k) out.push_back({lat.flat(id).subspace, "flat", id});
  if (k == 0) return out;

  auto draw_inside = [&](const std::vector<const Subspace*>& parts, const std::vector<std::size_t>& counts,
                         CounterRng& rng) -> std::optional<Subspace> {
    for (std::size_t attempt = 0; attempt < 64; ++attempt) {
      std::vector<Vector> rows;
      for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t c = 0; c < counts[p]; ++c) rows.push_back(random_combination(parts[p]->basis(), rng, bound));
      Subspace s = span_of(rows, n);
      if (s.dim() == k) return s;
    }
    return std::nullopt;
  };

  for (std::size_t id = 0; id < lat.size(); ++id) {
    const Subspace& x = lat.flat(id).subspace;
    if (x.dim() <= k) continue;
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(SampleDomain::kInsideFlat), id);
    if (auto s = draw_inside({&x}, {k}, rng)) out.push_back({*s, "inside-flat", id});
  }

  if (lat.size() < 2) return out;
  const std::size_t pairs = flat_pair_count(cfg.count);
  for (std::size_t t = 0; t < pairs; ++t) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(SampleDomain::kFlatPair), t);
    const auto last = static_cast<std::int64_t>(lat.size() - 1);
    const auto xi = static_cast<std::size_t>(rng.uniform(0, last));
    const auto yi = static_cast<std::size_t>(rng.uniform(0, last));
    const Subspace& x = lat.flat(xi).subspace;
    const Subspace& y = lat.flat(yi).subspace;
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k)));
    if (j > x.dim() || k - j > y.dim()) continue;
    if (auto s = draw_inside({&x, &y}, {j, k - j}, rng)) out.push_back({*s, "flat-pair", t});
  }
  return out;
}

}  // namespace grassarr
