#pragma once

// Empirical certification over a sample of k-subspaces: the three labelings
// must induce one partition, and subspaces sharing a label must have
// isomorphic restriction lattices.

#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grassarr/matroid.hpp"
#include "grassarr/sampling.hpp"
#include "grassarr/strata.hpp"

namespace grassarr {

// Blocks of sample indices; blocks ordered by first member, members ascending.
// Two partitions of the same list are equal as set partitions iff equal here.
using Partition = std::vector<std::vector<std::size_t>>;

template <typename Label>
Partition partition_by(const std::vector<Label>& labels) {
  Partition blocks;
  std::map<Label, std::size_t> block_of;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = block_of.emplace(labels[i], blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

// Runs fn(i) for i in [0, count) on `jobs` threads. Results must be written
// to per-index slots; the first exception in index order is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::atomic<std::size_t> next{0};
  if (jobs <= 1 || count <= 1) {
    worker(next);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, std::ref(next));
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

enum class LabelKind { kMatroid, kAdjoint, kSchubert };

inline const char* label_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::kMatroid: return "matroid";
    case LabelKind::kAdjoint: return "adjoint";
    case LabelKind::kSchubert: return "schubert";
  }
  return "?";
}

// Samples first and second carry the same `agree` label but different
// `differ` labels.
struct Witness {
  LabelKind agree;
  LabelKind differ;
  std::size_t first;
  std::size_t second;
};

struct ClassCheck {
  std::string grouping;        // "matroid", or "adjoint" when A is essential
  std::size_t block = 0;
  std::size_t members = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_guarded = 0;
  std::vector<std::pair<std::size_t, std::size_t>> non_isomorphic;
};

struct VerificationReport {
  std::size_t k = 0;
  std::vector<Sample> samples;
  std::vector<SubspaceLabels> labels;
  SubspaceChecks checks;

  bool equivalence_checked = false;
  Partition matroid_partition;
  Partition adjoint_partition;
  Partition schubert_partition;
  bool matroid_eq_adjoint = false;
  bool matroid_eq_schubert = false;
  bool adjoint_eq_schubert = false;
  std::vector<Witness> witnesses;

  bool classification_checked = false;
  std::vector<ClassCheck> class_checks;
  // Representatives of two different matroid classes with non-isomorphic
  // restriction lattices, when one exists.
  std::optional<std::pair<std::size_t, std::size_t>> discriminating_pair;

  bool partitions_equal() const { return matroid_eq_adjoint && matroid_eq_schubert && adjoint_eq_schubert; }

  bool classification_passed() const {
    for (const auto& c : class_checks)
      if (!c.non_isomorphic.empty()) return false;
    return true;
  }

  bool passed() const {
    if (equivalence_checked && !partitions_equal()) return false;
    if (classification_checked && !classification_passed()) return false;
    return checks.all();
  }
};

namespace detail {

template <typename Get>
auto project_labels(const std::vector<SubspaceLabels>& labels, Get get) {
  std::vector<std::decay_t<decltype(get(labels.front()))>> out;
  for (const auto& l : labels) out.push_back(get(l));
  return out;
}

inline bool same_label(const SubspaceLabels& a, const SubspaceLabels& b, LabelKind kind) {
  switch (kind) {
    case LabelKind::kMatroid: return a.matroid == b.matroid;
    case LabelKind::kAdjoint: return a.adjoint == b.adjoint;
    case LabelKind::kSchubert: return a.schubert == b.schubert;
  }
  return false;
}

// First pair in sample order that agrees on `agree` and differs on `differ`.
inline std::optional<Witness> find_witness(const std::vector<SubspaceLabels>& labels, LabelKind agree,
                                           LabelKind differ) {
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (same_label(labels[a], labels[b], agree) && !same_label(labels[a], labels[b], differ))
        return Witness{agree, differ, a, b};
  return std::nullopt;
}

}  // namespace detail

// Labels every sample (and runs the per-subspace consistency checks) on `jobs`
// threads; output order is sample order regardless of scheduling.
inline VerificationReport label_samples(const Stratifier& ctx, std::vector<Sample> samples, unsigned jobs = 1) {
  VerificationReport report;
  report.k = ctx.k();
  for (const auto& s : samples) ctx.require_dim(s.subspace);
  std::vector<SubspaceLabels> labels(samples.size());
  std::vector<SubspaceChecks> checks(samples.size());
  parallel_for(samples.size(), jobs, [&](std::size_t i) {
    labels[i] = label_subspace(ctx, samples[i].subspace);
    checks[i] = check_subspace(ctx, samples[i].subspace, labels[i]);
  });
  for (const auto& c : checks) report.checks += c;
  report.samples = std::move(samples);
  report.labels = std::move(labels);
  return report;
}

inline void check_partitions(VerificationReport& report) {
  const auto& labels = report.labels;
  report.matroid_partition = partition_by(detail::project_labels(labels, [](auto& l) { return l.matroid; }));
  report.adjoint_partition = partition_by(detail::project_labels(labels, [](auto& l) { return l.adjoint; }));
  report.schubert_partition = partition_by(detail::project_labels(labels, [](auto& l) { return l.schubert; }));
  report.matroid_eq_adjoint = report.matroid_partition == report.adjoint_partition;
  report.matroid_eq_schubert = report.matroid_partition == report.schubert_partition;
  report.adjoint_eq_schubert = report.adjoint_partition == report.schubert_partition;
  report.equivalence_checked = true;
  report.witnesses.clear();
  if (report.partitions_equal()) return;
  const LabelKind kinds[] = {LabelKind::kMatroid, LabelKind::kAdjoint, LabelKind::kSchubert};
  for (auto agree : kinds)
    for (auto differ : kinds)
      if (agree != differ)
        if (auto w = detail::find_witness(labels, agree, differ)) report.witnesses.push_back(*w);
}

namespace detail {

inline ClassCheck check_block(const std::string& grouping, std::size_t block_id,
                              const std::vector<std::size_t>& block,
                              const std::vector<std::optional<RankedLattice>>& lattices, std::size_t limit) {
  ClassCheck c{grouping, block_id, block.size(), 0, 0, {}};
  for (std::size_t x = 0; x < block.size(); ++x)
    for (std::size_t y = x + 1; y < block.size(); ++y) {
      const auto& l1 = lattices[block[x]];
      const auto& l2 = lattices[block[y]];
      if (!l1 || !l2) {
        ++c.pairs_guarded;
        continue;
      }
      try {
        ++c.pairs_checked;
        if (!lattice_isomorphic(*l1, *l2, limit)) c.non_isomorphic.emplace_back(block[x], block[y]);
      } catch (const GuardError&) {
        --c.pairs_checked;
        ++c.pairs_guarded;
      }
    }
  return c;
}

}  // namespace detail

// Within every matroid class, all pairs of restriction lattices must be
// isomorphic. For essential arrangements the same is checked for classes of
// the adjoint label with i = 0.
inline void check_restriction_classes(const Stratifier& ctx, VerificationReport& report, unsigned jobs = 1) {
  const std::size_t count = report.samples.size();
  const std::size_t limit = ctx.limits().max_lattice;
  std::vector<std::optional<RankedLattice>> lattices(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const Subspace& u = report.samples[i].subspace;
    if (u.dim() == 0) return;
    RankedLattice l = restriction_lattice(ctx.arrangement(), u);
    if (l.size() <= limit) lattices[i] = std::move(l);
  });

  report.class_checks.clear();
  const Partition by_matroid =
      partition_by(detail::project_labels(report.labels, [](auto& l) { return l.matroid; }));
  for (std::size_t b = 0; b < by_matroid.size(); ++b)
    report.class_checks.push_back(detail::check_block("matroid", b, by_matroid[b], lattices, limit));

  if (ctx.center_subspace().dim() == 0) {
    const Partition by_adjoint =
        partition_by(detail::project_labels(report.labels, [](auto& l) { return l.adjoint; }));
    for (std::size_t b = 0; b < by_adjoint.size(); ++b)
      if (report.labels[by_adjoint[b].front()].adjoint.i == 0)
        report.class_checks.push_back(detail::check_block("adjoint", b, by_adjoint[b], lattices, limit));
  }

  report.discriminating_pair.reset();
  for (std::size_t a = 0; a < by_matroid.size() && !report.discriminating_pair; ++a)
    for (std::size_t b = a + 1; b < by_matroid.size(); ++b) {
      const auto& l1 = lattices[by_matroid[a].front()];
      const auto& l2 = lattices[by_matroid[b].front()];
      if (l1 && l2 && !lattice_isomorphic(*l1, *l2, limit)) {
        report.discriminating_pair = {by_matroid[a].front(), by_matroid[b].front()};
        break;
      }
    }
  report.classification_checked = true;
}

inline VerificationReport verify_equivalence(const Stratifier& ctx, std::vector<Sample> samples, unsigned jobs = 1) {
  VerificationReport report = label_samples(ctx, std::move(samples), jobs);
  check_partitions(report);
  return report;
}

inline VerificationReport verify_restriction_classification(const Stratifier& ctx, std::vector<Sample> samples,
                                                            unsigned jobs = 1) {
  VerificationReport report = label_samples(ctx, std::move(samples), jobs);
  check_restriction_classes(ctx, report, jobs);
  return report;
}

// Both verifications over one labeling pass.
inline VerificationReport verify_all(const Stratifier& ctx, std::vector<Sample> samples, unsigned jobs = 1) {
  VerificationReport report = label_samples(ctx, std::move(samples), jobs);
  check_partitions(report);
  check_restriction_classes(ctx, report, jobs);
  return report;
}

inline std::vector<Sample> as_samples(const std::vector<Subspace>& subspaces) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < subspaces.size(); ++i) out.push_back({subspaces[i], "given", i});
  return out;
}

}  // namespace grassarr
