#pragma once

// JSON encodings. Keys keep insertion order so output bytes depend only on
// the data. Exact integers are written as JSON numbers when they fit in 64
// bits and as decimal strings otherwise; non-integral rationals are always
// strings "p/q". Hyperplane labels, flat generators, k-subsets and chain
// positions are 1-based; sample indices and flat ids are 0-based.

#include <openssl/evp.h>

#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "grassarr/arrangement.hpp"
#include "grassarr/io.hpp"
#include "grassarr/matroid.hpp"
#include "grassarr/pluecker.hpp"
#include "grassarr/strata.hpp"
#include "grassarr/verify.hpp"

namespace grassarr {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) {
  if (is_integral(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Json to_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(to_json(s.basis().row(r)));
  return rows;
}

inline Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

inline Json flat_json(const IntersectionLattice& lat, std::size_t id) {
  const Flat& f = lat.flat(id);
  return Json{{"id", id}, {"rank", f.rank}, {"dim", f.subspace.dim()}, {"generators", one_based(f.generators)},
              {"basis", to_json(f.subspace)}};
}

inline Json subsets_json(const KSubsetIndex& index) {
  Json out = Json::array();
  for (const auto& s : index.subsets()) out.push_back(one_based(s));
  return out;
}

inline Json to_json(const PlueckerVector& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"subsets", subsets_json(KSubsetIndex(p.n, p.k))}, {"coords", to_json(p.coords)}};
}

inline Json to_json(const Matroid& m) {
  Json b = Json::array();
  for (auto mask : bases(m)) b.push_back(mask);
  return Json{{"m", m.ground_size}, {"rank", m.rank()}, {"bases", b}, {"loops", one_based(loops(m))}};
}

// Zero-set flats are named by their (closed) generator sets.
inline Json to_json(const AdjointLabel& label, const IntersectionLattice& lat) {
  Json zs = Json::array();
  for (auto id : label.zero_set) zs.push_back(one_based(lat.flat(id).generators));
  return Json{{"i", label.i}, {"zero_set", zs}};
}

inline Json to_json(const SchubertLabel& label) {
  Json sigma = Json::array();
  for (const auto& s : label.sigma) sigma.push_back(s);
  return Json{{"i", label.i}, {"sigma", sigma}};
}

inline Json to_json(const SubspaceLabels& l, const IntersectionLattice& lat) {
  return Json{{"matroid", to_json(l.matroid.matroid)}, {"adjoint", to_json(l.adjoint, lat)},
              {"schubert", to_json(l.schubert)}};
}

inline Json to_json(const Agreement& a) {
  return Json{{"checked", a.checked}, {"agreed", a.agreed}, {"pass", a.all()}};
}

inline Json to_json(const SubspaceChecks& c) {
  return Json{{"direct_sum_vs_adjoint", to_json(c.direct_sum)},
              {"rank_formula", to_json(c.rank_formula)},
              {"basis_equivalence", to_json(c.basis_triple)},
              {"schubert_recovers_direct_sum_flats", to_json(c.schubert_lu)}};
}

inline Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p) out.push_back(block);
  return out;
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// Digest of the canonical text form, so equivalent input files agree.
inline std::string arrangement_digest(const Arrangement& a) { return "sha256:" + sha256_hex(format_arrangement(a)); }

inline Json arrangement_json(const Arrangement& a) {
  Json normals = Json::array();
  for (const auto& v : a.normals) normals.push_back(to_json(v));
  return Json{{"n", a.ambient_dim}, {"m", a.size()}, {"normals", normals}};
}

inline Json report_json(const Json& config, const Stratifier& ctx, const VerificationReport& report) {
  const auto& lat = ctx.lattice();
  Json out;
  out["config"] = config;
  out["arrangement_digest"] = arrangement_digest(ctx.arrangement());
  out["arrangement"] = arrangement_json(ctx.arrangement());
  out["lattice"] = Json{{"rank", lat.rank()}, {"flats", lat.size()}, {"chains", ctx.chains().size()},
                        {"essential", ctx.center_subspace().dim() == 0}};

  Json samples = Json::array();
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const Sample& s = report.samples[i];
    samples.push_back(Json{{"index", i},
                           {"origin", s.origin},
                           {"stream", s.stream},
                           {"basis", to_json(s.subspace)},
                           {"labels", to_json(report.labels[i], lat)}});
  }
  out["samples"] = samples;

  if (report.equivalence_checked)
    out["partitions"] = Json{{"matroid", to_json(report.matroid_partition)},
                             {"adjoint", to_json(report.adjoint_partition)},
                             {"schubert", to_json(report.schubert_partition)}};

  Json verdicts;
  if (report.equivalence_checked) {
    verdicts["strata"] = report.matroid_partition.size();
    verdicts["matroid_eq_adjoint"] = report.matroid_eq_adjoint;
    verdicts["matroid_eq_schubert"] = report.matroid_eq_schubert;
    verdicts["adjoint_eq_schubert"] = report.adjoint_eq_schubert;
    verdicts["partitions_equal"] = report.partitions_equal();
  }
  if (report.classification_checked) verdicts["restriction_classification"] = report.classification_passed();
  verdicts["consistency_checks"] = to_json(report.checks);
  verdicts["pass"] = report.passed();
  out["verdicts"] = verdicts;

  if (report.classification_checked) {
    Json classes = Json::array();
    for (const auto& c : report.class_checks) {
      Json bad = Json::array();
      for (auto [a, b] : c.non_isomorphic) bad.push_back({a, b});
      classes.push_back(Json{{"grouping", c.grouping},
                             {"block", c.block},
                             {"members", c.members},
                             {"pairs_checked", c.pairs_checked},
                             {"pairs_guarded", c.pairs_guarded},
                             {"non_isomorphic", bad}});
    }
    out["classification"] = classes;
    out["discriminating_pair"] = report.discriminating_pair
                                     ? Json{report.discriminating_pair->first, report.discriminating_pair->second}
                                     : Json(nullptr);
  }

  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(Json{{"agree", label_name(w.agree)},
                             {"differ", label_name(w.differ)},
                             {"first", w.first},
                             {"second", w.second}});
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace grassarr
