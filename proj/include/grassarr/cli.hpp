#pragma once

// Command-line front end. Exit codes: 0 success or verification pass,
// 1 usage/input error or guard violation, 2 verification counterexample.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/io.hpp"
#include "grassarr/pluecker.hpp"
#include "grassarr/report.hpp"
#include "grassarr/sampling.hpp"
#include "grassarr/strata.hpp"
#include "grassarr/verify.hpp"

namespace grassarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCounterexample = 2;

struct RunConfig {
  std::string command;
  std::string arrangement_path;
  std::size_t k = 1;
  std::size_t samples = 200;
  std::uint64_t bound = 5;
  std::uint64_t seed = 0;
  bool include_flats = false;
  std::size_t max_chains = kDefaultChainLimit;
  std::size_t max_lattice = kMaxLatticeElements;
  unsigned jobs = 1;
  std::string subspace_path;
  std::string output_path;  // empty = stdout
};

// Worker count is left out: it must never change the report.
inline Json config_json(const RunConfig& c) {
  Json j{{"command", c.command}, {"arrangement", c.arrangement_path}};
  if (c.command == "adjoint" || c.command == "label" || c.command == "verify") j["k"] = c.k;
  if (c.command == "label" || c.command == "restrict") j["subspace"] = c.subspace_path;
  if (c.command == "verify") {
    j["samples"] = c.samples;
    j["bound"] = c.bound;
    j["seed"] = c.seed;
    j["include_flats"] = c.include_flats;
    j["max_lattice"] = c.max_lattice;
  }
  if (c.command != "adjoint" && c.command != "restrict") j["max_chains"] = c.max_chains;
  return j;
}

struct CommandResult {
  std::string text;
  int exit_code = kExitOk;
};

inline CommandResult lattice_command(const RunConfig& cfg, const Arrangement& a) {
  const IntersectionLattice lat = intersection_lattice(a);
  Json by_rank = Json::array();
  for (std::size_t r = 0; r <= lat.rank(); ++r) {
    Json level = Json::array();
    for (std::size_t id : lat.flats_of_rank(r)) level.push_back(flat_json(lat, id));
    by_rank.push_back(level);
  }
  const auto chains = count_maximal_chains(lat);
  if (chains > cfg.max_chains) throw GuardError("maximal chain count", chains, cfg.max_chains);
  Json out{{"config", config_json(cfg)},
           {"arrangement_digest", arrangement_digest(a)},
           {"arrangement", arrangement_json(a)},
           {"rank", lat.rank()},
           {"essential", lat.flat(lat.top()).subspace.dim() == 0},
           {"center", to_json(lat.flat(lat.top()).subspace)},
           {"flat_count", lat.size()},
           {"flats_by_rank", by_rank},
           {"chain_count", chains}};
  return {out.dump(2) + "\n"};
}

inline CommandResult adjoint_command(const RunConfig& cfg, const Arrangement& a) {
  if (cfg.k > a.ambient_dim)
    throw InputError("k=" + std::to_string(cfg.k) + " exceeds n=" + std::to_string(a.ambient_dim));
  const IntersectionLattice lat = intersection_lattice(a);
  Json rows = Json::array();
  for (const auto& h : k_adjoint(lat, cfg.k))
    rows.push_back(Json{{"flat", flat_json(lat, h.source_flat)}, {"coeffs", to_json(h.coeffs)}});
  Json out{{"config", config_json(cfg)},
           {"arrangement_digest", arrangement_digest(a)},
           {"n", a.ambient_dim},
           {"k", cfg.k},
           {"subsets", subsets_json(KSubsetIndex(a.ambient_dim, cfg.k))},
           {"hyperplanes", rows}};
  return {out.dump(2) + "\n"};
}

inline CommandResult label_command(const RunConfig& cfg, const Arrangement& a) {
  const Subspace u = read_subspace_file(cfg.subspace_path);
  const Stratifier ctx(a, cfg.k, {cfg.max_chains, cfg.max_lattice});
  ctx.require_dim(u);
  const SubspaceLabels labels = label_subspace(ctx, u);
  const SubspaceChecks checks = check_subspace(ctx, u, labels);
  const Subspace defect = defect_subspace(a, u, ctx.center_subspace());
  const auto& lat = ctx.lattice();
  Json direct = Json::array();
  for (std::size_t id : lat.flats_of_rank(cfg.k - labels.adjoint.i))
    if (!std::binary_search(labels.adjoint.zero_set.begin(), labels.adjoint.zero_set.end(), id))
      direct.push_back(one_based(lat.flat(id).generators));
  Json out{{"config", config_json(cfg)},
           {"arrangement_digest", arrangement_digest(a)},
           {"subspace", to_json(u)},
           {"i", labels.adjoint.i},
           {"defect", to_json(defect)},
           {"defect_pluecker", to_json(pluecker_vector(defect))},
           {"direct_sum_flats", direct},
           {"labels", to_json(labels, lat)},
           {"consistency_checks", to_json(checks)}};
  return {out.dump(2) + "\n", checks.all() ? kExitOk : kExitCounterexample};
}

inline CommandResult verify_command(const RunConfig& cfg, const Arrangement& a) {
  const Stratifier ctx(a, cfg.k, {cfg.max_chains, cfg.max_lattice});
  SampleConfig sc{cfg.k, cfg.samples, cfg.bound, cfg.seed, cfg.include_flats};
  if (cfg.bound == 0 && cfg.k > 0) throw InputError("--bound must be at least 1");
  VerificationReport report = verify_all(ctx, build_corpus(ctx.lattice(), sc), cfg.jobs);
  const Json out = report_json(config_json(cfg), ctx, report);
  return {out.dump(2) + "\n", report.passed() ? kExitOk : kExitCounterexample};
}

// Output is itself an arrangement file (in the coordinates of U's canonical
// basis), so it can be fed back to the other commands.
inline CommandResult restrict_command(const RunConfig& cfg, const Arrangement& a) {
  const Subspace u = read_subspace_file(cfg.subspace_path);
  if (u.ambient_dim() != a.ambient_dim)
    throw InputError("subspace lives in R^" + std::to_string(u.ambient_dim()) + ", arrangement in R^" +
                     std::to_string(a.ambient_dim));
  if (u.dim() == 0) throw InputError("cannot restrict to the zero subspace");
  std::string text = "# restriction to the subspace spanned by:\n";
  for (std::size_t r = 0; r < u.dim(); ++r) text += "#   " + format_row(u.basis().row(r)) + "\n";
  text += format_arrangement(restriction(a, u));
  return {text};
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Arrangement a = read_arrangement_file(cfg.arrangement_path);
    CommandResult result;
    if (cfg.command == "lattice") result = lattice_command(cfg, a);
    else if (cfg.command == "adjoint") result = adjoint_command(cfg, a);
    else if (cfg.command == "label") result = label_command(cfg, a);
    else if (cfg.command == "verify") result = verify_command(cfg, a);
    else if (cfg.command == "restrict") result = restrict_command(cfg, a);
    else throw InputError("unknown command '" + cfg.command + "'");

    if (cfg.output_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) throw InputError("cannot write '" + cfg.output_path + "'");
      file << result.text;
    }
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
  }
  return kExitInputError;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Grassmannian strata of rational hyperplane arrangements"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("arrangement", cfg.arrangement_path, "Arrangement file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--out", cfg.output_path, "Write output to FILE instead of stdout");
  };
  auto chains = [&](CLI::App* sub) {
    sub->add_option("--max-chains", cfg.max_chains, "Maximal-chain enumeration cap")->capture_default_str();
  };
  auto k_option = [&](CLI::App* sub) { sub->add_option("-k,--k", cfg.k, "Subspace dimension k")->required(); };

  auto* lattice = app.add_subcommand("lattice", "Print the intersection lattice by rank and its chain count");
  common(lattice);
  chains(lattice);

  auto* adjoint = app.add_subcommand("adjoint", "Print the k-adjoint coefficient table");
  common(adjoint);
  k_option(adjoint);

  auto* label = app.add_subcommand("label", "Print all three stratum labels of one subspace");
  common(label);
  k_option(label);
  chains(label);
  label->add_option("--subspace", cfg.subspace_path, "Subspace file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Check that the three labelings agree on a sample");
  common(verify);
  k_option(verify);
  chains(verify);
  verify->add_option("--samples", cfg.samples, "Number of random subspaces")->capture_default_str();
  verify->add_option("--bound", cfg.bound, "Entry bound B for random matrices")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--include-flats", cfg.include_flats, "Add flats and flat-derived subspaces to the sample");
  verify->add_option("--max-lattice", cfg.max_lattice, "Restriction lattice size cap")->capture_default_str();
  verify->add_option("-j,--jobs", cfg.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  auto* restrict_cmd = app.add_subcommand("restrict", "Print A restricted to a subspace, in its basis");
  common(restrict_cmd);
  restrict_cmd->add_option("--subspace", cfg.subspace_path, "Subspace file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace grassarr::cli
