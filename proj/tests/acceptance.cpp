// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exit status is 0 only when all criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grassarr/cli.hpp"
#include "grassarr/grassarr.hpp"

using namespace grassarr;

namespace {

constexpr std::size_t kSamples = 500;
constexpr std::uint64_t kSeed = 20240101;
constexpr std::uint64_t kArrangementSeed = 2024;

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Five distinct hyperplanes in R^4 with entries in [-3, 3], drawn from the
// library's counter-based generator so the corpus is fixed.
Arrangement random_corpus_arrangement() {
  CounterRng rng(kArrangementSeed, 99, 0);
  std::vector<Vector> normals;
  std::set<Vector, bool (*)(const Vector&, const Vector&)> seen(
      [](const Vector& a, const Vector& b) { return compare(a, b) < 0; });
  while (normals.size() < 5) {
    Vector v(4);
    for (auto& x : v) x = rng.uniform(-3, 3);
    if (is_zero(v) || !seen.insert(primitive_integer(v)).second) continue;
    normals.push_back(v);
  }
  return build_arrangement(4, normals);
}

struct Corpus {
  std::string name;
  Arrangement arrangement;
  std::size_t k;
  bool triple_check;  // included in the triple-equivalence criterion
};

struct CorpusRun {
  const Corpus* corpus = nullptr;
  std::size_t samples = 0;
  std::size_t strata = 0;
  VerificationReport report;
};

std::vector<Corpus> corpora() {
  const Arrangement braid = braid_arrangement(3);
  const Arrangement b3 = boolean_arrangement(3);
  const Arrangement pair = build_arrangement(3, std::vector<Vector>{{1, 0, 0}, {0, 1, 0}});
  return {
      {"(a) braid-3, k=1", braid, 1, true},
      {"(a) braid-3, k=2", braid, 2, true},
      {"(b) B3, k=1", b3, 1, true},
      {"(b) B3, k=2", b3, 2, true},
      {"(c) B4, k=2", boolean_arrangement(4), 2, false},
      {"(d) random 5 in R^4, k=2", random_corpus_arrangement(), 2, false},
      {"(e) {x1=0,x2=0} in R^3, k=1", pair, 1, true},
      {"(e) {x1=0,x2=0} in R^3, k=2", pair, 2, true},
  };
}

struct Line {
  bool pass;
  std::string detail;
};

void print(int criterion, const std::string& title, const Line& line) {
  std::cout << (line.pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << title << " -- "
            << line.detail << std::endl;
}

std::string agreement(const Agreement& a) {
  return std::to_string(a.agreed) + "/" + std::to_string(a.checked);
}

Line criterion1(const std::vector<CorpusRun>& runs) {
  bool pass = true;
  std::ostringstream out;
  for (const auto& r : runs) {
    pass &= r.report.partitions_equal() && r.report.witnesses.empty();
    out << "\n      " << r.corpus->name << ": " << r.samples << " subspaces, " << r.strata << " strata, "
        << (r.report.partitions_equal() ? "partitions identical" : "PARTITIONS DIFFER");
  }
  return {pass, std::to_string(runs.size()) + " corpora" + out.str()};
}

Line criterion2(const std::vector<CorpusRun>& runs) {
  Agreement total;
  for (const auto& r : runs) total += r.report.checks.direct_sum;
  return {total.all() && total.checked > 0, "adjoint zero-status vs direct-sum determinant " + agreement(total)};
}

Line criterion3(const std::vector<CorpusRun>& runs) {
  Agreement total;
  bool exhaustive = true;
  for (const auto& r : runs) {
    total += r.report.checks.rank_formula;
    const std::size_t m = r.corpus->arrangement.size();
    exhaustive &= m <= 6 && r.report.checks.rank_formula.checked == r.samples * (std::size_t{1} << m);
  }
  return {total.all() && exhaustive,
          "projection rank vs codim of U ∩ ⋂H_i over all 2^m subsets " + agreement(total) +
              (exhaustive ? "" : " (NOT exhaustive)")};
}

Line criterion4(const std::vector<CorpusRun>& runs) {
  Agreement total;
  for (const auto& r : runs)
    if (r.corpus->triple_check) total += r.report.checks.basis_triple;
  return {total.all() && total.checked > 0, "basis / independent / direct-sum over all |I|=k-i, corpora a,b,e " +
                                                agreement(total)};
}

Line criterion5(const std::vector<CorpusRun>& runs) {
  bool pass = true;
  std::size_t classes = 0, pairs = 0, guarded = 0, bad = 0;
  std::string discriminating;
  for (const auto& r : runs) {
    pass &= r.report.classification_passed();
    for (const auto& c : r.report.class_checks) {
      ++classes;
      pairs += c.pairs_checked;
      guarded += c.pairs_guarded;
      bad += c.non_isomorphic.size();
    }
    if (r.report.discriminating_pair && discriminating.empty()) {
      auto [x, y] = *r.report.discriminating_pair;
      discriminating = r.corpus->name + " samples " + std::to_string(x) + " (" +
                       r.report.samples[x].origin + ") and " + std::to_string(y) + " (" +
                       r.report.samples[y].origin + ")";
    }
  }
  pass &= !discriminating.empty() && guarded == 0;
  std::ostringstream out;
  out << classes << " classes, " << pairs << " isomorphic pairs, " << bad << " non-isomorphic, " << guarded
      << " skipped by guard; discriminating pair: " << (discriminating.empty() ? "none" : discriminating);
  return {pass, out.str()};
}

Line criterion6() {
  bool pass = true;
  std::size_t arrangements = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      ++arrangements;
      const auto adj = k_adjoint(boolean_arrangement(n), k);
      if (k == n) {
        pass &= adj.empty();
        continue;
      }
      pass &= adj.size() == KSubsetIndex(n, k).size();
      std::set<std::size_t> support;
      for (const auto& h : adj) {
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < h.coeffs.size(); ++i)
          if (sgn(h.coeffs[i]) != 0) {
            ++nonzero;
            support.insert(i);
          }
        pass &= nonzero == 1;
      }
      pass &= support.size() == adj.size();
    }
  return {pass, std::to_string(arrangements) +
                    " (n,k) pairs, n<=4: C(n,k) single-coordinate hyperplanes for k<n, empty A^(n)"};
}

Line criterion7() {
  const std::string dir = GRASSARR_DATA_DIR;
  struct Case {
    std::string file;
    std::string k;
  };
  const std::vector<Case> cases{{"braid3.txt", "1"}, {"coordinate_pair3.txt", "2"}, {"generic5_r4.txt", "2"}};
  bool pass = true;
  std::size_t bytes = 0;
  for (const auto& c : cases) {
    auto run = [&](const std::string& jobs) {
      std::vector<std::string> args{"grassarr", "verify", dir + "/" + c.file, "-k", c.k, "--samples",
                                    std::to_string(kSamples), "--include-flats", "--seed", "7", "-j", jobs};
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      return std::make_pair(code, out.str());
    };
    const auto first = run("1");
    const auto second = run("1");
    const auto threaded = run("4");
    pass &= first.first == cli::kExitOk && first == second && first == threaded;
    bytes += first.second.size();
  }
  return {pass, std::to_string(cases.size()) + " verify reports (" + std::to_string(bytes) +
                    " bytes) identical across repeated runs and -j 1 vs -j 4"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Corpus> all = corpora();
  const unsigned jobs = worker_count();

  std::vector<CorpusRun> runs;
  try {
    for (const auto& c : all) {
      const Stratifier ctx(c.arrangement, c.k);
      auto samples = build_corpus(ctx.lattice(), SampleConfig{c.k, kSamples, 5, kSeed, true});
      CorpusRun run;
      run.corpus = &c;
      run.samples = samples.size();
      run.report = verify_all(ctx, std::move(samples), jobs);
      run.strata = run.report.matroid_partition.size();
      runs.push_back(std::move(run));
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL  corpus construction: " << e.what() << std::endl;
    return 1;
  }
  std::cout << "corpus (d) normals:";
  for (const auto& v : all[5].arrangement.normals) std::cout << " (" << format_row(v) << ")";
  std::cout << "\n";

  std::vector<std::pair<std::string, std::function<Line()>>> criteria{
      {"partition equality (matroid = adjoint = Schubert)", [&] { return criterion1(runs); }},
      {"adjoint evaluation biconditional", [&] { return criterion2(runs); }},
      {"rank equality", [&] { return criterion3(runs); }},
      {"triple equivalence", [&] { return criterion4(runs); }},
      {"restriction classification", [&] { return criterion5(runs); }},
      {"Boolean adjoint structure", [] { return criterion6(); }},
      {"determinism", [] { return criterion7(); }},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    try {
      line = criteria[i].second();
    } catch (const std::exception& e) {
      line = {false, std::string("exception: ") + e.what()};
    }
    print(static_cast<int>(i + 1), criteria[i].first, line);
    all_pass &= line.pass;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("elapsed %.1f s, %u workers\n", seconds, jobs);
  return all_pass ? 0 : 1;
}
