#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "support.hpp"

using namespace grassarr;
using namespace grassarr::testing;

namespace {

// Chains counted directly from inclusion between the oracle's flats.
std::uint64_t oracle_chain_count(const std::set<Subspace>& flats, const Subspace& from, std::size_t n) {
  if (from.dim() == n) return 1;
  std::uint64_t total = 0;
  for (const auto& f : flats)
    if (f.dim() == from.dim() + 1 && from.is_subspace_of(f)) total += oracle_chain_count(flats, f, n);
  return total;
}

}  // namespace

TEST(BuildArrangement, CanonicalizesNormals) {
  Arrangement a = build_arrangement(3, std::vector<Vector>{vec({-2, 2, 0}), vec({0, 3, -3})});
  EXPECT_EQ(a.normals[0], vec({1, -1, 0}));
  EXPECT_EQ(a.normals[1], vec({0, 1, -1}));
  EXPECT_EQ(a.size(), 2u);
}

TEST(BuildArrangement, RejectsBadInput) {
  EXPECT_THROW(build_arrangement(2, std::vector<Vector>{vec({2, 0}), vec({1, 0})}), InputError);
  EXPECT_THROW(build_arrangement(2, std::vector<Vector>{vec({0, 0})}), InputError);
  EXPECT_THROW(build_arrangement(2, std::vector<Vector>{vec({1, 0, 0})}), InputError);
}

TEST(BuildArrangement, NamedFamilies) {
  Arrangement b = braid3();
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.normals[0], vec({1, -1, 0}));
  EXPECT_EQ(b.normals[1], vec({1, 0, -1}));
  EXPECT_EQ(b.normals[2], vec({0, 1, -1}));
  Arrangement bool3 = boolean_arrangement(3);
  ASSERT_EQ(bool3.size(), 3u);
  EXPECT_EQ(bool3.normals[2], vec({0, 0, 1}));
}

TEST(Center, Examples) {
  EXPECT_EQ(center(braid3()), span({{1, 1, 1}}, 3));
  EXPECT_FALSE(is_essential(braid3()));
  EXPECT_TRUE(is_essential(boolean_arrangement(3)));
  EXPECT_EQ(center(empty_arrangement(3)), Subspace::whole(3));
  EXPECT_EQ(center(coordinate_pair_r3()), span({{0, 0, 1}}, 3));
}

TEST(IntersectionLattice, Braid3) {
  IntersectionLattice lat = intersection_lattice(braid3());
  EXPECT_EQ(lat.size(), 5u);
  EXPECT_EQ(lat.rank(), 2u);
  EXPECT_EQ(lat.flats_of_rank(0).size(), 1u);
  EXPECT_EQ(lat.flats_of_rank(1).size(), 3u);
  EXPECT_EQ(lat.flats_of_rank(2).size(), 1u);
  EXPECT_EQ(lat.flat(lat.bottom()).subspace, Subspace::whole(3));
  EXPECT_EQ(lat.flat(lat.top()).subspace, span({{1, 1, 1}}, 3));
  EXPECT_EQ(lat.flat(lat.top()).generators, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(lat.upper_covers(lat.bottom()).size(), 3u);
  EXPECT_EQ(lat.lower_covers(lat.top()).size(), 3u);
}

TEST(IntersectionLattice, Boolean3) {
  IntersectionLattice lat = intersection_lattice(boolean_arrangement(3));
  EXPECT_EQ(lat.size(), 8u);
  EXPECT_EQ(lat.flats_of_rank(1).size(), 3u);
  EXPECT_EQ(lat.flats_of_rank(2).size(), 3u);
  EXPECT_EQ(lat.flat(lat.top()).subspace, Subspace::zero(3));
}

TEST(IntersectionLattice, EmptyArrangement) {
  IntersectionLattice lat = intersection_lattice(empty_arrangement(3));
  EXPECT_EQ(lat.size(), 1u);
  EXPECT_EQ(lat.rank(), 0u);
  EXPECT_EQ(lat.top(), lat.bottom());
}

TEST(IntersectionLattice, FindLocatesFlats) {
  IntersectionLattice lat = intersection_lattice(braid3());
  ASSERT_TRUE(lat.find(span({{1, 1, 1}}, 3)));
  EXPECT_EQ(*lat.find(span({{1, 1, 1}}, 3)), lat.top());
  EXPECT_FALSE(lat.find(span({{1, 0, 0}}, 3)));
}

TEST(IntersectionLattice, MatchesSubsetIntersectionOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t m = 2 + seed % 5;
    Arrangement a = random_arrangement(n, m, seed);
    IntersectionLattice lat = intersection_lattice(a);
    std::set<Subspace> got;
    for (const auto& f : lat.flats()) got.insert(f.subspace);
    EXPECT_EQ(got.size(), lat.size()) << "duplicate flats, seed " << seed;
    EXPECT_EQ(got, subset_intersection_flats(a)) << "seed " << seed;
  }
}

TEST(IntersectionLattice, StructuralInvariants) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const std::size_t n = 2 + seed % 3;
    Arrangement a = random_arrangement(n, 2 + seed % 4, seed);
    IntersectionLattice lat = intersection_lattice(a);
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const Flat& f = lat.flat(id);
      EXPECT_EQ(f.rank, n - f.subspace.dim());
      EXPECT_EQ(f.generators, containing_hyperplanes(a, f.subspace));
      std::vector<Vector> gens;
      for (auto g : f.generators) gens.push_back(a.normals[g]);
      EXPECT_EQ(kernel(RationalMatrix::from_rows(gens, n)), f.subspace);
      // closure under intersection
      for (std::size_t other = 0; other < lat.size(); ++other)
        EXPECT_TRUE(lat.find(intersect(f.subspace, lat.flat(other).subspace)));
      for (std::size_t up : lat.upper_covers(id)) {
        EXPECT_EQ(lat.flat(up).rank, f.rank + 1);
        EXPECT_TRUE(lat.flat(up).subspace.is_subspace_of(f.subspace));
      }
    }
    // every flat of rank r sits on a flat of rank r-1
    for (std::size_t r = 1; r <= lat.rank(); ++r)
      for (std::size_t id : lat.flats_of_rank(r)) EXPECT_FALSE(lat.lower_covers(id).empty());
  }
}

TEST(MaximalChains, KnownCounts) {
  EXPECT_EQ(maximal_chains(intersection_lattice(braid3())).size(), 3u);
  EXPECT_EQ(maximal_chains(intersection_lattice(empty_arrangement(3))).size(), 1u);
  EXPECT_EQ(maximal_chains(intersection_lattice(boolean_arrangement(3))).size(), 6u);
  EXPECT_EQ(maximal_chains(intersection_lattice(boolean_arrangement(4))).size(), 24u);
  EXPECT_EQ(count_maximal_chains(intersection_lattice(braid_arrangement(4))), 18u);
}

TEST(MaximalChains, AreGradedAndDistinct) {
  IntersectionLattice lat = intersection_lattice(braid_arrangement(4));
  auto chains = maximal_chains(lat);
  std::set<Chain> unique(chains.begin(), chains.end());
  EXPECT_EQ(unique.size(), chains.size());
  EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
  for (const auto& c : chains) {
    ASSERT_EQ(c.size(), lat.rank() + 1);
    EXPECT_EQ(c.front(), lat.top());
    EXPECT_EQ(c.back(), lat.bottom());
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
      EXPECT_EQ(lat.flat(c[j]).rank, lat.flat(c[j + 1]).rank + 1);
      EXPECT_TRUE(lat.flat(c[j]).subspace.is_subspace_of(lat.flat(c[j + 1]).subspace));
    }
  }
}

TEST(MaximalChains, CountMatchesInclusionOracle) {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const std::size_t n = 2 + seed % 3;
    Arrangement a = random_arrangement(n, 2 + seed % 4, seed);
    IntersectionLattice lat = intersection_lattice(a);
    const auto flats = subset_intersection_flats(a);
    EXPECT_EQ(maximal_chains(lat).size(), oracle_chain_count(flats, lat.flat(lat.top()).subspace, n));
  }
}

TEST(MaximalChains, GuardTrips) {
  IntersectionLattice lat = intersection_lattice(boolean_arrangement(4));
  EXPECT_THROW(maximal_chains(lat, 23), GuardError);
  EXPECT_NO_THROW(maximal_chains(lat, 24));
}

TEST(Restriction, Braid3OntoSumZeroPlane) {
  // Canonical basis of {x1+x2+x3=0} is (1,0,-1), (0,1,-1); traces are
  // (1,-1), (2,1), (1,2).
  Subspace u = kernel(mat({{1, 1, 1}}));
  Arrangement r = restriction(braid3(), u);
  EXPECT_EQ(r.ambient_dim, 2u);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.normals[0], vec({1, -1}));
  EXPECT_EQ(r.normals[1], vec({2, 1}));
  EXPECT_EQ(r.normals[2], vec({1, 2}));
}

TEST(Restriction, CoincidingTracesMerge) {
  Arrangement r = restriction(boolean_arrangement(2), span({{1, 1}}, 2));
  EXPECT_EQ(r.ambient_dim, 1u);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.normals[0], vec({1}));
}

TEST(Restriction, InsideCenterIsEmpty) {
  Arrangement r = restriction(braid3(), span({{1, 1, 1}}, 3));
  EXPECT_EQ(r.ambient_dim, 1u);
  EXPECT_EQ(r.size(), 0u);
}

TEST(Restriction, WholeSpaceIsIdentity) {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    Arrangement a = random_arrangement(3, 4, seed);
    EXPECT_EQ(restriction(a, Subspace::whole(3)), a);
  }
}

TEST(Restriction, ZeroSubspaceRejected) {
  EXPECT_THROW(restriction(braid3(), Subspace::zero(3)), std::invalid_argument);
}

TEST(Restriction, FlatCountMatchesTracesInsideU) {
  // Flats of A|_U correspond to distinct subspaces X ∩ U.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    Arrangement a = random_arrangement(4, 5, 400 + t);
    Subspace u = random_subspace(rng, 4, 2 + t % 2);
    std::set<Subspace> traces;
    const IntersectionLattice lat = intersection_lattice(a);
    for (const auto& f : lat.flats()) traces.insert(intersect(f.subspace, u));
    EXPECT_EQ(intersection_lattice(restriction(a, u)).size(), traces.size());
  }
}

TEST(ParseArrangement, CommentsFractionsAndBlanks) {
  Arrangement a = parse_arrangement("# braid\n3\n\n1 -1 0   # first\n2/2 0 -1\n0 1 -1\n");
  EXPECT_EQ(a, braid3());
}

TEST(ParseArrangement, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_arrangement(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("x\n"), 1u);
  EXPECT_EQ(line_of("2 3\n"), 1u);
  EXPECT_EQ(line_of("3\n1 0 0\n1 0\n"), 3u);
  EXPECT_EQ(line_of("3\n1 0 0\n# note\n2 0 0\n"), 4u);
  EXPECT_EQ(line_of("2\n0 0\n"), 2u);
  EXPECT_EQ(line_of("2\n1 1/0\n"), 2u);
}

TEST(ParseArrangement, FormatRoundTrips) {
  Arrangement a = random_arrangement(4, 5, 77);
  EXPECT_EQ(parse_arrangement(format_arrangement(a)), a);
}

TEST(ParseSubspace, Examples) {
  EXPECT_EQ(parse_subspace("3 2\n1 0 0\n0 1 1\n"), span({{1, 0, 0}, {0, 1, 1}}, 3));
  EXPECT_EQ(parse_subspace("3 0\n"), Subspace::zero(3));
  EXPECT_THROW(parse_subspace("3 2\n1 0 0\n2 0 0\n"), ParseError);
  EXPECT_THROW(parse_subspace("3 2\n1 0 0\n"), ParseError);
  EXPECT_THROW(parse_subspace("2 3\n"), ParseError);
}
