#include "latcube/gen.hpp"
#include "latcube/idp.hpp"
#include "latcube/normal_fan.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace latcube;

namespace {

Polytope trapezoid() { return from_vertices({{0, 0}, {3, 0}, {0, 1}, {2, 1}}); }

Polytope random_polytope(Rng& rng, int d, long long bound) {
  const auto pts = oracle::random_points(rng, d, d + 2, bound);
  return from_vertices(std::span<const LatticeVector>(pts));
}

}  // namespace

TEST(MinkowskiSum, Examples) {
  const Polytope t = trapezoid();
  const Polytope s = minkowski_sum(t, t);
  EXPECT_EQ(s, dilate(t, Rational(2)));
  EXPECT_EQ(lattice_points(s).size(), 18u);
  const Polytope sq = from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const Polytope tri = from_vertices({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(minkowski_sum(sq, tri).num_vertices(), 5);
  EXPECT_EQ(minkowski_sum(sq, tri), minkowski_sum(tri, sq));
}

TEST(Idp, ReeveCounterexample) {
  const Polytope r = reeve_simplex(2);
  const IdpReport brute = is_idp_pair_bruteforce(r, r);
  const IdpReport regions = is_idp_pair_regions(r, r);
  EXPECT_FALSE(brute.verdict);
  EXPECT_FALSE(regions.verdict);
  ASSERT_EQ(regions.counterexamples.size(), 1u);
  EXPECT_EQ(regions.counterexamples[0].point, lattice_vector({1, 1, 1}));
  ASSERT_TRUE(regions.counterexamples[0].region_point);
  const RationalPoint& rp = *regions.counterexamples[0].region_point;
  EXPECT_TRUE(r.contains(rp));
  EXPECT_TRUE(r.contains(RationalPoint(to_rational(lattice_vector({1, 1, 1})) - rp)));
  EXPECT_TRUE(is_idp_pair_regions(reeve_simplex(1), reeve_simplex(1)).verdict);
  EXPECT_FALSE(is_idp(reeve_simplex(3)).verdict);
}

TEST(Idp, CheckersAgree) {
  Rng rng(41);
  for (int d = 2; d <= 3; ++d) {
    for (int t = 0; t < 25; ++t) {
      const Polytope p = random_polytope(rng, d, 3);
      const Polytope q = random_polytope(rng, d, 3);
      const IdpReport a = is_idp_pair_bruteforce(p, q);
      const IdpReport b = is_idp_pair_regions(p, q);
      EXPECT_EQ(a.verdict, b.verdict);
      ASSERT_EQ(a.counterexamples.size(), b.counterexamples.size());
      for (std::size_t i = 0; i < a.counterexamples.size(); ++i)
        EXPECT_EQ(a.counterexamples[i].point, b.counterexamples[i].point);
      for (const auto& dec : b.decompositions) {
        EXPECT_TRUE(p.contains(dec.first));
        EXPECT_TRUE(q.contains(dec.second));
        EXPECT_EQ(LatticeVector(dec.first + dec.second), dec.point);
      }
    }
  }
}

TEST(Idp, SymmetricAndUnimodularInvariant) {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const Polytope p = random_polytope(rng, 3, 3);
    const Polytope q = random_polytope(rng, 3, 2);
    const bool v = is_idp_pair_regions(p, q).verdict;
    EXPECT_EQ(is_idp_pair_regions(q, p).verdict, v);
    const UnimodularMap u = random_unimodular(3, static_cast<std::uint64_t>(t), 2);
    const UnimodularMap shift = UnimodularMap::make(IntegerMatrix::Identity(3, 3), lattice_vector({2, -1, 0}));
    EXPECT_EQ(is_idp_pair_regions(apply_unimodular(u, p), apply_unimodular(u.then(shift), q)).verdict, v);
  }
}

TEST(Idp, RegionNonemptyIffInSum) {
  Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    const Polytope p = random_polytope(rng, 2, 4);
    const Polytope q = random_polytope(rng, 2, 4);
    const Polytope s = minkowski_sum(p, q);
    auto [lo, hi] = s.integer_bounds();
    for (int k = 0; k < 30; ++k) {
      LatticeVector a(2);
      for (int i = 0; i < 2; ++i)
        a(i) = rng.uniform(lo(i).convert_to<long long>() - 1, hi(i).convert_to<long long>() + 1);
      const auto rp = region_point(p, q, a);
      EXPECT_EQ(rp.has_value(), s.contains(a));
      if (rp) {
        EXPECT_TRUE(p.contains(*rp));
        EXPECT_TRUE(q.contains(RationalPoint(to_rational(a) - *rp)));
      }
      const bool has_lattice = find_lattice_point(decomposition_region(p, q, a)).has_value();
      bool oracle_has = false;
      for (const auto& x : oracle::lattice_points(p))
        if (q.contains(LatticeVector(a - x))) oracle_has = true;
      EXPECT_EQ(has_lattice, oracle_has);
    }
  }
}

TEST(Idp, SmoothCubePairs) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = gen_smooth_cube({3, 3, 1, seed});
    const auto c = recognize_cube(g.polytope);
    ASSERT_TRUE(c);
    const auto partner = equivalent_partner(g.polytope, seed);
    ASSERT_TRUE(minkowski_equivalent(g.polytope, partner.polytope));
    const auto c2 = recognize_cube(partner.polytope);
    ASSERT_TRUE(c2);
    EXPECT_TRUE(idp_cube_pair(*c, *c2).verdict);
  }
  const auto sq = recognize_cube(from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const auto tr = recognize_cube(trapezoid());
  EXPECT_THROW(idp_cube_pair(*sq, *tr), std::invalid_argument);
}

TEST(Idp, Dilations) {
  const Polytope cube = from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const IdpReport r = is_idp(cube, 1);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.dilations_checked, (std::vector<int>{1, 2}));
}
