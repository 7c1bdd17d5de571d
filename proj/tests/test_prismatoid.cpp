#include "latcube/gen.hpp"
#include "latcube/prismatoid.hpp"
#include "latcube/smooth.hpp"

#include <gtest/gtest.h>

using namespace latcube;

namespace {

Polytope unit_cube() {
  return from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

/// Trapezoid prism of height h with the lift edges sheared by (shear, 0, 1).
Polytope trapezoid_prism(long long h, long long shear) {
  std::vector<LatticeVector> pts;
  for (auto [x, y] : std::vector<std::pair<long long, long long>>{{0, 0}, {3, 0}, {0, 1}, {2, 1}}) {
    pts.push_back(lattice_vector({x, y, 0}));
    pts.push_back(lattice_vector({x + shear * h, y, h}));
  }
  return from_vertices(std::span<const LatticeVector>(pts));
}

}  // namespace

TEST(Prismatoid, Detect) {
  const auto s = detect_prismatoid(unit_cube());
  ASSERT_TRUE(s);
  EXPECT_EQ(s->bottom_normal, lattice_vector({0, 0, -1}));
  EXPECT_EQ(s->bottom_vertices.size(), 4u);
  const Polytope simplex = from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_FALSE(detect_prismatoid(simplex));
  EXPECT_THROW(normalize_axis(simplex), std::invalid_argument);
}

TEST(Prismatoid, SlicesOfHeightTwo) {
  const Polytope p = trapezoid_prism(2, 1);
  const SliceDecomposition d = slices(p);
  ASSERT_EQ(d.slices.size(), 3u);
  EXPECT_EQ(d.bottom_height, 0);
  EXPECT_EQ(d.top_height, 2);
  for (const auto& s : d.slices) {
    EXPECT_EQ(s.polytope.dim(), 2);
    EXPECT_TRUE(s.polytope.is_lattice());
  }
  EXPECT_EQ(d.slices[1].polytope, from_vertices({{1, 0}, {4, 0}, {1, 1}, {3, 1}}));
  EXPECT_TRUE(verify_slice_lemmas(p).all_pass());
}

TEST(Prismatoid, NonIntegralSliceControl) {
  const Polytope p = from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                    {1, 0, 2}, {2, 0, 2}, {1, 1, 2}, {2, 1, 2}});
  EXPECT_FALSE(is_smooth(p));
  const SliceLemmaReport r = verify_slice_lemmas(p);
  EXPECT_FALSE(r.all_pass());
  ASSERT_TRUE(r.non_integral_vertex);
  EXPECT_EQ(*r.non_integral_vertex, (RationalPoint(3) << Rational(1, 2), 0, 1).finished());
}

TEST(Prismatoid, GeneratedPassLemmas) {
  for (int d = 3; d <= 4; ++d) {
    for (std::uint64_t seed = 1; seed <= (d == 3 ? 10u : 3u); ++seed) {
      const auto g = gen_smooth_prismatoid({d, 3, 2, seed});
      EXPECT_TRUE(is_smooth(g.polytope));
      ASSERT_TRUE(detect_prismatoid(g.polytope));
      const NormalizedPrismatoid n = normalize_axis(g.polytope);
      EXPECT_EQ(apply_unimodular(n.map.inverse(), n.polytope), g.polytope);
      EXPECT_TRUE(verify_slice_lemmas(g.polytope).all_pass());
    }
  }
}

TEST(Prismatoid, IdpViaSlicesAgrees) {
  const IdpReport cube = idp_via_slices(unit_cube(), unit_cube());
  EXPECT_TRUE(cube.verdict);
  EXPECT_EQ(cube.slice_pairs_checked, 4);
  EXPECT_EQ(cube.agrees_with_direct, true);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = gen_smooth_prismatoid({3, 3, 1, seed});
    const auto partner = equivalent_partner(g.polytope, seed + 100);
    const IdpReport r = idp_via_slices(g.polytope, partner.polytope);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.agrees_with_direct, true);
  }
  EXPECT_THROW(idp_via_slices(unit_cube(), reeve_simplex(1)), std::invalid_argument);
}
