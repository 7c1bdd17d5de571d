#include "latcube/gen.hpp"
#include "latcube/normal_fan.hpp"
#include "latcube/prismatoid.hpp"
#include "latcube/smooth.hpp"

#include <gtest/gtest.h>

using namespace latcube;

namespace {

Integer max_abs(const Polytope& p) {
  Integer m = 0;
  for (const auto& v : p.vertices())
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, Integer(abs(to_lattice(v)(i))));
  return m;
}

}  // namespace

TEST(Gen, Deterministic) {
  for (int d = 2; d <= 4; ++d) {
    const GenParams p{d, 4, 2, 99};
    EXPECT_EQ(gen_smooth_cube(p).polytope, gen_smooth_cube(p).polytope);
  }
  const GenParams p{3, 4, 2, 5};
  EXPECT_EQ(gen_smooth_prismatoid(p).polytope, gen_smooth_prismatoid(p).polytope);
}

TEST(Gen, SmoothCubesWithinBound) {
  for (int d = 2; d <= 4; ++d) {
    for (std::uint64_t seed = 1; seed <= (d == 4 ? 4u : 12u); ++seed) {
      const GenParams p{d, 3, 2, seed};
      const auto g = gen_smooth_cube(p);
      EXPECT_EQ(g.polytope.dim(), d);
      EXPECT_TRUE(is_smooth(g.polytope));
      EXPECT_TRUE(recognize_cube(g.polytope));
      EXPECT_LE(max_abs(g.polytope), coordinate_bound(p));
      EXPECT_GE(g.rejected, 0);
    }
  }
  EXPECT_EQ(coordinate_bound({2, 4, 2, 1}), 40);
}

TEST(Gen, ZeroRoundsOnlyTranslate) {
  const GenParams p{2, 5, 0, 7};
  const UnimodularMap m = scramble_map(p);
  EXPECT_EQ(m.matrix, IntegerMatrix::Identity(2, 2));
  const Polytope t = smooth_trapezoid(2, 4, 2);
  EXPECT_EQ(scramble(t, p), translate(t, m.translation));
  for (Eigen::Index i = 0; i < 2; ++i) EXPECT_LE(abs(m.translation(i)), 5);
}

TEST(Gen, Constructions) {
  EXPECT_TRUE(is_smooth(smooth_trapezoid(3, 1, 1)));
  EXPECT_THROW(smooth_trapezoid(2, 3, 2), std::invalid_argument);
  for (unsigned corners = 0; corners < 16; ++corners) {
    const Polytope r = cut_rectangle(4, 3, corners);
    EXPECT_TRUE(is_smooth(r));
  }
  const Polytope r = reeve_simplex(3);
  EXPECT_EQ(r.num_vertices(), 4);
  EXPECT_EQ(lattice_points(r).size(), 4u);
}

TEST(Gen, PrismatoidsAndPartners) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = gen_smooth_prismatoid({3, 3, 2, seed});
    EXPECT_TRUE(is_smooth(g.polytope));
    EXPECT_TRUE(detect_prismatoid(g.polytope));
    const auto partner = equivalent_partner(g.polytope, seed);
    EXPECT_TRUE(minkowski_equivalent(g.polytope, partner.polytope));
    EXPECT_TRUE(is_smooth(partner.polytope));
  }
}
