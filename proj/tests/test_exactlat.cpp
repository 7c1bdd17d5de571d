#include "latcube/exactlat.hpp"
#include "latcube/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace latcube;

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(lattice_vector({2, 4})), lattice_vector({1, 2}));
  EXPECT_EQ(primitive(lattice_vector({-3, 6})), lattice_vector({-1, 2}));
  EXPECT_THROW(primitive(lattice_vector({0, 0})), std::invalid_argument);
  try {
    primitive(lattice_vector({0, 0}));
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no primitive direction");
  }
}

TEST(Primitive, Idempotent) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    LatticeVector v(3);
    for (int i = 0; i < 3; ++i) v(i) = rng.uniform(-30, 30);
    if (v.isZero()) continue;
    const LatticeVector p = primitive(v);
    EXPECT_EQ(primitive(p), p);
    EXPECT_EQ(content(p), 1);
    EXPECT_EQ(LatticeVector(p * content(v)), v);
  }
}

TEST(Determinant, MatchesLeibniz) {
  Rng rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 40; ++t) {
      IntegerMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-4, 4);
      if (t % 5 == 0 && n > 1) m.row(n - 1) = m.row(0) * Integer(2);
      EXPECT_EQ(determinant<Integer>(m), oracle::det(m));
      EXPECT_EQ(determinant<Rational>(m.cast<Rational>()), Rational(oracle::det(m)));
      EXPECT_EQ(rank<Integer>(m) == n, oracle::det(m) != 0);
    }
  }
}

TEST(LatticeBasis, Examples) {
  std::vector<LatticeVector> id = {lattice_vector({1, 0}), lattice_vector({0, 1})};
  std::vector<LatticeVector> two = {lattice_vector({1, 1}), lattice_vector({0, 2})};
  std::vector<LatticeVector> trap = {lattice_vector({-1, 0}), lattice_vector({-1, -1})};
  EXPECT_TRUE(lattice_basis_check(id));
  EXPECT_FALSE(lattice_basis_check(two));
  EXPECT_TRUE(lattice_basis_check(trap));
  std::vector<LatticeVector> short_list = {lattice_vector({1, 0})};
  EXPECT_THROW(lattice_basis_check(short_list), std::invalid_argument);
  std::vector<LatticeVector> wrong_dim = {lattice_vector({1, 0, 0}), lattice_vector({0, 1, 0})};
  EXPECT_THROW(lattice_basis_check(wrong_dim), std::invalid_argument);
}

TEST(LatticeBasis, PermutationAndNegationInvariant) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    std::vector<LatticeVector> vs;
    for (int i = 0; i < 3; ++i) {
      LatticeVector v(3);
      for (int j = 0; j < 3; ++j) v(j) = rng.uniform(-2, 2);
      vs.push_back(v);
    }
    const bool base = lattice_basis_check(vs);
    std::swap(vs[0], vs[2]);
    EXPECT_EQ(lattice_basis_check(vs), base);
    vs[1] = -vs[1];
    EXPECT_EQ(lattice_basis_check(vs), base);
  }
}

TEST(RandomUnimodular, DeterministicAndBounded) {
  for (int d = 1; d <= 4; ++d) {
    for (int bound = 1; bound <= 4; ++bound) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const UnimodularMap u = random_unimodular(d, seed, bound);
        EXPECT_EQ(u, random_unimodular(d, seed, bound));
        EXPECT_EQ(abs(determinant<Integer>(u.matrix)), 1);
        Integer limit = 1;
        for (int i = 0; i < bound; ++i) limit *= 3;
        for (Eigen::Index i = 0; i < u.matrix.size(); ++i) EXPECT_LE(abs(u.matrix(i)), limit);
        std::vector<LatticeVector> cols;
        for (int j = 0; j < d; ++j) cols.push_back(u.matrix.col(j));
        EXPECT_TRUE(lattice_basis_check(cols));
      }
    }
  }
}

TEST(UnimodularMap, InverseAndCompose) {
  const UnimodularMap u = UnimodularMap::make(random_unimodular(3, 9, 3).matrix, lattice_vector({1, -2, 3}));
  const LatticeVector x = lattice_vector({4, 5, -6});
  EXPECT_EQ(u.inverse().apply(u.apply(x)), x);
  EXPECT_EQ(u.then(u.inverse()), UnimodularMap::identity(3));
  IntegerMatrix bad(2, 2);
  bad << 2, 0, 0, 1;
  EXPECT_THROW(UnimodularMap::make(bad), std::invalid_argument);
}

TEST(UnimodularMap, NormalsFollowInverseTranspose) {
  const UnimodularMap u = random_unimodular(3, 4, 3);
  const LatticeVector n = lattice_vector({2, 4, -2});
  const LatticeVector m = u.apply_to_normal(n);
  EXPECT_EQ(content(m), 1);
  const LatticeVector back = u.matrix.transpose() * m;
  EXPECT_EQ(back, primitive(n));
}

TEST(IntegerKernel, AnnihilatesAndSaturates) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    IntegerMatrix a(2, 4);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.uniform(-3, 3);
    const IntegerMatrix k = integer_kernel(a);
    EXPECT_EQ(k.cols(), 4 - rank<Integer>(a));
    EXPECT_TRUE((a * k).isZero());
    if (k.cols() > 0) {
      const IntegerMatrix u = complete_to_unimodular(k);
      EXPECT_EQ(abs(determinant<Integer>(u)), 1);
      EXPECT_EQ(u.leftCols(k.cols()), k);
    }
  }
  IntegerMatrix not_saturated(2, 1);
  not_saturated << 2, 0;
  EXPECT_THROW(complete_to_unimodular(not_saturated), std::invalid_argument);
}

TEST(UnimodularWithLastRow, HasRow) {
  for (const auto& row : {lattice_vector({0, 0, 1}), lattice_vector({2, 3, 5}), lattice_vector({-1, 1, 0})}) {
    const IntegerMatrix u = unimodular_with_last_row(row);
    EXPECT_EQ(abs(determinant<Integer>(u)), 1);
    EXPECT_EQ(LatticeVector(u.row(2).transpose()), row);
  }
}
