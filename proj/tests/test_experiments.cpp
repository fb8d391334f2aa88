#include <gtest/gtest.h>

#include <random>

#include "covrad/experiments.hpp"

using namespace covrad;

namespace {

// U applied to the direct sum of [-p, q] e1 and [-r, s] e2.
LatticePolytope segment_sum(const IntMatrix& u, long long p, long long q, long long r, long long s) {
  const LatticePolytope base =
      LatticePolytope::from_points(std::vector<IntVector>{{-p, 0}, {q, 0}, {0, -r}, {0, s}});
  return linear_image(base, u);
}

}  // namespace

TEST(SegmentSums, RecoversLengthsUnderUnimodularMaps) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 40; ++k) {
    const long long p = draw(rng, 1, 4), q = draw(rng, 1, 4), r = draw(rng, 1, 4), s = draw(rng, 1, 4);
    const LatticePolytope quad = segment_sum(random_unimodular(rng, 2, 3), p, q, r, s);
    const auto lens = segment_sum_lengths(quad);
    std::pair<Integer, Integer> want{Integer(std::min(p + q, r + s)), Integer(std::max(p + q, r + s))};
    EXPECT_NE(std::find(lens.begin(), lens.end(), want), lens.end());
  }
}

TEST(SegmentSums, RejectsNonSums) {
  EXPECT_TRUE(segment_sum_lengths(build("hexagon")).empty());
  // diagonals meet at (1/2, 1/2)
  const LatticePolytope sq = LatticePolytope::from_points(std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(segment_sum_lengths(sq).empty());
  // diagonals span a sublattice of index 2
  const LatticePolytope rh = LatticePolytope::from_points(std::vector<IntVector>{{-1, -1}, {1, 1}, {-1, 1}, {1, -1}});
  EXPECT_TRUE(segment_sum_lengths(rh).empty());
}

TEST(Samplers, SaTypeSimplicesHaveZeroSumDirections) {
  std::mt19937_64 rng(2);
  for (std::size_t d = 2; d <= 3; ++d)
    for (int k = 0; k < 20; ++k) {
      const LatticePolytope s = random_Sa_type_simplex(rng, d, 6, 3);
      EXPECT_TRUE(s.is_simplex());
      EXPECT_TRUE(s.contains_in_interior(RatVector(d, Rational(0))));
      EXPECT_TRUE(directions_sum_to_zero(ray_data(s)));
    }
}

TEST(Samplers, RandomLatticePolytopeHonoursInteriorCount) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const LatticePolytope p = random_lattice_polytope(rng, 2, 4, 5, 2);
    EXPECT_TRUE(p.full_dimensional());
    EXPECT_GE(interior_lattice_points(p).size(), 2u);
  }
}

TEST(ConjASamples, HoldsInTheTwoDimensionalSample) {
  const ConjAReport rep = conjA_samples(2, 60, 1, 3);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.rows.size(), 63u);
  EXPECT_GE(rep.equality_count, 3u);
  for (const auto& r : rep.rows) EXPECT_LE(r.check.mu, Rational(1)) << r.label;
}

TEST(ConjCSamples, PlanarSample) {
  const ConjCReport rep = conjC_samples(2, 80, 1, 7, 3);
  EXPECT_EQ(rep.rows.size(), 80u);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.identities_ok);
  EXPECT_GE(rep.sa_type_count, 20u);
  for (const auto& r : rep.rows) {
    ASSERT_TRUE(r.check);
    if (r.constructed_Sa) {
      EXPECT_TRUE(r.sa_type);
      EXPECT_TRUE(r.check->equality);
    }
  }
}

TEST(ConjCSamples, InequalityHoldsForOtherSeeds) {
  for (std::uint64_t seed : {2, 3, 4}) {
    const ConjCReport rep = conjC_samples(2, 40, seed, 5, 2);
    EXPECT_TRUE(rep.holds) << seed;
    EXPECT_TRUE(rep.identities_ok) << seed;
  }
}

TEST(ConjCSamples, IdentitiesOnlyModeSkipsCoveringRadius) {
  const ConjCReport rep = conjC_samples(3, 20, 5, 3, 1, 1, false, 3);
  EXPECT_TRUE(rep.identities_ok);
  EXPECT_TRUE(rep.ok);
  for (const auto& r : rep.rows) EXPECT_FALSE(r.check);
}

TEST(ConjCSamples, ResultsDoNotDependOnJobs) {
  const ConjCReport a = conjC_samples(2, 24, 7, 5, 2, 1);
  const ConjCReport b = conjC_samples(2, 24, 7, 5, 2, 3);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].vertices, b.rows[i].vertices);
    EXPECT_EQ(a.rows[i].check->mu, b.rows[i].check->mu);
  }
  EXPECT_EQ(a.equality_count, b.equality_count);
}

TEST(ConjDSamples, KitesReachEqualityAndSampleHolds) {
  const ConjDReport rep = conjD_samples(6, 40, 1, 4);
  EXPECT_TRUE(rep.ok);
  for (const auto& r : rep.rows) {
    if (r.label.rfind("kite", 0) != 0) continue;
    EXPECT_TRUE(r.check.equality) << r.label;
    EXPECT_TRUE(r.sum_of_segments) << r.label;
  }
  EXPECT_THROW(conjD_samples(1, 0, 1, 4), DomainError);
}

TEST(ConjESamples, BoundaryOriginTriangles) {
  const ConjEReport rep = conjE_samples(20, 1, 4);
  EXPECT_TRUE(rep.ok);
  ASSERT_EQ(rep.rows.size(), 21u);
  EXPECT_EQ(rep.rows[0].mu, Rational(3, 4));
  EXPECT_EQ(rep.rows[0].data.rhs, Rational(3, 4));
  for (const auto& r : rep.rows) {
    EXPECT_FALSE(r.data.I.empty());
    EXPECT_LE(r.mu, r.data.rhs);
  }
}

TEST(ProductSamples, ChainAndWidth) {
  const ProductReport rep = product_samples(40, 20, 1);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.rows.size(), 46u);
  EXPECT_EQ(rep.width_rows.size(), 20u);
  EXPECT_TRUE(rep.rows[0].chain.equality);
}

TEST(Samplers, DimensionErrors) {
  EXPECT_THROW(conjA_samples(4, 1, 1, 2), UnsupportedDimension);
  EXPECT_THROW(conjC_samples(1, 1, 1, 2, 1), UnsupportedDimension);
}
