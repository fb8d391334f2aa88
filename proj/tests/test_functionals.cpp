#include <gtest/gtest.h>

#include <random>

#include "covrad/catalog.hpp"
#include "covrad/covering_radius.hpp"
#include "covrad/experiments.hpp"
#include "covrad/functionals.hpp"

using namespace covrad;

namespace {

LatticePolytope tri(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<RatVector> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return LatticePolytope::from_points(v);
}

// Largest lambda with -lambda v_i in S, from barycentric coordinates of -v_i.
Rational chord_length(const LatticePolytope& s, std::size_t i) {
  const std::size_t d = s.dim();
  RatMatrix m(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t k = 0; k < d; ++k) m(k, j) = s.vertices()[j][k];
    m(d, j) = 1;
  }
  // -lambda v_i = sum c_j v_j with sum c_j = 1; c_j is affine in lambda
  RatVector e0(d + 1, Rational(0)), e1(d + 1, Rational(0));
  e0[d] = 1;
  for (std::size_t k = 0; k < d; ++k) e1[k] = -s.vertices()[i][k];
  const RatVector base = *solve(m, e0);
  const RatVector slope = *solve(m, e1);
  std::optional<Rational> lambda;
  for (std::size_t j = 0; j <= d; ++j)
    if (slope[j].sign() < 0) {
      const Rational l = base[j] / -slope[j];
      if (!lambda || l < *lambda) lambda = l;
    }
  const Rational t = primitive_decomposition(s.vertices()[i]).second;
  return t * (Rational(1) + *lambda);
}

// Length of a triangle's image in Z^2 / Z p, measured by det(p, .).
Rational projected_length_2d(const LatticePolytope& s, std::size_t i) {
  const IntVector p = primitive_direction(s.vertices()[i]);
  Rational lo, hi;
  bool first = true;
  for (const auto& v : s.vertices()) {
    const Rational x = Rational(p[0]) * v[1] - Rational(p[1]) * v[0];
    if (first || x < lo) lo = x;
    if (first || x > hi) hi = x;
    first = false;
  }
  return hi - lo;
}

}  // namespace

TEST(RayData, LengthsMatchBarycentricChord) {
  std::mt19937_64 rng(1);
  for (std::size_t d = 2; d <= 3; ++d)
    for (int k = 0; k < 40; ++k) {
      const LatticePolytope s = random_simplex_with_interior_origin(rng, d, 5, k % 2 ? 3 : 1);
      const SimplexRayData r = ray_data(s);
      for (std::size_t i = 0; i <= d; ++i) {
        EXPECT_EQ(r.ell[i], chord_length(s, i));
        RatVector back(d, Rational(0));
        for (std::size_t c = 0; c < d; ++c) back[c] = Rational(r.p[i][c]) * r.t[i];
        EXPECT_EQ(back, s.vertices()[i]);
        EXPECT_EQ(content(r.p[i]), 1);
      }
      // positive primitive dependence of the directions and of the vertices
      IntVector sum(d, Integer(0));
      RatVector vsum(d, Rational(0));
      for (std::size_t i = 0; i <= d; ++i) {
        EXPECT_GT(r.alpha[i], 0);
        for (std::size_t c = 0; c < d; ++c) {
          sum[c] += r.alpha[i] * r.p[i][c];
          vsum[c] += r.beta[i] * s.vertices()[i][c];
        }
      }
      EXPECT_EQ(sum, IntVector(d, Integer(0)));
      EXPECT_EQ(vsum, RatVector(d, Rational(0)));
      EXPECT_EQ(content(r.alpha), 1);
      // sum_i t_i / ell_i = d
      Rational id(0);
      for (std::size_t i = 0; i <= d; ++i) id += r.t[i] / r.ell[i];
      EXPECT_EQ(id, Rational(static_cast<long long>(d)));
    }
}

TEST(RayData, RequiresInteriorOrigin) {
  const LatticePolytope s = tri({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_THROW(ray_data(s), DomainError);
  EXPECT_THROW(ray_data(build("hexagon")), DomainError);
}

TEST(Surf, ProjectedVolumesMatchDeterminantLengthsInThePlane) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 60; ++k) {
    const LatticePolytope s = random_simplex_with_interior_origin(rng, 2, 6, k % 3 + 1);
    Rational sum(0);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(projected_volume(s, i), projected_length_2d(s, i));
      sum += projected_length_2d(s, i);
    }
    EXPECT_EQ(discrete_surface_area(s), sum);
  }
}

TEST(Surf, TwoFormulasAgreeAndAreUnimodularInvariant) {
  std::mt19937_64 rng(3);
  for (std::size_t d = 2; d <= 3; ++d)
    for (int k = 0; k < 30; ++k) {
      const LatticePolytope s = random_simplex_with_interior_origin(rng, d, 4, 1 + k % 2);
      const Rational surf = discrete_surface_area(s);
      EXPECT_EQ(discrete_surface_area_by_projection(s), surf);
      for (int u = 0; u < 5; ++u) EXPECT_EQ(discrete_surface_area(linear_image(s, random_unimodular(rng, d))), surf);
    }
}

TEST(Surf, StandardExamples) {
  // S(1_3): all three projections have length 2, volume 3, rhs 1 = mu
  const LatticePolytope s = build("S(1_3)");
  EXPECT_EQ(discrete_surface_area(s), Rational(6));
  EXPECT_EQ(normalized_volume(s), Rational(3));
  EXPECT_TRUE(conjC_check(s).equality);
}

TEST(ConjC, EqualityForSa) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = 2 + k % 2;
    RatVector a(d + 1);
    for (auto& x : a) x = Rational(draw(rng, 1, 6), d == 2 ? draw(rng, 1, 3) : 1);
    const ConjectureCheck c = conjC_check(simplex_S(a));
    EXPECT_TRUE(c.equality) << c.mu << " " << c.rhs;
    EXPECT_EQ(c.mu, covrad_S(a));
  }
}

TEST(ConjC, SumOfSegmentsTriangleReachesEquality) {
  // volume 4, projections 3, 3, 2: rhs (8 / 4) / 2 = 1 = mu
  const LatticePolytope t = tri({{0, 1}, {-1, -1}, {1, -1}});
  const ConjectureCheck c = conjC_check(t);
  EXPECT_EQ(c.rhs, Rational(1));
  EXPECT_TRUE(c.equality);
  EXPECT_FALSE(directions_sum_to_zero(ray_data(t)));
}

// Directions summing to zero on a proper sublattice: strict inequality.
TEST(ConjC, ZeroSumDirectionsCanBeStrict) {
  const LatticePolytope t = tri({{2, 5}, {-1, -4}, {-2, -2}});
  const SimplexRayData r = ray_data(t);
  EXPECT_TRUE(directions_sum_to_zero(r));
  const ConjectureCheck c = conjC_check(t);
  EXPECT_EQ(c.mu, Rational(7, 15));
  EXPECT_EQ(c.rhs, Rational(4, 5));
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.equality);
  EXPECT_EQ(c.mu, covering_radius(t, Method::Mip).mu);
}

// Equality although the directions do not sum to zero.
TEST(ConjC, EqualityOutsideZeroSumDirections) {
  const LatticePolytope t = tri({{7, 7}, {-5, -6}, {3, 4}});
  const SimplexRayData r = ray_data(t);
  EXPECT_FALSE(directions_sum_to_zero(r));
  const ConjectureCheck c = conjC_check(t);
  EXPECT_EQ(c.mu, Rational(5, 8));
  EXPECT_TRUE(c.equality);
  EXPECT_EQ(c.mu, covering_radius(t, Method::Mip).mu);
}

TEST(ConjE, BoundaryOriginExample) {
  const LatticePolytope t = tri({{0, -2}, {2, 0}, {-2, 0}});
  const ConjEData e = conjE_rhs(t);
  EXPECT_EQ(e.I, std::vector<std::size_t>{0});
  EXPECT_EQ(e.rhs, Rational(3, 4));
  EXPECT_EQ(covering_radius_value(t), Rational(3, 4));
  EXPECT_THROW(conjE_rhs(tri({{0, 0}, {1, 0}, {0, 1}})), DomainError);
  EXPECT_THROW(conjE_rhs(tri({{1, 1}, {2, 1}, {1, 2}})), DomainError);
}

TEST(ConjE, InteriorOriginReducesToConjC) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const LatticePolytope s = random_simplex_with_interior_origin(rng, 2, 5, 1);
    const ConjEData e = conjE_rhs(s);
    EXPECT_TRUE(e.I.empty());
    EXPECT_EQ(e.rhs, conjC_check(s).rhs);
  }
}

TEST(CornerSimplex, ClosedFormAgainstGraph) {
  // origin at a vertex: mu(S(0,a)) = sum 1/a_i
  for (long long a = 1; a <= 4; ++a)
    for (long long b = 1; b <= 4; ++b) {
      const LatticePolytope s = tri({{0, 0}, {a, 0}, {0, b}});
      EXPECT_EQ(covering_radius_value(s), covrad_S0({Rational(a), Rational(b)}));
    }
}

TEST(ProjectionBound, KnownFibrations) {
  for (long long k = 1; k <= 4; ++k) {
    const ProjectionBound b = projection_bound(build("M_" + std::to_string(k) + "(0,0)"), {2});
    EXPECT_EQ(b.bound, Rational(1) + Rational(1, k + 1));
    EXPECT_GE(b.bound, covering_radius_value(build("M_" + std::to_string(k) + "(0,0)")));
  }
  const ProjectionBound m = projection_bound(build("M_2(1,1)"), {1, 2});
  EXPECT_EQ(m.mu_fiber, Rational(7, 8));
  EXPECT_EQ(m.mu_image, Rational(1, 2));
  EXPECT_GE(m.bound, covering_radius_value(build("M_2(1,1)")));
  EXPECT_THROW(projection_bound(build("hexagon"), {}), DomainError);
  EXPECT_THROW(projection_bound(build("hexagon"), {5}), DimensionError);
}

TEST(ProjectionBound, HoldsOnRandomPolytopes) {
  std::mt19937_64 rng(6);
  int tested = 0;
  while (tested < 10) {
    std::vector<IntVector> pts;
    for (int k = 0; k < 5; ++k) pts.push_back({Integer(draw(rng, -2, 2)), Integer(draw(rng, -2, 2)), Integer(draw(rng, -2, 2))});
    const LatticePolytope p = LatticePolytope::from_points(pts);
    if (!p.full_dimensional() || !p.contains_in_interior(RatVector(3, Rational(0)))) continue;
    ++tested;
    const ProjectionBound b = projection_bound(p, {2});
    EXPECT_LE(covering_radius_value(p), b.bound);
  }
}

TEST(CoveringProduct, ChainIdentityAndBounds) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const std::size_t d = static_cast<std::size_t>(draw(rng, 2, 4));
    RatVector a(d + 1);
    for (auto& x : a) x = Rational(draw(rng, 1, 20), draw(rng, 1, 4));
    const CoveringProductChain c = covering_product_chain(a);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.product, c.telescoped);
    EXPECT_EQ(c.equality, c.all_equal);
    // scaling a scales nothing: the chain is homogeneous of degree 0
    RatVector b = a;
    for (auto& x : b) x *= Rational(3, 2);
    EXPECT_EQ(covering_product_chain(b).product, c.product);
  }
  const CoveringProductChain one = covering_product_chain(RatVector(4, Rational(1)));
  EXPECT_TRUE(one.equality);
  EXPECT_EQ(one.target, Rational(24, 8));
}

TEST(CoveringProduct, ElementarySymmetricByExpansion) {
  const RatVector a{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  EXPECT_EQ(elementary_symmetric(a, 0), Rational(1));
  EXPECT_EQ(elementary_symmetric(a, 1), Rational(13, 2));
  // pairs: 2 + 3 + 1/2 + 6 + 1 + 3/2
  EXPECT_EQ(elementary_symmetric(a, 2), Rational(14));
  EXPECT_EQ(elementary_symmetric(a, 4), Rational(3));
}

TEST(FirstCoveringMinimum, InverseWidthOfSa) {
  for (long long x = 1; x <= 4; ++x)
    for (long long y = 1; y <= 4; ++y)
      for (long long z = 1; z <= 4; ++z) {
        const RatVector a{Rational(x), Rational(y), Rational(z)};
        EXPECT_EQ(mu1_Sa(a), Rational(1) / lattice_width(simplex_S(a)).width);
      }
}
