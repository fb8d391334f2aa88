#include <gtest/gtest.h>

#include <random>
#include <set>

#include "covrad/catalog.hpp"
#include "covrad/covering_radius.hpp"

using namespace covrad;

namespace {

// Normalized volumes of the pyramids over the facets of a tetrahedron with
// apex at its interior lattice point, straight from the determinants.
std::vector<Integer> pyramid_volumes(const LatticePolytope& t) {
  const IntVector c = interior_lattice_points(t).front();
  std::vector<Integer> out;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    IntMatrix m(3, 3);
    for (std::size_t j = 0, col = 0; j < 4; ++j) {
      if (j == skip) continue;
      const IntVector v = to_integer(t.vertices()[j]);
      for (std::size_t i = 0; i < 3; ++i) m(i, col) = v[i] - c[i];
      ++col;
    }
    out.push_back(abs(int_determinant(m)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tables, AllEntriesReproduce) {
  const TableReport rep = verify_tables("", 2);
  ASSERT_EQ(rep.rows.size(), 26u);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.maximal_count, 9u);
  EXPECT_EQ(rep.smaller_count, 17u);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.computed, r.expected) << r.name;
    EXPECT_EQ(r.interior_points, 1u) << r.name;
  }
  EXPECT_EQ(verify_tables("tetrahedra").rows.size(), 16u);
  EXPECT_EQ(verify_tables("other").rows.size(), 10u);
}

TEST(Tables, TetrahedraVolumeVectors) {
  for (const auto& e : table_entries()) {
    if (e.group != "tetrahedra") continue;
    const LatticePolytope t = e.polytope();
    ASSERT_TRUE(t.is_simplex()) << e.name;
    EXPECT_EQ(pyramid_volumes(t), e.volume_vector) << e.name;
    Integer sum = 0;
    for (const auto& x : e.volume_vector) sum += x;
    EXPECT_EQ(Rational(sum), normalized_volume(t)) << e.name;
  }
}

TEST(Tables, EveryEntryIsNonHollowAndBelowThreeHalves) {
  for (const auto& e : table_entries()) {
    const LatticePolytope p = e.polytope();
    EXPECT_EQ(p.dim(), 3u);
    EXPECT_TRUE(p.is_lattice());
    EXPECT_EQ(interior_lattice_points(p), std::vector<IntVector>(1, IntVector(3, Integer(0)))) << e.name;
    EXPECT_LE(e.expected_mu, Rational(3, 2));
    EXPECT_EQ(e.maximal(), e.expected_mu == Rational(3, 2));
  }
}

TEST(Tables, MinimalityOfEntries) {
  for (const auto& e : table_entries()) {
    if (e.name == "Pyr_4(S(1_3))") continue;
    EXPECT_TRUE(check_minimality(e.polytope())) << e.name;
  }
}

// The stored matrix for Pyr_4(S(1_3)) contains the edge midpoint (0,1,1);
// replacing the vertex (0,2,1) by it keeps the origin in the interior.
TEST(Tables, Pyr4MatrixIsNotVertexMinimal) {
  const LatticePolytope p = build("Pyr_4(S(1_3))");
  EXPECT_FALSE(check_minimality(p));
  const std::vector<IntVector> smaller{{-1, -3, -4}, {1, 0, 0}, {0, 0, 1}, {0, 1, 1}};
  for (const auto& x : smaller) EXPECT_TRUE(p.contains(to_rational(x)));
  const LatticePolytope q = LatticePolytope::from_points(smaller);
  EXPECT_TRUE(q.is_simplex());
  RatVector bary = barycentric_of_origin(q);
  std::sort(bary.begin(), bary.end());
  EXPECT_EQ(bary, (RatVector{Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(1, 2)}));
  EXPECT_EQ(covering_radius_value(p), Rational(7, 6));
}

TEST(Tables, GraphAndMipAgreeOnTetrahedra) {
  for (const auto& e : table_entries()) {
    if (e.group != "tetrahedra") continue;
    const CovradResult r = covering_radius(e.polytope(), Method::Both);
    EXPECT_TRUE(r.agree) << e.name;
    EXPECT_EQ(r.mu, e.expected_mu) << e.name;
  }
}

TEST(DirectSums, CoveringRadiusIsAdditive) {
  for (const auto& s : sum_decompositions()) {
    const LatticePolytope a = build(s.left), b = build(s.right);
    const LatticePolytope sum = direct_sum(a, b);
    EXPECT_EQ(covering_radius_value(sum), covering_radius_value(a) + covering_radius_value(b))
        << s.left << " + " << s.right;
    if (s.table_name) {
      const LatticePolytope t = build(*s.table_name);
      EXPECT_EQ(normalized_volume(sum), normalized_volume(t)) << *s.table_name;
      EXPECT_EQ(fingerprint(sum, covering_radius_value(sum)), fingerprint(t, covering_radius_value(t)))
          << *s.table_name;
    }
  }
}

TEST(DirectSums, ScalingDividesCoveringRadius) {
  int n = 0;
  for (const auto& e : table_entries()) {
    if (n++ >= 10) break;
    const LatticePolytope p = e.polytope();
    for (long long c : {2, 3}) EXPECT_EQ(covering_radius_value(dilate(p, Rational(c))), e.expected_mu / Rational(c)) << e.name;
  }
}

TEST(Families, MkClosedForms) {
  const FormulaReport rep = check_Mk_formulas(6, 2);
  EXPECT_EQ(rep.rows.size(), 36u);
  for (const auto& r : rep.rows) EXPECT_EQ(r.computed, r.expected) << r.name;
  EXPECT_TRUE(rep.ok);
}

TEST(Families, MkInteriorPointCount) {
  for (long long k = 1; k <= 5; ++k) {
    EXPECT_EQ(interior_lattice_points(family_M2(k, 0)).size(), static_cast<std::size_t>(k));
    EXPECT_EQ(interior_lattice_points(family_M3(k, 1, 1)).size(), static_cast<std::size_t>(k));
  }
}

TEST(Families, DeltaPlane) {
  const DeltaReport rep = check_delta_v_plane(12, 1, 2);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.mu_3d_mip, Rational(14, 9));
  EXPECT_EQ(rep.mu_3d_graph, Rational(14, 9));
  EXPECT_EQ(delta_row({Rational(1), Rational(1)}).mu_graph, Rational(1));
  EXPECT_LT(delta_row({Rational(3), Rational(1)}).mu_graph, Rational(1));
}

TEST(Families, KiteHasKInteriorPoints) {
  for (long long k = 1; k <= 6; ++k)
    for (long long i = 1; i <= k; ++i) EXPECT_EQ(interior_lattice_points(family_kite(k, i)).size(), static_cast<std::size_t>(k));
}

TEST(Build, AliasesAndParametricNames) {
  EXPECT_EQ(build("I+I+I").vertices(), build("I⊕I⊕I").vertices());
  EXPECT_EQ(build("(I+I')^o+I").vertices(), build("(I⊕I')°⊕I").vertices());
  EXPECT_EQ(build("Delta_(3/2,1)").vertices(), build("Δ_(3/2,1)").vertices());
  EXPECT_EQ(build("S(1, 1, 1)").vertices(), build("S(1_3)").vertices());
  EXPECT_EQ(normalized_volume(build("[0,4]")), Rational(4));
  EXPECT_EQ(normalized_volume(build("S(2,1,1)")), Rational(5));
  EXPECT_EQ(build("M_2(1)°").vertices(), translate(family_M2(2, 1), IntVector{Integer(0), Integer(-1)}).vertices());
  EXPECT_EQ(find_table_entry("T(1,1,1,2)")->expected_mu, Rational(7, 5));
  EXPECT_EQ(find_table_entry("nonexistent"), nullptr);
}

TEST(Build, Errors) {
  EXPECT_THROW(build("nope"), LookupError);
  EXPECT_THROW(build("S(1_1)"), DomainError);
  EXPECT_THROW(build("M_0(1)"), DomainError);
  EXPECT_THROW(build("M_2(2,0)"), std::exception);
  EXPECT_THROW(build("[3,1]"), DomainError);
  EXPECT_THROW(build("kite(2,7)"), DomainError);
}

TEST(ConjA, CataloguedCasesReachTheBound) {
  for (const auto& n : maximal_3d_names()) {
    const ConjACheck c = check_conjA(build(n));
    EXPECT_TRUE(c.equality) << n;
    EXPECT_TRUE(c.catalog_match) << n;
  }
  for (const auto& n : maximal_2d_names()) {
    const ConjACheck c = check_conjA(build(n));
    EXPECT_EQ(c.mu, Rational(1)) << n;
    EXPECT_TRUE(c.consistent) << n;
  }
  const ConjACheck strict = check_conjA(build("T(5,5,5,5)"));
  EXPECT_TRUE(strict.holds);
  EXPECT_FALSE(strict.equality);
  EXPECT_TRUE(strict.consistent);
  EXPECT_THROW(check_conjA(LatticePolytope::from_points(std::vector<IntVector>{{0, 0}, {2, 0}, {0, 2}})), DomainError);
  EXPECT_THROW(check_conjA(build("S(3/2,1,1)")), DomainError);
}

TEST(ConjD, KitesAttainTheBound) {
  for (long long k = 2; k <= 5; ++k) {
    const ConjDCheck c = check_conjD_dim2(family_kite(k, 1));
    EXPECT_EQ(c.k, static_cast<std::size_t>(k));
    EXPECT_TRUE(c.equality) << k;
  }
  EXPECT_THROW(check_conjD_dim2(build("hexagon")), DomainError);
}
