#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "covrad/matrix.hpp"

using namespace covrad;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long long box) {
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = static_cast<long long>(rng() % static_cast<unsigned long long>(2 * box + 1)) - box;
  return a;
}

// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    const Integer t = a(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? t : Integer(-t);
  }
  return s;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      g = gcd(g, abs(cofactor_det(m)));
      return;
    }
    for (std::size_t j = start; j < a.cols(); ++j) {
      cols.push_back(j);
      pick_cols(j + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 40; ++k) {
      const IntMatrix a = random_int_matrix(rng, n, n, 6);
      EXPECT_EQ(int_determinant(a), cofactor_det(a));
    }
}

TEST(Determinant, SingularAndEmpty) {
  EXPECT_EQ(int_determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(int_determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), Rational(1));
  EXPECT_THROW(int_determinant(IntMatrix(2, 3)), DimensionError);
}

TEST(Adjugate, ProductIsDeterminantTimesIdentity) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 30; ++k) {
      const IntMatrix a = random_int_matrix(rng, n, n, 5);
      const IntMatrix adj = adjugate(a);
      const Integer det = int_determinant(a);
      IntMatrix want = IntMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) want(i, i) = det;
      EXPECT_EQ(a * adj, want);
      EXPECT_EQ(adj * a, want);
    }
}

TEST(Solve, InverseAndRank) {
  const RatMatrix a{{2, 1}, {1, 3}};
  const auto x = solve(a, {Rational(1), Rational(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{Rational(1, 5), Rational(3, 5)}));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RatMatrix::identity(2));
  EXPECT_FALSE(solve(RatMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}));
  EXPECT_EQ(rank(RatMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 2u);
}

TEST(Smith, FactorizationAndDivisibility) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const IntMatrix a = random_int_matrix(rng, m, n, 8);
    const SmithForm f = smith_normal_form(a);
    EXPECT_EQ(f.U * a * f.V, f.S);
    EXPECT_EQ(abs(int_determinant(f.U)), 1);
    EXPECT_EQ(abs(int_determinant(f.V)), 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          EXPECT_EQ(f.S(i, j), 0);
        }
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      if (d[i] == 0)
        EXPECT_EQ(d[i + 1], 0);
      else
        EXPECT_EQ(d[i + 1] % d[i], 0);
    }
  }
}

TEST(Smith, DiagonalMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 80; ++k) {
    const std::size_t m = 2 + rng() % 2, n = 2 + rng() % 3;
    const IntMatrix a = random_int_matrix(rng, m, n, 6);
    const auto d = smith_normal_form(a).diagonal();
    Integer prev = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Integer dk = determinantal_divisor(a, i + 1);
      if (dk == 0) {
        EXPECT_EQ(d[i], 0);
        break;
      }
      EXPECT_EQ(d[i], dk / prev);
      prev = dk;
    }
  }
}

TEST(Hermite, EchelonFormAndKernel) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
    const IntMatrix a = random_int_matrix(rng, m, n, 6);
    const HermiteForm f = hermite_normal_form(a);
    EXPECT_EQ(a * f.U, f.H);
    EXPECT_EQ(abs(int_determinant(f.U)), 1);
    EXPECT_EQ(f.rank, rank(to_rational(a)));
    for (std::size_t j = f.rank; j < n; ++j) {
      EXPECT_EQ(a * f.U.column(j), IntVector(m, Integer(0)));
      for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(f.H(i, j), 0);
    }
    // pivot rows strictly increase and entries left of a pivot are reduced
    std::size_t last = 0;
    for (std::size_t j = 0; j < f.rank; ++j) {
      std::size_t r = 0;
      while (f.H(r, j) == 0) ++r;
      if (j > 0) {
        EXPECT_GT(r, last);
      }
      last = r;
      EXPECT_GT(f.H(r, j), 0);
      for (std::size_t l = 0; l < j; ++l) {
        EXPECT_GE(f.H(r, l), 0);
        EXPECT_LT(f.H(r, l), f.H(r, j));
      }
    }
  }
}

// For a square nonsingular A the pivots of H count the points of Z^d / A Z^d.
TEST(Hermite, FundamentalDomainCount) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 60; ++k) {
    const IntMatrix a = random_int_matrix(rng, 2, 2, 5);
    const Integer det = abs(int_determinant(a));
    if (det == 0) continue;
    const HermiteForm f = hermite_normal_form(a);
    EXPECT_EQ(f.H(0, 0) * f.H(1, 1), det);
    // points x in [0, det)^2 with x in A Z^2: exactly det of the det^2 cells
    const auto inv = inverse(to_rational(a));
    long long count = 0;
    const long long n = static_cast<long long>(det);
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y)
        if (is_integral(*inv * RatVector{Rational(x), Rational(y)})) ++count;
    EXPECT_EQ(count, n);
  }
}

TEST(Vectors, PrimitiveDirection) {
  EXPECT_EQ(primitive_vector({Integer(4), Integer(-6)}), (IntVector{Integer(2), Integer(-3)}));
  EXPECT_EQ(primitive_direction({Rational(3, 2), Rational(-1)}), (IntVector{Integer(3), Integer(-2)}));
  EXPECT_EQ(content({Integer(0), Integer(-9), Integer(6)}), 3);
  EXPECT_EQ(common_denominator({Rational(1, 4), Rational(5, 6)}), 12);
}
