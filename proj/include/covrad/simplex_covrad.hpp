#pragma once

/**
 * @file simplex_covrad.hpp
 * @brief Covering radii of simplices through Cayley-graph diameters, and
 * the closed forms for S(a) and S(0,a).
 *
 * A lattice simplex T of normalized volume V is mapped affinely onto
 * V·conv{0, e_1, ..., e_d}. The image of Z^d is a lattice Λ between Z^d and
 * VZ^d, and mu(T) = (delta + d) / V, where delta is the directed diameter of
 * the Cayley graph of Z^d/Λ with respect to e_1, ..., e_d.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "covrad/errors.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"

namespace covrad {

/// Finite abelian group Z_{s_1} x ... x Z_{s_k} together with the images of
/// the standard generators e_1, ..., e_d.
struct QuotientGroup {
  std::vector<Integer> invariant_factors;   ///< s_1 | s_2 | ..., all >= 1
  std::vector<IntVector> generator_images;  ///< d vectors, entry t reduced mod s_t
  Integer order = 1;

  bool is_cyclic() const {
    return std::count_if(invariant_factors.begin(), invariant_factors.end(),
                         [](const Integer& s) { return s != 1; }) <= 1;
  }
};

/// The Cayley graph G(V; a_1, ..., a_d): the group (Z_V)^d / <(a_1, ..., a_d)>
/// with its standard generators.
struct CayleySpec {
  Integer V;
  IntVector gens;
};

/// Z^d / (columns of m) with generator images from the Smith form U m W = S.
inline QuotientGroup quotient_group_of_lattice(const IntMatrix& m) {
  const std::size_t d = m.rows();
  const SmithForm f = smith_normal_form(m);
  QuotientGroup g;
  const auto diag = f.diagonal();
  for (std::size_t i = 0; i < d; ++i) {
    const Integer s = i < diag.size() ? diag[i] : Integer(0);
    if (s == 0) throw DomainError("lattice does not have full rank");
    g.invariant_factors.push_back(s);
    g.order *= s;
  }
  for (std::size_t j = 0; j < d; ++j) {
    IntVector img(d);
    for (std::size_t i = 0; i < d; ++i) {
      Integer r = f.U(i, j) % g.invariant_factors[i];
      if (r < 0) r += g.invariant_factors[i];
      img[i] = r;
    }
    g.generator_images.push_back(std::move(img));
  }
  return g;
}

/// Vertex-difference matrix B = [v_1 - v_0, ..., v_d - v_0] of a lattice simplex.
inline IntMatrix vertex_difference_matrix(const LatticePolytope& t) {
  if (!t.is_simplex()) throw DomainError("expected a full-dimensional simplex");
  if (!t.is_lattice()) throw DomainError("expected a lattice simplex");
  const std::size_t d = t.dim();
  IntMatrix b(d, d);
  const IntVector v0 = to_integer(t.vertices()[0]);
  for (std::size_t j = 0; j < d; ++j) {
    const IntVector vj = to_integer(t.vertices()[j + 1]);
    for (std::size_t i = 0; i < d; ++i) b(i, j) = vj[i] - v0[i];
  }
  return b;
}

/// Z^d / Λ for the affine map v_0 -> 0, v_i -> V e_i, which is
/// x -> ±adj(B)(x - v_0) with the sign making V positive.
inline QuotientGroup quotient_group_of_simplex(const LatticePolytope& t) {
  const IntMatrix b = vertex_difference_matrix(t);
  IntMatrix a = adjugate(b);
  if (int_determinant(b) < 0)
    for (std::size_t i = 0; i < a.rows(); ++i) a.negate_row(i);
  return quotient_group_of_lattice(a);
}

/// Z^d / (VZ^d + Z·(a_1, ..., a_d)).
inline QuotientGroup quotient_group(const CayleySpec& spec) {
  const std::size_t d = spec.gens.size();
  if (spec.V <= 0) throw DomainError("Cayley graph needs V >= 1");
  IntMatrix m(d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = spec.V;
    m(i, d) = spec.gens[i];
  }
  return quotient_group_of_lattice(m);
}

/// Largest group order accepted by cayley_diameter.
inline constexpr std::uint64_t kMaxGroupOrder = 50'000'000;

/// Directed diameter of the Cayley graph: max over elements of the BFS
/// distance from 0 using the generator steps.
inline std::uint64_t cayley_diameter(const QuotientGroup& g) {
  std::vector<std::uint64_t> radix;
  std::vector<std::size_t> coord;
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i)
    if (g.invariant_factors[i] != 1) {
      radix.push_back(g.invariant_factors[i].convert_to<std::uint64_t>());
      coord.push_back(i);
    }
  if (g.order > Integer(kMaxGroupOrder)) throw UnsupportedDimension("group order too large for BFS");
  const std::uint64_t order = g.order.convert_to<std::uint64_t>();
  const std::size_t k = radix.size();

  // generator steps as mixed-radix digit vectors
  std::vector<std::vector<std::uint64_t>> steps;
  for (const auto& img : g.generator_images) {
    std::vector<std::uint64_t> s(k);
    bool zero = true;
    for (std::size_t t = 0; t < k; ++t) {
      s[t] = img[coord[t]].convert_to<std::uint64_t>();
      zero = zero && s[t] == 0;
    }
    if (!zero) steps.push_back(std::move(s));
  }

  constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(order, unseen);
  std::vector<std::uint64_t> queue;
  queue.reserve(order);
  dist[0] = 0;
  queue.push_back(0);
  std::vector<std::uint64_t> digits(k), moved(k);
  std::uint32_t diameter = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t cur = queue[head];
    std::uint64_t rest = cur;
    for (std::size_t t = k; t-- > 0;) {
      digits[t] = rest % radix[t];
      rest /= radix[t];
    }
    for (const auto& s : steps) {
      std::uint64_t idx = 0;
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t v = digits[t] + s[t];
        if (v >= radix[t]) v -= radix[t];
        idx = idx * radix[t] + v;
      }
      if (dist[idx] == unseen) {
        dist[idx] = dist[cur] + 1;
        diameter = std::max(diameter, dist[idx]);
        queue.push_back(idx);
      }
    }
  }
  if (queue.size() != order) throw InternalError("generators do not generate the quotient group");
  return diameter;
}

inline std::uint64_t cayley_diameter(const CayleySpec& spec) { return cayley_diameter(quotient_group(spec)); }

/// Covering radius (delta + d) / V of a full-dimensional lattice simplex.
inline Rational covering_radius_simplex(const LatticePolytope& t) {
  const IntMatrix b = vertex_difference_matrix(t);
  const Integer v = abs(int_determinant(b));
  const QuotientGroup g = quotient_group_of_simplex(t);
  const std::uint64_t delta = cayley_diameter(g);
  return Rational(Integer(delta) + Integer(t.dim()), v);
}

/// Smallest positive integer c with cP a lattice polytope.
inline Integer lattice_scale(const LatticePolytope& p) {
  Integer c = 1;
  for (const auto& v : p.vertices()) c = lcm(c, common_denominator(v));
  return c;
}

/// Covering radius of a rational simplex: c · mu(cS) for the smallest
/// integral dilate cS.
inline Rational covering_radius_rational_simplex(const LatticePolytope& s) {
  const Integer c = lattice_scale(s);
  if (c == 1) return covering_radius_simplex(s);
  return Rational(c) * covering_radius_simplex(dilate(s, Rational(c)));
}

/// S(a) = conv{-a_0 1_d, a_1 e_1, ..., a_d e_d}.
inline LatticePolytope simplex_S(const RatVector& a) {
  if (a.size() < 2) throw DimensionError("S(a) needs at least two parameters");
  for (const auto& x : a)
    if (x.sign() <= 0) throw DomainError("S(a) needs positive parameters");
  const std::size_t d = a.size() - 1;
  std::vector<RatVector> pts;
  pts.push_back(RatVector(d, -a[0]));
  for (std::size_t i = 1; i <= d; ++i) {
    RatVector e(d, Rational(0));
    e[i - 1] = a[i];
    pts.push_back(std::move(e));
  }
  return LatticePolytope::from_points(pts);
}

/// Closed form mu(S(a)) = sum_{i<j} 1/(a_i a_j) / sum_i 1/a_i.
inline Rational covrad_S(const RatVector& a) {
  if (a.size() < 2) throw DimensionError("S(a) needs at least two parameters");
  Rational pairs(0), singles(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sign() <= 0) throw DomainError("S(a) needs positive parameters");
    const Rational inv = Rational(1) / a[i];
    pairs += singles * inv;
    singles += inv;
  }
  return pairs / singles;
}

/// Closed form mu(S(0,a)) = sum_i 1/a_i.
inline Rational covrad_S0(const RatVector& a) {
  if (a.empty()) throw DimensionError("S(0,a) needs at least one parameter");
  Rational s(0);
  for (const auto& x : a) {
    if (x.sign() <= 0) throw DomainError("S(0,a) needs positive parameters");
    s += Rational(1) / x;
  }
  return s;
}

/// Normalized volumes of the pyramids over the facets of a lattice simplex
/// with apex at its unique interior lattice point, sorted ascending.
inline std::vector<Integer> volume_vector(const LatticePolytope& t) {
  if (!t.is_simplex() || !t.is_lattice()) throw DomainError("volume_vector needs a lattice simplex");
  const auto interior = interior_lattice_points(t);
  if (interior.size() != 1) throw DomainError("volume_vector needs exactly one interior lattice point");
  const RatVector p = to_rational(interior.front());
  const std::size_t d = t.dim();
  std::vector<Integer> out;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    RatMatrix m(d, d);
    std::size_t col = 0;
    for (std::size_t j = 0; j <= d; ++j) {
      if (j == skip) continue;
      for (std::size_t i = 0; i < d; ++i) m(i, col) = t.vertices()[j][i] - p[i];
      ++col;
    }
    out.push_back(abs(determinant(m)).numerator());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace covrad
