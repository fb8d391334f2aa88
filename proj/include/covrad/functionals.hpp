#pragma once

/**
 * @file functionals.hpp
 * @brief Ray data of simplices, discrete surface area, conjecture
 * right-hand sides, projection bounds and the covering-product chain.
 *
 * Everything is computed over the rationals. Lengths along a ray are lattice
 * lengths: v = t·p with p primitive has length t.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "covrad/covering_radius.hpp"
#include "covrad/errors.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"
#include "covrad/simplex_covrad.hpp"

namespace covrad {

struct SimplexRayData {
  std::vector<IntVector> p;     ///< primitive direction of v_i
  RatVector t;                  ///< v_i = t_i p_i, the lattice length of [0, v_i]
  std::vector<RatVector> u;     ///< where the ray from 0 along -v_i leaves S
  RatVector ell;                ///< lattice length of S ∩ lin(v_i)
  IntVector alpha;              ///< primitive positive dependence sum alpha_i p_i = 0
  RatVector beta;               ///< alpha_i / t_i, so sum beta_i v_i = 0
};

namespace detail {

/// Lattice length of S ∩ lin(v) for a vertex v = t·p, together with the
/// far endpoint -lambda·v of the chord.
inline std::pair<Rational, RatVector> chord(const LatticePolytope& s, const RatVector& v, const Rational& t) {
  std::optional<Rational> lambda;
  for (const auto& f : s.facets()) {
    const Rational av = f.eval(v);
    if (av.sign() >= 0) continue;
    const Rational cand = f.offset / (-av);
    if (!lambda || cand < *lambda) lambda = cand;
  }
  if (!lambda) throw InternalError("chord through the origin is unbounded");
  return {t * (Rational(1) + *lambda), scaled(v, -*lambda)};
}

}  // namespace detail

/// Scalar t with v = t·p for the primitive direction p of v.
inline std::pair<IntVector, Rational> primitive_decomposition(const RatVector& v) {
  const IntVector p = primitive_direction(v);
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  return {p, v[k] / Rational(p[k])};
}

/// Ray data of a simplex with the origin in its interior. The lengths ell_i
/// come from the barycentric formula and are checked against the direct
/// ray-facet intersection.
inline SimplexRayData ray_data(const LatticePolytope& s) {
  if (!s.is_simplex()) throw DomainError("ray_data needs a full-dimensional simplex");
  const std::size_t d = s.dim();
  const auto& fs = s.facets();
  for (const auto& f : fs)
    if (f.offset.sign() <= 0) throw DomainError("origin is not in the interior of the simplex");

  SimplexRayData r;
  for (const auto& v : s.vertices()) {
    auto [p, t] = primitive_decomposition(v);
    r.p.push_back(std::move(p));
    r.t.push_back(t);
  }
  // signed maximal minors of [p_0 ... p_d]
  IntVector alpha(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    IntMatrix m(d, d);
    for (std::size_t j = 0, c = 0; j <= d; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < d; ++k) m(k, c) = r.p[j][k];
      ++c;
    }
    Integer minor = int_determinant(m);
    alpha[i] = i % 2 == 0 ? minor : Integer(-minor);
  }
  alpha = primitive_vector(alpha);
  if (alpha[0] < 0)
    for (auto& a : alpha) a = -a;
  for (const auto& a : alpha)
    if (a <= 0) throw InternalError("directions of an interior-origin simplex must have a positive dependence");
  r.alpha = alpha;

  Rational sum_beta(0);
  for (std::size_t i = 0; i <= d; ++i) {
    r.beta.push_back(Rational(alpha[i]) / r.t[i]);
    sum_beta += r.beta.back();
  }
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational ell = r.t[i] * sum_beta / (sum_beta - r.beta[i]);
    auto [direct, u] = detail::chord(s, s.vertices()[i], r.t[i]);
    if (direct != ell) throw InternalError("ray length formulas disagree");
    r.ell.push_back(ell);
    r.u.push_back(std::move(u));
  }
  return r;
}

/// Normalized volume of the projection of S along the primitive direction
/// of vertex i, measured in the projected lattice.
inline Rational projected_volume(const LatticePolytope& s, std::size_t i) {
  const std::size_t d = s.dim();
  const IntVector p = primitive_direction(s.vertices()[i]);
  if (d == 1) return Rational(1);
  // unimodular U with U p = ±e_1
  IntMatrix col(d, 1);
  for (std::size_t k = 0; k < d; ++k) col(k, 0) = p[k];
  const SmithForm f = smith_normal_form(col);
  const RatMatrix u = to_rational(f.U);
  std::vector<RatVector> img;
  for (std::size_t j = 0; j <= d; ++j) {
    const RatVector y = u * s.vertices()[j];
    img.emplace_back(y.begin() + 1, y.end());
  }
  return normalized_volume(LatticePolytope::from_points(img));
}

/// Surf(S) = Vol(S) · sum_i 1/ell_i.
inline Rational discrete_surface_area(const LatticePolytope& s) {
  const SimplexRayData r = ray_data(s);
  Rational inv(0);
  for (const auto& l : r.ell) inv += Rational(1) / l;
  return normalized_volume(s) * inv;
}

/// Surf(S) as the sum of projected volumes (independent of ray_data).
inline Rational discrete_surface_area_by_projection(const LatticePolytope& s) {
  if (!s.is_simplex()) throw DomainError("discrete surface area needs a simplex");
  Rational sum(0);
  for (std::size_t i = 0; i <= s.dim(); ++i) sum += projected_volume(s, i);
  return sum;
}

struct ConjectureCheck {
  Rational mu;
  Rational rhs;
  bool holds = false;
  bool equality = false;
};

/// mu(S) <= Surf(S) / (2 Vol(S)) for a simplex with the origin in its interior.
inline ConjectureCheck conjC_check(const LatticePolytope& s, Method method = Method::Auto) {
  const SimplexRayData r = ray_data(s);
  ConjectureCheck c;
  for (const auto& l : r.ell) c.rhs += Rational(1) / l;
  c.rhs /= Rational(2);
  c.mu = covering_radius_value(s, method);
  c.holds = c.mu <= c.rhs;
  c.equality = c.mu == c.rhs;
  return c;
}

struct ConjEData {
  Rational rhs;
  std::vector<std::size_t> I;  ///< labels i whose opposite facet contains 0
  RatVector ell;               ///< Vol(S) / Vol(pi_i S)
};

/// Right-hand side of the boundary-origin inequality:
/// (sum_i 1/ell_i + sum_{i in I} 1/ell_i) / 2.
inline ConjEData conjE_rhs(const LatticePolytope& s) {
  if (!s.is_simplex()) throw DomainError("conjE_rhs needs a full-dimensional simplex");
  const std::size_t d = s.dim();
  const RatVector zero(d, Rational(0));
  for (const auto& v : s.vertices())
    if (v == zero) throw DomainError("origin is a vertex; use covrad_S0");
  if (!s.contains(zero)) throw DomainError("origin is not contained in the simplex");
  const Rational vol = normalized_volume(s);
  ConjEData e;
  Rational sum(0), sum_i(0);
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational ell = vol / projected_volume(s, i);
    const auto [p, t] = primitive_decomposition(s.vertices()[i]);
    if (detail::chord(s, s.vertices()[i], t).first != ell) throw InternalError("ray length formulas disagree");
    e.ell.push_back(ell);
    sum += Rational(1) / ell;
    // facet opposite vertex i: the one not containing v_i
    for (std::size_t f = 0; f < s.facets().size(); ++f) {
      const auto& on = s.facet_vertices(f);
      if (std::find(on.begin(), on.end(), i) != on.end()) continue;
      if (s.facets()[f].offset.sign() == 0) {
        e.I.push_back(i);
        sum_i += Rational(1) / ell;
      }
    }
  }
  e.rhs = (sum + sum_i) / Rational(2);
  return e;
}

/// Bound mu(P) <= mu(fiber) + mu(image) for the coordinate
/// projection that forgets the coordinates in `fiber_axes`.
struct ProjectionBound {
  Rational mu_fiber;
  Rational mu_image;
  Rational bound;
};

inline ProjectionBound projection_bound(const LatticePolytope& p, const std::vector<std::size_t>& fiber_axes) {
  const std::size_t d = p.dim();
  std::vector<bool> in_fiber(d, false);
  for (auto k : fiber_axes) {
    if (k >= d) throw DimensionError("projection axis out of range");
    in_fiber[k] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < d; ++k)
    if (!in_fiber[k]) keep.push_back(k);
  if (fiber_axes.empty() || keep.empty()) throw DomainError("projection must split the coordinates");

  // fiber Q = P ∩ {x_keep = 0}, in the fiber coordinates
  std::vector<detail::HalfSpace> hs;
  for (const auto& f : p.facets()) {
    RatVector a;
    for (auto k : fiber_axes) a.push_back(Rational(f.normal[k]));
    hs.push_back({a, f.offset});
  }
  const auto qv = detail::polytope_vertices(hs, fiber_axes.size());
  if (qv.empty()) throw DomainError("fiber is empty");
  const LatticePolytope q = LatticePolytope::from_points(qv);
  if (!q.full_dimensional()) throw DomainError("fiber is not full-dimensional");

  std::vector<RatVector> img;
  for (const auto& v : p.vertices()) {
    RatVector y;
    for (auto k : keep) y.push_back(v[k]);
    img.push_back(std::move(y));
  }
  const LatticePolytope im = LatticePolytope::from_points(img);

  ProjectionBound b;
  b.mu_fiber = covering_radius_value(q);
  b.mu_image = covering_radius_value(im);
  b.bound = b.mu_fiber + b.mu_image;
  return b;
}

/// Elementary symmetric polynomial sigma_k.
inline Rational elementary_symmetric(const RatVector& a, std::size_t k) {
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : a)
    for (std::size_t j = std::min(k, a.size()); j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

struct CoveringProductChain {
  RatVector sorted;       ///< a in ascending order
  RatVector ratios;       ///< sigma_{j-1}(a_0..a_j) / sigma_{j-1}(a_0..a_{j-1}), j = 1..d
  RatVector lower_bounds; ///< (j+1)/2
  RatVector mu_j_bounds;  ///< sigma_{j-1}(a_0..a_j) / sigma_j(a_0..a_j): conjectured mu_j
  Rational product;       ///< prod_j mu_j_bounds · sigma_d(a)
  Rational telescoped;    ///< prod_j ratios
  Rational target;        ///< (d+1)! / 2^d
  bool holds = false;
  bool equality = false;
  bool all_equal = false;
};

inline CoveringProductChain covering_product_chain(const RatVector& a) {
  if (a.size() < 2) throw DimensionError("covering product needs at least two entries");
  for (const auto& x : a)
    if (x.sign() <= 0) throw DomainError("covering product needs positive entries");
  CoveringProductChain c;
  c.sorted = a;
  std::sort(c.sorted.begin(), c.sorted.end());
  const std::size_t d = a.size() - 1;
  c.product = elementary_symmetric(c.sorted, d);
  c.telescoped = 1;
  bool every_ratio_ok = true;
  for (std::size_t j = 1; j <= d; ++j) {
    const RatVector head(c.sorted.begin(), c.sorted.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    const RatVector prev(c.sorted.begin(), c.sorted.begin() + static_cast<std::ptrdiff_t>(j));
    const Rational ratio = elementary_symmetric(head, j - 1) / elementary_symmetric(prev, j - 1);
    const Rational lb(static_cast<long long>(j + 1), 2);
    c.ratios.push_back(ratio);
    c.lower_bounds.push_back(lb);
    every_ratio_ok = every_ratio_ok && ratio >= lb;
    const Rational mu_j = elementary_symmetric(head, j - 1) / elementary_symmetric(head, j);
    c.mu_j_bounds.push_back(mu_j);
    c.product *= mu_j;
    c.telescoped *= ratio;
  }
  Integer fact = 1;
  for (std::size_t k = 2; k <= d + 1; ++k) fact *= static_cast<long long>(k);
  c.target = Rational(fact, Integer(1) << static_cast<unsigned>(d));
  if (c.product != c.telescoped) throw InternalError("covering product identity failed");
  c.holds = every_ratio_ok && c.product >= c.target;
  c.equality = c.product == c.target;
  c.all_equal = std::all_of(c.sorted.begin(), c.sorted.end(), [&](const Rational& x) { return x == c.sorted[0]; });
  return c;
}

/// mu_1(S(a)) = 1 / (sum of the two smallest entries).
inline Rational mu1_Sa(const RatVector& a) {
  if (a.size() < 2) throw DimensionError("mu1_Sa needs at least two entries");
  RatVector s = a;
  std::sort(s.begin(), s.end());
  if (s[0].sign() <= 0) throw DomainError("mu1_Sa needs positive entries");
  return Rational(1) / (s[0] + s[1]);
}

// ---------------------------------------------------------------------------
// Seeded samplers

/// Deterministic integer in [lo, hi] (modulo reduction of a 64-bit draw).
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

/// Rational in [-box, box] with denominator in 1..max_den.
inline Rational draw_rational(std::mt19937_64& rng, long long box, long long max_den) {
  const long long q = draw(rng, 1, max_den);
  return Rational(draw(rng, -box * q, box * q), q);
}

/// Random d-simplex with rational vertices in [-box, box]^d and the origin
/// in its interior (rejection sampling).
inline LatticePolytope random_simplex_with_interior_origin(std::mt19937_64& rng, std::size_t d, long long box,
                                                           long long max_den) {
  for (;;) {
    std::vector<RatVector> pts(d + 1, RatVector(d));
    for (auto& v : pts)
      for (auto& x : v) x = max_den == 1 ? Rational(draw(rng, -box, box)) : draw_rational(rng, box, max_den);
    const LatticePolytope s = LatticePolytope::from_points(pts);
    if (!s.is_simplex() || s.num_vertices() != d + 1) continue;
    const bool interior = std::all_of(s.facets().begin(), s.facets().end(),
                                      [](const Facet& f) { return f.offset.sign() > 0; });
    if (interior) return s;
  }
}

/// Random unimodular matrix: a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d, int steps = 6) {
  IntMatrix u = IntMatrix::identity(d);
  if (d < 2) {
    if (draw(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(d) - 1));
    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(d) - 2));
    if (j >= i) ++j;
    switch (draw(rng, 0, 2)) {
      case 0: u.add_row(i, j, Integer(draw(rng, -2, 2))); break;
      case 1: u.swap_rows(i, j); break;
      default: u.negate_row(i); break;
    }
  }
  return u;
}

}  // namespace covrad
