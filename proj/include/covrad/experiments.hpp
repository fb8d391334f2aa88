#pragma once

/**
 * @file experiments.hpp
 * @brief Seeded sample drivers for the conjecture checks.
 *
 * Every driver draws all of its samples from one mt19937_64 stream before
 * any work is distributed, so results do not depend on the job count.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "covrad/catalog.hpp"
#include "covrad/covering_radius.hpp"
#include "covrad/errors.hpp"
#include "covrad/functionals.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"

namespace covrad {

/// All ways of writing P = conv(S_1 ∪ S_2) for lattice segments meeting in a
/// lattice point with primitive directions forming a basis of Z^2 (P is then
/// a direct sum of two segments up to translation), as sorted pairs of
/// lattice lengths.
inline std::vector<std::pair<Integer, Integer>> segment_sum_lengths(const LatticePolytope& p) {
  std::vector<std::pair<Integer, Integer>> out;
  if (p.dim() != 2 || !p.is_lattice() || !p.full_dimensional()) return out;
  const auto& v = p.vertices();
  auto unimodular = [](const RatVector& a, const RatVector& b) {
    const IntVector u = primitive_direction(a), w = primitive_direction(b);
    return abs(u[0] * w[1] - u[1] * w[0]) == 1;
  };
  auto lengths = [](const RatVector& a, const RatVector& b) {
    Integer x = primitive_decomposition(a).second.numerator();
    Integer y = primitive_decomposition(b).second.numerator();
    if (y < x) std::swap(x, y);
    return std::make_pair(x, y);
  };
  if (v.size() == 4) {
    // the segments must be the diagonals
    for (std::size_t j = 1; j < 4; ++j) {
      std::size_t k = 0, l = 0;
      for (std::size_t t = 1; t < 4; ++t)
        if (t != j) (k == 0 ? k : l) = t;
      const RatVector d1 = v[j] - v[0], d2 = v[l] - v[k];
      RatMatrix m(2, 2);
      m(0, 0) = d1[0];
      m(1, 0) = d1[1];
      m(0, 1) = -d2[0];
      m(1, 1) = -d2[1];
      const auto st = solve(m, v[k] - v[0]);
      if (!st) continue;
      const Rational s = (*st)[0], t = (*st)[1];
      if (s.sign() <= 0 || s >= Rational(1) || t.sign() <= 0 || t >= Rational(1)) continue;
      const RatVector o = v[0] + scaled(d1, s);
      if (is_integral(o) && unimodular(d1, d2)) out.push_back(lengths(d1, d2));
    }
  }
  if (v.size() == 3) {
    for (std::size_t c = 0; c < 3; ++c) {
      const RatVector& a = v[(c + 1) % 3];
      const RatVector& b = v[(c + 2) % 3];
      const RatVector e = b - a;
      const auto [step, len] = primitive_decomposition(e);
      for (Integer s = 0; Rational(s) <= len; ++s) {
        const RatVector o = a + scaled(to_rational(step), Rational(s));
        if (unimodular(e, v[c] - o)) out.push_back(lengths(e, v[c] - o));
      }
    }
  }
  return out;
}

/// Convex hull of `npoints` random lattice points in [-box, box]^d, redrawn
/// until full-dimensional with at least `min_interior` interior lattice
/// points.
inline LatticePolytope random_lattice_polytope(std::mt19937_64& rng, std::size_t d, long long box,
                                               std::size_t npoints, std::size_t min_interior) {
  for (;;) {
    std::vector<IntVector> pts(npoints, IntVector(d));
    for (auto& x : pts)
      for (auto& c : x) c = draw(rng, -box, box);
    const LatticePolytope p = LatticePolytope::from_points(pts);
    if (!p.full_dimensional()) continue;
    if (interior_lattice_points(p).size() >= min_interior) return p;
  }
}

/// U·S(a) for random a with entries p/q, q <= max_den, in (0, box], and a
/// random unimodular U; redrawn until every vertex lies in [-box, box]^d.
inline LatticePolytope random_Sa_type_simplex(std::mt19937_64& rng, std::size_t d, long long box, long long max_den) {
  for (;;) {
    RatVector a(d + 1);
    for (auto& x : a) {
      const long long q = draw(rng, 1, max_den);
      x = Rational(draw(rng, 1, box * q), q);
    }
    const IntMatrix u = random_unimodular(rng, d);
    const LatticePolytope s = linear_image(simplex_S(a), u);
    const bool inside = std::all_of(s.vertices().begin(), s.vertices().end(), [&](const RatVector& v) {
      return std::all_of(v.begin(), v.end(), [&](const Rational& c) { return abs(c) <= Rational(box); });
    });
    if (inside) return s;
  }
}

/// Primitive directions of the vertices sum to zero.
inline bool directions_sum_to_zero(const SimplexRayData& r) {
  IntVector sum(r.p.front().size(), Integer(0));
  for (const auto& p : r.p)
    for (std::size_t k = 0; k < p.size(); ++k) sum[k] += p[k];
  return std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------

struct ConjARow {
  std::string label;
  std::vector<RatVector> vertices;
  ConjACheck check;
};

struct ConjAReport {
  std::vector<ConjARow> rows;
  std::size_t equality_count = 0;
  bool ok = false;
};

/// The catalogued equality cases of dimension `dim`, then `samples` random
/// non-hollow lattice polytopes with 3..6 (d=2) or 4..6 (d=3) random points
/// in [-box, box]^d.
inline ConjAReport conjA_samples(std::size_t dim, std::size_t samples, std::uint64_t seed, long long box,
                                 unsigned jobs = 1) {
  if (dim != 2 && dim != 3) throw UnsupportedDimension("conjecture A checks need d in {2, 3}");
  std::vector<std::pair<std::string, LatticePolytope>> todo;
  for (const auto& n : dim == 2 ? maximal_2d_names() : maximal_3d_names()) todo.emplace_back(n, build(n));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto npts = static_cast<std::size_t>(draw(rng, static_cast<long long>(dim) + 1, 6));
    todo.emplace_back("sample " + std::to_string(s), random_lattice_polytope(rng, dim, box, npts, 1));
  }
  ConjAReport rep;
  rep.rows.resize(todo.size());
  detail::parallel_for(todo.size(), jobs, [&](std::size_t i) {
    rep.rows[i] = {todo[i].first, todo[i].second.vertices(), check_conjA(todo[i].second)};
  });
  rep.ok = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& c = rep.rows[i].check;
    rep.equality_count += c.equality ? 1 : 0;
    const bool named = i < todo.size() - samples;
    rep.ok = rep.ok && c.holds && c.consistent && (!named || c.equality);
  }
  return rep;
}

// ---------------------------------------------------------------------------

struct ConjCRow {
  std::vector<RatVector> vertices;
  bool constructed_Sa = false;  ///< drawn as U·S(a)
  bool sa_type = false;         ///< primitive directions sum to zero
  std::optional<ConjectureCheck> check;
  Rational surf;
  bool surf_by_projection_ok = false;
  bool identity_ok = false;      ///< sum_i t_i / ell_i = d
  bool surf_invariant = false;   ///< Surf(U·S) = Surf(S) for the drawn U
};

struct ConjCReport {
  std::vector<ConjCRow> rows;
  std::size_t sa_type_count = 0;
  std::size_t equality_count = 0;
  std::size_t equality_outside_sa_type = 0;
  std::size_t strict_inside_sa_type = 0;
  bool holds = false;            ///< mu <= rhs everywhere
  bool equality_matches = false; ///< equality exactly on the S(a)-type rows
  bool identities_ok = false;    ///< projection, identity and invariance checks
  bool ok = false;
};

/// Random simplices with the origin in the interior and vertices in
/// [-box, box]^d (denominators up to max_den). Every fourth sample is drawn
/// as U·S(a). With compute_mu = false only the surface-area identities are
/// checked.
inline ConjCReport conjC_samples(std::size_t dim, std::size_t samples, std::uint64_t seed, long long box,
                                 long long max_den, unsigned jobs = 1, bool compute_mu = true,
                                 int unimodular_per_sample = 10) {
  if (dim < 2 || dim > 3) throw UnsupportedDimension("conjecture C checks need d in {2, 3}");
  struct Draw {
    LatticePolytope s;
    bool constructed;
    std::vector<IntMatrix> us;
  };
  std::mt19937_64 rng(seed);
  std::vector<Draw> todo;
  for (std::size_t k = 0; k < samples; ++k) {
    const bool sa = k % 4 == 3;
    LatticePolytope s = sa ? random_Sa_type_simplex(rng, dim, box, max_den)
                           : random_simplex_with_interior_origin(rng, dim, box, max_den);
    std::vector<IntMatrix> us;
    for (int t = 0; t < unimodular_per_sample; ++t) us.push_back(random_unimodular(rng, dim));
    todo.push_back({std::move(s), sa, std::move(us)});
  }

  ConjCReport rep;
  rep.rows.resize(todo.size());
  detail::parallel_for(todo.size(), jobs, [&](std::size_t i) {
    const Draw& d = todo[i];
    ConjCRow r;
    r.vertices = d.s.vertices();
    r.constructed_Sa = d.constructed;
    const SimplexRayData rd = ray_data(d.s);
    r.sa_type = directions_sum_to_zero(rd);
    r.surf = discrete_surface_area(d.s);
    r.surf_by_projection_ok = discrete_surface_area_by_projection(d.s) == r.surf;
    Rational id(0);
    for (std::size_t j = 0; j < rd.t.size(); ++j) id += rd.t[j] / rd.ell[j];
    r.identity_ok = id == Rational(static_cast<long long>(dim));
    r.surf_invariant = std::all_of(d.us.begin(), d.us.end(), [&](const IntMatrix& u) {
      return discrete_surface_area(linear_image(d.s, u)) == r.surf;
    });
    if (compute_mu) r.check = conjC_check(d.s);
    rep.rows[i] = std::move(r);
  });

  rep.holds = rep.equality_matches = rep.identities_ok = true;
  for (const auto& r : rep.rows) {
    rep.identities_ok = rep.identities_ok && r.surf_by_projection_ok && r.identity_ok && r.surf_invariant &&
                        (!r.constructed_Sa || r.sa_type);
    rep.sa_type_count += r.sa_type ? 1 : 0;
    if (!r.check) continue;
    rep.holds = rep.holds && r.check->holds;
    rep.equality_count += r.check->equality ? 1 : 0;
    if (r.check->equality && !r.sa_type) ++rep.equality_outside_sa_type;
    if (!r.check->equality && r.sa_type) ++rep.strict_inside_sa_type;
  }
  rep.equality_matches = rep.equality_outside_sa_type == 0 && rep.strict_inside_sa_type == 0;
  rep.ok = rep.identities_ok && (!compute_mu || (rep.holds && rep.equality_matches));
  return rep;
}

// ---------------------------------------------------------------------------

struct ConjDRow {
  std::string label;
  std::vector<RatVector> vertices;
  ConjDCheck check;
  bool sum_of_segments = false;  ///< direct sum of segments of lengths 2 and k+1
  bool ok = false;               ///< holds, and equality iff sum_of_segments
};

struct ConjDReport {
  std::vector<ConjDRow> rows;
  bool ok = false;
};

/// kite(k, i) for k = 2..kmax, i = 0..floor((k+1)/2), M_k(1) for the same k,
/// then random lattice polygons with at least two interior points.
inline ConjDReport conjD_samples(long long kmax, std::size_t samples, std::uint64_t seed, long long box,
                                 unsigned jobs = 1) {
  if (kmax < 2) throw DomainError("kmax must be >= 2");
  std::vector<std::pair<std::string, LatticePolytope>> todo;
  for (long long k = 2; k <= kmax; ++k) {
    for (long long i = 0; i <= (k + 1) / 2; ++i)
      todo.emplace_back("kite(" + std::to_string(k) + "," + std::to_string(i) + ")", family_kite(k, i));
    todo.emplace_back("M_" + std::to_string(k) + "(1)", family_M2(k, 1));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto npts = static_cast<std::size_t>(draw(rng, 3, 6));
    todo.emplace_back("sample " + std::to_string(s), random_lattice_polytope(rng, 2, box, npts, 2));
  }
  ConjDReport rep;
  rep.rows.resize(todo.size());
  detail::parallel_for(todo.size(), jobs, [&](std::size_t i) {
    ConjDRow r;
    r.label = todo[i].first;
    r.vertices = todo[i].second.vertices();
    r.check = check_conjD_dim2(todo[i].second);
    const auto lens = segment_sum_lengths(todo[i].second);
    const std::pair<Integer, Integer> want{Integer(2), Integer(r.check.k + 1)};
    r.sum_of_segments = std::find(lens.begin(), lens.end(), want) != lens.end();
    r.ok = r.check.holds && r.check.equality == r.sum_of_segments;
    rep.rows[i] = std::move(r);
  });
  rep.ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ConjDRow& r) { return r.ok; });
  return rep;
}

// ---------------------------------------------------------------------------

struct ConjERow {
  std::vector<RatVector> vertices;
  ConjEData data;
  Rational mu;
  bool holds = false;
};

struct ConjEReport {
  std::vector<ConjERow> rows;
  bool ok = false;
};

/// conv{(0,-2), (2,0), (-2,0)} and random lattice triangles translated so
/// that a lattice point in the relative interior of an edge is the origin.
inline ConjEReport conjE_samples(std::size_t samples, std::uint64_t seed, long long box, unsigned jobs = 1) {
  std::vector<LatticePolytope> todo = {detail::rat_hull({{0, -2}, {2, 0}, {-2, 0}})};
  std::mt19937_64 rng(seed);
  while (todo.size() < samples + 1) {
    const LatticePolytope t = random_lattice_polytope(rng, 2, box, 3, 0);
    if (t.num_vertices() != 3) continue;
    std::vector<RatVector> cand;
    for (const auto& x : lattice_points(t)) {
      const RatVector y = to_rational(x);
      if (t.contains_in_interior(y)) continue;
      if (std::find(t.vertices().begin(), t.vertices().end(), y) != t.vertices().end()) continue;
      cand.push_back(y);
    }
    if (cand.empty()) continue;
    const RatVector o = cand[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(cand.size()) - 1))];
    todo.push_back(translate(t, scaled(o, Rational(-1))));
  }
  ConjEReport rep;
  rep.rows.resize(todo.size());
  detail::parallel_for(todo.size(), jobs, [&](std::size_t i) {
    ConjERow r;
    r.vertices = todo[i].vertices();
    r.data = conjE_rhs(todo[i]);
    r.mu = covering_radius(todo[i], Method::Mip).mu;
    r.holds = r.mu <= r.data.rhs;
    rep.rows[i] = std::move(r);
  });
  rep.ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ConjERow& r) { return r.holds; });
  return rep;
}

// ---------------------------------------------------------------------------

struct ProductRow {
  RatVector a;
  CoveringProductChain chain;
  bool ok = false;  ///< holds, and equality iff all entries equal
};

struct WidthRow {
  RatVector a;
  Rational mu1;
  Rational inverse_width;
  bool ok = false;
};

struct ProductReport {
  std::vector<ProductRow> rows;
  std::vector<WidthRow> width_rows;
  bool ok = false;
};

/// Covering-product chain on 1_{d+1} (d = 1..4), (1,1,2), (2,2,2,2) and
/// `samples` random a with d in 2..4 (for d = 1 the chain is the identity
/// 1 = 1), entries p/q with q <= 4 in (0, 6];
/// mu1_Sa against 1/lattice_width on `width_samples` random integer a with
/// d in 1..3 and entries in 1..6.
inline ProductReport product_samples(std::size_t samples, std::size_t width_samples, std::uint64_t seed) {
  std::vector<RatVector> as;
  for (std::size_t d = 1; d <= 4; ++d) as.emplace_back(d + 1, Rational(1));
  as.push_back({Rational(1), Rational(1), Rational(2)});
  as.push_back(RatVector(4, Rational(2)));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto d = static_cast<std::size_t>(draw(rng, 2, 4));
    RatVector a(d + 1);
    for (auto& x : a) {
      const long long q = draw(rng, 1, 4);
      x = Rational(draw(rng, 1, 6 * q), q);
    }
    as.push_back(std::move(a));
  }
  ProductReport rep;
  rep.ok = true;
  for (const auto& a : as) {
    ProductRow r{a, covering_product_chain(a), false};
    r.ok = r.chain.holds && r.chain.equality == r.chain.all_equal;
    rep.ok = rep.ok && r.ok;
    rep.rows.push_back(std::move(r));
  }
  for (std::size_t s = 0; s < width_samples; ++s) {
    const auto d = static_cast<std::size_t>(draw(rng, 1, 3));
    RatVector a(d + 1);
    for (auto& x : a) x = Rational(draw(rng, 1, 6));
    WidthRow w{a, mu1_Sa(a), Rational(1) / lattice_width(simplex_S(a)).width, false};
    w.ok = w.mu1 == w.inverse_width;
    rep.ok = rep.ok && w.ok;
    rep.width_rows.push_back(std::move(w));
  }
  return rep;
}

}  // namespace covrad
