#pragma once

/**
 * @file polytope.hpp
 * @brief Rational polytopes in V- and H-representation.
 *
 * A LatticePolytope is built from a finite point set. Construction removes
 * duplicates and non-extreme points, keeping the surviving vertices in input
 * order. Full-dimensional polytopes of dimension at most 3, and simplices of
 * any dimension, also get an exact irredundant facet list.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "covrad/errors.hpp"
#include "covrad/lp.hpp"
#include "covrad/matrix.hpp"
#include "covrad/rational.hpp"

namespace covrad {

/// Halfspace a·x <= b with primitive integer normal a.
struct Facet {
  IntVector normal;
  Rational offset;

  Rational eval(const RatVector& x) const { return dot(normal, x); }
  friend bool operator==(const Facet&, const Facet&) = default;
};

namespace detail {

inline IntVector cross3(const IntVector& u, const IntVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Integer cross2(const IntVector& o, const IntVector& a, const IntVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain; returns indices of the strict hull vertices in
/// counter-clockwise order (collinear boundary points dropped).
inline std::vector<std::size_t> hull2d(const std::vector<IntVector>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

struct IntFacet {
  IntVector normal;
  Integer offset;
};

/// Polygon of the points of `pts` lying on plane (a, b), as indices into pts
/// in cyclic order.
inline std::vector<std::size_t> facet_polygon3(const std::vector<IntVector>& pts, const IntFacet& f) {
  std::size_t drop = 0;
  while (f.normal[drop] == 0) ++drop;
  std::vector<IntVector> proj;
  std::vector<std::size_t> back;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dot(f.normal, pts[i]) != f.offset) continue;
    IntVector q;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != drop) q.push_back(pts[i][k]);
    proj.push_back(std::move(q));
    back.push_back(i);
  }
  std::vector<std::size_t> h = hull2d(proj);
  for (auto& i : h) i = back[i];
  return h;
}

/// Incremental beneath-beyond hull of full-dimensional integer points in R^3.
inline std::vector<IntFacet> hull3d(const std::vector<IntVector>& pts) {
  const std::size_t n = pts.size();
  std::size_t i1 = 1;
  while (i1 < n && pts[i1] == pts[0]) ++i1;
  std::size_t i2 = i1 + 1;
  while (i2 < n && cross3(pts[i1] - pts[0], pts[i2] - pts[0]) == IntVector{0, 0, 0}) ++i2;
  std::size_t i3 = i2 + 1;
  const IntVector n012 = cross3(pts[i1] - pts[0], pts[i2] - pts[0]);
  while (i3 < n && dot(n012, pts[i3] - pts[0]) == 0) ++i3;
  if (i3 >= n) throw DegeneracyError("point set is not full-dimensional");

  const IntVector interior4 = pts[0] + pts[i1] + pts[i2] + pts[i3];
  auto make_plane = [&](const IntVector& p, const IntVector& q, const IntVector& r) {
    IntVector nrm = cross3(q - p, r - p);
    Integer b = dot(nrm, p);
    if (dot(nrm, interior4) > 4 * b) {
      for (auto& x : nrm) x = -x;
      b = -b;
    }
    const Integer g = content(nrm);
    for (auto& x : nrm) x /= g;
    return IntFacet{nrm, b / g};
  };

  std::vector<IntVector> hp = {pts[0], pts[i1], pts[i2], pts[i3]};
  std::vector<IntFacet> facets = {make_plane(hp[0], hp[1], hp[2]), make_plane(hp[0], hp[1], hp[3]),
                                  make_plane(hp[0], hp[2], hp[3]), make_plane(hp[1], hp[2], hp[3])};

  for (std::size_t k = 0; k < n; ++k) {
    const IntVector& q = pts[k];
    std::vector<bool> visible(facets.size());
    bool any = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      visible[f] = dot(facets[f].normal, q) > facets[f].offset;
      any = any || visible[f];
    }
    if (!any) continue;

    std::vector<IntFacet> next;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (!visible[f]) next.push_back(facets[f]);
    const std::size_t kept = next.size();
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) continue;
      const auto poly = facet_polygon3(hp, facets[f]);
      for (std::size_t e = 0; e < poly.size(); ++e) {
        const IntVector& u = hp[poly[e]];
        const IntVector& w = hp[poly[(e + 1) % poly.size()]];
        bool horizon = false;
        for (std::size_t g = 0; g < kept && !horizon; ++g)
          horizon = dot(next[g].normal, u) == next[g].offset && dot(next[g].normal, w) == next[g].offset;
        if (!horizon) continue;
        IntFacet nf = make_plane(q, u, w);
        const bool dup = std::any_of(next.begin(), next.end(),
                                     [&](const IntFacet& o) { return o.normal == nf.normal; });
        if (!dup) next.push_back(std::move(nf));
      }
    }
    facets = std::move(next);
    hp.push_back(q);
    hp.erase(std::remove_if(hp.begin(), hp.end(),
                            [&](const IntVector& p) {
                              return std::none_of(facets.begin(), facets.end(), [&](const IntFacet& f) {
                                return dot(f.normal, p) == f.offset;
                              });
                            }),
             hp.end());
  }
  return facets;
}

/// True iff pts[k] is a convex combination of the other points.
inline bool in_hull_of_others(const std::vector<RatVector>& pts, std::size_t k) {
  const std::size_t n = pts.size(), d = pts[k].size();
  if (n == 1) return false;
  LinearProgram lp(n - 1);
  for (std::size_t c = 0; c < d; ++c) {
    RatVector row;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) row.push_back(pts[j][c]);
    lp.add_row(std::move(row), Sense::Equal, pts[k][c]);
  }
  lp.add_row(RatVector(n - 1, Rational(1)), Sense::Equal, Rational(1));
  lp.maximize(RatVector(n - 1, Rational(0)));
  return lp.solve().status == LpStatus::Optimal;
}

}  // namespace detail

class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// Convex hull of the given points (all of the same length d).
  static LatticePolytope from_points(const std::vector<RatVector>& points) {
    if (points.empty()) throw DomainError("polytope needs at least one point");
    LatticePolytope p;
    p.d_ = points.front().size();
    for (const auto& x : points)
      if (x.size() != p.d_) throw DimensionError("points of different dimension");
    p.build(points);
    return p;
  }

  static LatticePolytope from_points(const std::vector<IntVector>& points) {
    std::vector<RatVector> r;
    for (const auto& x : points) r.push_back(to_rational(x));
    return from_points(r);
  }

  /// Columns of m are the points.
  static LatticePolytope from_columns(const IntMatrix& m) {
    std::vector<IntVector> pts;
    for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(m.column(j));
    return from_points(pts);
  }

  std::size_t dim() const { return d_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool is_lattice() const { return lattice_; }
  bool full_dimensional() const { return affine_dim_ == d_; }
  std::size_t affine_dimension() const { return affine_dim_; }
  /// Direction vectors spanning the affine hull (parallel to it).
  const std::vector<RatVector>& affine_basis() const { return affine_basis_; }
  bool is_simplex() const { return full_dimensional() && vertices_.size() == d_ + 1; }
  bool has_hrep() const { return hrep_.has_value(); }

  /// Irredundant facet list; throws when it was not computable.
  const std::vector<Facet>& facets() const {
    if (!full_dimensional()) throw DegeneracyError("polytope is not full-dimensional");
    if (!hrep_) throw UnsupportedDimension("facets are only computed for d <= 3 or simplices");
    return *hrep_;
  }

  /// Indices of vertices on facet i; cyclically ordered when d = 3.
  const std::vector<std::size_t>& facet_vertices(std::size_t i) const {
    facets();
    return incidence_.at(i);
  }

  bool contains(const RatVector& x) const {
    return std::all_of(facets().begin(), facets().end(), [&](const Facet& f) { return f.eval(x) <= f.offset; });
  }
  bool contains_in_interior(const RatVector& x) const {
    return std::all_of(facets().begin(), facets().end(), [&](const Facet& f) { return f.eval(x) < f.offset; });
  }

  /// Rebuilds from given vertices and facets that are known to be exact.
  static LatticePolytope assemble(std::size_t d, std::vector<RatVector> verts, std::vector<Facet> facets) {
    LatticePolytope p;
    p.d_ = d;
    p.vertices_ = std::move(verts);
    p.affine_dim_ = d;
    p.hrep_ = std::move(facets);
    p.finish();
    return p;
  }

 private:
  void build(const std::vector<RatVector>& input) {
    std::vector<RatVector> pts;
    for (const auto& x : input)
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);

    // affine hull
    affine_basis_.clear();
    {
      std::vector<RatVector> rows;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector diff = pts[i] - pts[0];
        rows.push_back(diff);
        if (rank(RatMatrix::from_rows(rows)) > affine_basis_.size())
          affine_basis_.push_back(diff);
        else
          rows.pop_back();
      }
    }
    affine_dim_ = affine_basis_.size();

    if (affine_dim_ < d_ || d_ == 0) {
      vertices_ = extreme_by_lp(pts);
      finish();
      return;
    }

    if (pts.size() == d_ + 1) {
      vertices_ = pts;
      hrep_ = simplex_facets(vertices_);
    } else if (d_ <= 3) {
      Integer den = 1;
      for (const auto& x : pts) den = lcm(den, common_denominator(x));
      std::vector<IntVector> ip;
      for (const auto& x : pts) ip.push_back(to_integer(scaled(x, Rational(den))));
      std::vector<detail::IntFacet> ifs = int_hull(ip);
      hrep_.emplace();
      for (auto& f : ifs) hrep_->push_back({f.normal, Rational(f.offset, den)});
      // vertices: points lying on at least d facets with full-rank normals
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RatVector> normals;
        for (const auto& f : *hrep_)
          if (f.eval(pts[i]) == f.offset) normals.push_back(to_rational(f.normal));
        if (normals.size() >= d_ && rank(RatMatrix::from_rows(normals)) == d_) vertices_.push_back(pts[i]);
      }
    } else {
      vertices_ = extreme_by_lp(pts);
      if (vertices_.size() == d_ + 1) hrep_ = simplex_facets(vertices_);
    }
    finish();
  }

  std::vector<detail::IntFacet> int_hull(const std::vector<IntVector>& ip) const {
    std::vector<detail::IntFacet> out;
    if (d_ == 1) {
      Integer lo = ip[0][0], hi = ip[0][0];
      for (const auto& x : ip) lo = std::min(lo, x[0]), hi = std::max(hi, x[0]);
      out.push_back({{Integer(1)}, hi});
      out.push_back({{Integer(-1)}, Integer(-lo)});
    } else if (d_ == 2) {
      const auto h = detail::hull2d(ip);
      for (std::size_t k = 0; k < h.size(); ++k) {
        const IntVector& u = ip[h[k]];
        const IntVector& w = ip[h[(k + 1) % h.size()]];
        IntVector nrm = primitive_vector(IntVector{w[1] - u[1], u[0] - w[0]});
        out.push_back({nrm, dot(nrm, u)});
      }
    } else {
      out = detail::hull3d(ip);
    }
    return out;
  }

  static std::vector<RatVector> extreme_by_lp(const std::vector<RatVector>& pts) {
    std::vector<RatVector> remaining = pts;
    for (std::size_t k = 0; k < remaining.size();) {
      if (detail::in_hull_of_others(remaining, k))
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
      else
        ++k;
    }
    return remaining;
  }

  /// Facets of a full-dimensional simplex from the inverse of its
  /// homogenized vertex matrix; facet i is opposite vertex i.
  static std::vector<Facet> simplex_facets(const std::vector<RatVector>& v) {
    const std::size_t d = v.front().size();
    RatMatrix m(d + 1, d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      for (std::size_t i = 0; i < d; ++i) m(i, j) = v[j][i];
      m(d, j) = 1;
    }
    auto inv = inverse(m);
    if (!inv) throw DegeneracyError("simplex vertices are affinely dependent");
    std::vector<Facet> out;
    for (std::size_t i = 0; i <= d; ++i) {
      // barycentric lambda_i(x) = w·x + c >= 0  <=>  -w·x <= c
      RatVector w(d);
      for (std::size_t k = 0; k < d; ++k) w[k] = -(*inv)(i, k);
      Rational c = (*inv)(i, d);
      const IntVector a = primitive_direction(w);
      // w = t·a for some t > 0
      std::size_t k = 0;
      while (a[k] == 0) ++k;
      const Rational t = w[k] / Rational(a[k]);
      out.push_back({a, c / t});
    }
    return out;
  }

  void finish() {
    lattice_ = std::all_of(vertices_.begin(), vertices_.end(), is_integral);
    incidence_.clear();
    if (!hrep_) return;
    for (const auto& f : *hrep_) {
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (f.eval(vertices_[i]) == f.offset) on.push_back(i);
      if (d_ == 3 && on.size() > 3) {
        Integer den = 1;
        for (auto i : on) den = lcm(den, common_denominator(vertices_[i]));
        std::vector<IntVector> ip;
        for (auto i : on) ip.push_back(to_integer(scaled(vertices_[i], Rational(den))));
        detail::IntFacet scaled_f{f.normal, (f.offset * Rational(den)).numerator()};
        auto order = detail::facet_polygon3(ip, scaled_f);
        std::vector<std::size_t> cyc;
        for (auto k : order) cyc.push_back(on[k]);
        on = std::move(cyc);
      }
      incidence_.push_back(std::move(on));
    }
  }

  std::size_t d_ = 0;
  std::vector<RatVector> vertices_;
  bool lattice_ = true;
  std::size_t affine_dim_ = 0;
  std::vector<RatVector> affine_basis_;
  std::optional<std::vector<Facet>> hrep_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Facet list; throws UnsupportedDimension or DegeneracyError when unavailable.
inline const std::vector<Facet>& hull_hrep(const LatticePolytope& p) { return p.facets(); }

// ---------------------------------------------------------------------------
// Lattice points

namespace detail {

template <class Accept>
std::vector<IntVector> scan_box(const LatticePolytope& p, Accept accept) {
  const std::size_t d = p.dim();
  IntVector lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational mn = p.vertices()[0][k], mx = mn;
    for (const auto& v : p.vertices()) mn = std::min(mn, v[k]), mx = std::max(mx, v[k]);
    lo[k] = mn.ceil();
    hi[k] = mx.floor();
    if (lo[k] > hi[k]) return {};
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  for (;;) {
    if (accept(x)) out.push_back(x);
    std::size_t k = d;
    while (k-- > 0) {
      if (x[k] < hi[k]) {
        x[k] += 1;
        break;
      }
      x[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace detail

/// All integer points of P, in lexicographic order.
inline std::vector<IntVector> lattice_points(const LatticePolytope& p) {
  const auto& fs = p.facets();
  return detail::scan_box(p, [&](const IntVector& x) {
    return std::all_of(fs.begin(), fs.end(), [&](const Facet& f) { return Rational(dot(f.normal, x)) <= f.offset; });
  });
}

/// Integer points of the interior of P, in lexicographic order.
inline std::vector<IntVector> interior_lattice_points(const LatticePolytope& p) {
  const auto& fs = p.facets();
  return detail::scan_box(p, [&](const IntVector& x) {
    return std::all_of(fs.begin(), fs.end(), [&](const Facet& f) { return Rational(dot(f.normal, x)) < f.offset; });
  });
}

// ---------------------------------------------------------------------------
// Volume and width

/// d! times the Euclidean volume, so unimodular simplices have volume 1.
/// Lower-dimensional polytopes have volume 0.
inline Rational normalized_volume(const LatticePolytope& p) {
  if (!p.full_dimensional()) return Rational(0);
  const std::size_t d = p.dim();
  const auto& v = p.vertices();
  if (d == 0) return Rational(1);
  auto simplex_det = [&](const std::vector<std::size_t>& idx) {
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) m(i, j) = v[idx[j + 1]][i] - v[idx[0]][i];
    return abs(determinant(m));
  };
  if (p.is_simplex()) {
    std::vector<std::size_t> idx(d + 1);
    for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
    return simplex_det(idx);
  }
  if (d > 3) throw UnsupportedDimension("normalized_volume needs d <= 3 or a simplex");
  Rational vol(0);
  const auto& fs = p.facets();
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto& on = p.facet_vertices(f);
    if (std::find(on.begin(), on.end(), std::size_t{0}) != on.end()) continue;
    if (d == 1) {
      vol += simplex_det({0, on[0]});
    } else if (d == 2) {
      vol += simplex_det({0, on[0], on[1]});
    } else {
      for (std::size_t k = 1; k + 1 < on.size(); ++k) vol += simplex_det({0, on[0], on[k], on[k + 1]});
    }
  }
  return vol;
}

/// Width of P in direction z: max z·x - min z·x over P.
inline Rational width_in_direction(const LatticePolytope& p, const IntVector& z) {
  Rational mn = dot(z, p.vertices()[0]), mx = mn;
  for (const auto& v : p.vertices()) {
    const Rational t = dot(z, v);
    mn = std::min(mn, t);
    mx = std::max(mx, t);
  }
  return mx - mn;
}

struct WidthResult {
  Rational width;
  IntVector direction;
};

/// Lattice width with a minimizing primitive direction (first nonzero entry
/// positive; the lexicographically first minimizer in the search box).
inline WidthResult lattice_width(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  const auto& fs = p.facets();
  if (d > 3) throw UnsupportedDimension("lattice_width needs d <= 3");
  // largest cube c + r[-1,1]^d inside P
  LinearProgram lp(d + 1);
  for (std::size_t k = 0; k < d; ++k) lp.set_free(k);
  for (const auto& f : fs) {
    RatVector row(d + 1);
    Integer l1 = 0;
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = f.normal[k];
      l1 += abs(f.normal[k]);
    }
    row[d] = l1;
    lp.add_row(std::move(row), Sense::LessEqual, f.offset);
  }
  RatVector obj(d + 1, Rational(0));
  obj[d] = 1;
  lp.maximize(obj);
  const LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal || res.value.sign() <= 0)
    throw DegeneracyError("lattice_width: no inscribed cube");
  const Rational r = res.value;

  WidthResult best;
  for (std::size_t k = 0; k < d; ++k) {
    IntVector e(d, Integer(0));
    e[k] = 1;
    const Rational w = width_in_direction(p, e);
    if (k == 0 || w < best.width) best = {w, e};
  }
  const Integer bound = (best.width / (Rational(2) * r)).floor();
  IntVector z(d, -bound);
  for (;;) {
    std::size_t first = 0;
    while (first < d && z[first] == 0) ++first;
    if (first < d && z[first] > 0 && content(z) == 1) {
      const Rational w = width_in_direction(p, z);
      if (w < best.width) best = {w, z};
    }
    std::size_t k = d;
    while (k-- > 0) {
      if (z[k] < bound) {
        z[k] += 1;
        break;
      }
      z[k] = -bound;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Constructions

/// True iff 0 ∈ P (exact; LP membership when no facets are available).
inline bool contains_origin(const LatticePolytope& p) {
  const RatVector zero(p.dim(), Rational(0));
  if (p.has_hrep()) return p.contains(zero);
  std::vector<RatVector> pts = p.vertices();
  pts.push_back(zero);
  return std::find(p.vertices().begin(), p.vertices().end(), zero) != p.vertices().end() ||
         detail::in_hull_of_others(pts, pts.size() - 1);
}

inline LatticePolytope direct_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (!contains_origin(p) || !contains_origin(q)) throw DomainError("direct_sum needs both summands to contain 0");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) {
    RatVector x = v;
    x.resize(p.dim() + q.dim(), Rational(0));
    pts.push_back(std::move(x));
  }
  for (const auto& w : q.vertices()) {
    RatVector x(p.dim(), Rational(0));
    x.insert(x.end(), w.begin(), w.end());
    pts.push_back(std::move(x));
  }
  return LatticePolytope::from_points(pts);
}

inline LatticePolytope translate(const LatticePolytope& p, const RatVector& t) {
  if (t.size() != p.dim()) throw DimensionError("translation vector has wrong length");
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(v + t);
  if (!p.has_hrep()) return LatticePolytope::from_points(verts);
  std::vector<Facet> fs;
  for (const auto& f : p.facets()) fs.push_back({f.normal, f.offset + dot(f.normal, t)});
  return LatticePolytope::assemble(p.dim(), std::move(verts), std::move(fs));
}

inline LatticePolytope translate(const LatticePolytope& p, const IntVector& t) {
  return translate(p, to_rational(t));
}

inline LatticePolytope dilate(const LatticePolytope& p, const Rational& c) {
  if (c.sign() <= 0) throw DomainError("dilation factor must be positive");
  std::vector<RatVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(scaled(v, c));
  if (!p.has_hrep()) return LatticePolytope::from_points(verts);
  std::vector<Facet> fs;
  for (const auto& f : p.facets()) fs.push_back({f.normal, f.offset * c});
  return LatticePolytope::assemble(p.dim(), std::move(verts), std::move(fs));
}

/// Image under an integer linear map (rows of m act on column vectors).
inline LatticePolytope linear_image(const LatticePolytope& p, const IntMatrix& m) {
  if (m.cols() != p.dim()) throw DimensionError("linear map has wrong number of columns");
  const RatMatrix r = to_rational(m);
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(r * v);
  return LatticePolytope::from_points(pts);
}

/// Barycentric coordinates of 0 with respect to the simplex's vertices.
inline RatVector barycentric_of_origin(const LatticePolytope& s) {
  if (!s.is_simplex()) throw DomainError("barycentric_of_origin needs a full-dimensional simplex");
  const std::size_t d = s.dim();
  RatMatrix m(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = s.vertices()[j][i];
    m(d, j) = 1;
  }
  RatVector rhs(d + 1, Rational(0));
  rhs[d] = 1;
  auto beta = solve(m, rhs);
  if (!beta) throw DegeneracyError("degenerate simplex");
  for (const auto& b : *beta)
    if (b.sign() < 0) throw DomainError("origin is not contained in the simplex");
  return *beta;
}

/// Gauge of P at y: max_i a_i·y / b_i. Requires 0 in the interior of P.
inline Rational gauge(const std::vector<Facet>& facets, const RatVector& y) {
  Rational g;
  bool first = true;
  for (const auto& f : facets) {
    Rational t = f.eval(y) / f.offset;
    if (first || t > g) g = std::move(t);
    first = false;
  }
  return g;
}

}  // namespace covrad
