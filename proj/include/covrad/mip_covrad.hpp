#pragma once

/**
 * @file mip_covrad.hpp
 * @brief Covering radius of a rational polytope as a mixed-integer program.
 *
 * For P = {x : a_i·x <= b_i} with 0 in its interior, mu(P) is the optimum of
 *
 *   max mu  s.t.  a_i·x >= mu·b_i + a_i·l - M_il (1 - y_il)   for all i, l
 *                 sum_i y_il >= 1                               for all l
 *                 x in [0,1]^d,  0 <= mu <= mu_ub,  y binary,
 *
 * with l ranging over the translate set N_P. The solver is an exact
 * branch-and-bound that adds the disjunction of a translate only when the
 * current relaxation violates it: a node fixes, for some translates l, the
 * first facet i with a_i·(x - l) >= mu·b_i.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "covrad/errors.hpp"
#include "covrad/lp.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"
#include "covrad/simplex_covrad.hpp"

namespace covrad {

/// Integer points of [0,1]^d - mu_ub·P.
inline std::vector<IntVector> translate_set(const LatticePolytope& p, const Rational& mu_ub) {
  if (mu_ub.sign() < 0) throw DomainError("translate_set needs mu_ub >= 0");
  const std::size_t d = p.dim();
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RatVector c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = (mask >> k) & 1U ? 1 : 0;
    for (const auto& v : p.vertices()) pts.push_back(c - scaled(v, mu_ub));
  }
  return lattice_points(LatticePolytope::from_points(pts));
}

/// Largest number of vertex simplices examined by upper_bound_covrad.
inline constexpr std::size_t kMaxBoundSimplices = 5000;
/// Largest quotient-group order used for one inscribed simplex.
inline constexpr long long kMaxBoundGroupOrder = 1'000'000;

/// Certified upper bound on mu(P): the dimension bound and the covering
/// radii of inscribed vertex simplices of the smallest integral dilate cP,
/// scaled back by c.
inline Rational upper_bound_covrad(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw DegeneracyError("upper_bound_covrad needs a full-dimensional polytope");
  const std::size_t d = p.dim();
  const Integer c = lattice_scale(p);
  const LatticePolytope q = c == 1 ? p : dilate(p, Rational(c));
  Rational best(static_cast<long long>(d));
  const auto& v = q.vertices();
  const std::size_t n = v.size();
  std::vector<std::size_t> pick(d + 1);
  for (std::size_t i = 0; i <= d; ++i) pick[i] = i;
  std::size_t examined = 0;
  while (examined < kMaxBoundSimplices) {
    std::vector<RatVector> pts;
    for (auto i : pick) pts.push_back(v[i]);
    RatMatrix b(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) b(i, j) = pts[j + 1][i] - pts[0][i];
    const Rational vol = abs(determinant(b));
    ++examined;
    if (vol.sign() > 0) {
      Integer order = 1;
      for (std::size_t k = 1; k < d; ++k) order *= vol.numerator();
      if (order <= Integer(kMaxBoundGroupOrder)) {
        const Rational m = covering_radius_simplex(LatticePolytope::from_points(pts));
        if (m < best) best = m;
      }
    }
    // next (d+1)-subset in lexicographic order
    std::size_t k = d + 1;
    while (k-- > 0 && pick[k] == n - (d + 1) + k) {
    }
    if (k == static_cast<std::size_t>(-1)) break;
    ++pick[k];
    for (std::size_t j = k + 1; j <= d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best * Rational(c);
}

/// M = mu_ub·b_i + a_i·l - min_{x in [0,1]^d} a_i·x.
inline Rational big_M(const Facet& f, const IntVector& l, const Rational& mu_ub) {
  Integer box_min = 0;
  for (const auto& a : f.normal)
    if (a < 0) box_min += a;
  return mu_ub * f.offset + Rational(dot(f.normal, l)) - Rational(box_min);
}

/// The big-M program for a polytope with 0 in its interior.
struct MipInstance {
  std::size_t d = 0;
  std::vector<Facet> facets;         ///< b_i > 0
  std::vector<IntVector> translates; ///< N_P
  Rational mu_ub;
  std::vector<std::vector<Rational>> bigM;  ///< bigM[i][t] for facet i, translate t

  /// Checks every constraint of the program for the point (mu, x, y).
  bool feasible(const Rational& mu, const RatVector& x, const std::vector<std::vector<int>>& y) const {
    if (mu.sign() < 0 || mu > mu_ub) return false;
    for (const auto& xi : x)
      if (xi.sign() < 0 || xi > Rational(1)) return false;
    for (std::size_t t = 0; t < translates.size(); ++t) {
      int active = 0;
      for (std::size_t i = 0; i < facets.size(); ++i) {
        active += y[i][t];
        const Rational lhs = facets[i].eval(x);
        const Rational rhs =
            mu * facets[i].offset + Rational(dot(facets[i].normal, translates[t])) - bigM[i][t] * Rational(1 - y[i][t]);
        if (lhs < rhs) return false;
      }
      if (active < 1) return false;
    }
    return true;
  }
};

/// Builds the program for P, which must contain 0 in its interior.
inline MipInstance make_mip_instance(const LatticePolytope& p, const Rational& mu_ub) {
  MipInstance inst;
  inst.d = p.dim();
  inst.facets = p.facets();
  for (const auto& f : inst.facets)
    if (f.offset.sign() <= 0) throw DomainError("MIP needs the origin in the interior");
  inst.mu_ub = mu_ub;
  inst.translates = translate_set(p, mu_ub);
  inst.bigM.assign(inst.facets.size(), {});
  for (std::size_t i = 0; i < inst.facets.size(); ++i)
    for (const auto& l : inst.translates) inst.bigM[i].push_back(big_M(inst.facets[i], l, mu_ub));
  return inst;
}

struct MipResult {
  Rational mu;
  RatVector witness;  ///< last-covered point, reduced into [0,1)^d
  Rational mu_ub;
  std::size_t translates = 0;
  std::size_t nodes = 0;
};

/// Component-wise fractional part.
inline RatVector reduce_mod_lattice(const RatVector& x) {
  RatVector r(x);
  for (auto& v : r) v -= Rational(v.floor());
  return r;
}

/// Vertex centroid, used to move the origin into the interior.
inline RatVector vertex_centroid(const LatticePolytope& p) {
  RatVector c(p.dim(), Rational(0));
  for (const auto& v : p.vertices()) c = c + v;
  return scaled(c, Rational(1) / Rational(static_cast<long long>(p.num_vertices())));
}

namespace detail {

struct BranchFix {
  std::size_t translate;
  std::size_t facet;
};

struct BnbNode {
  Rational bound;
  std::vector<std::size_t> path;  ///< branch indices from the root
  std::vector<BranchFix> fixes;
};

struct BnbOrder {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.path > b.path;  // lexicographically smaller path first
  }
};

/// Node relaxation in variables (mu, x): maximize mu over the box, mu <= mu_ub
/// and the fixed disjunct rows.
inline LpResult solve_node(const MipInstance& inst, const std::vector<BranchFix>& fixes) {
  const std::size_t d = inst.d;
  LinearProgram lp(d + 1);
  RatVector obj(d + 1, Rational(0));
  obj[0] = 1;
  lp.maximize(obj);
  {
    RatVector row(d + 1, Rational(0));
    row[0] = 1;
    lp.add_row(row, Sense::LessEqual, inst.mu_ub);
  }
  for (std::size_t k = 0; k < d; ++k) {
    RatVector row(d + 1, Rational(0));
    row[k + 1] = 1;
    lp.add_row(row, Sense::LessEqual, Rational(1));
  }
  for (const auto& fx : fixes) {
    const IntVector& l = inst.translates[fx.translate];
    for (std::size_t j = 0; j <= fx.facet; ++j) {
      const Facet& f = inst.facets[j];
      RatVector row(d + 1);
      row[0] = -f.offset;
      for (std::size_t k = 0; k < d; ++k) row[k + 1] = f.normal[k];
      // facet fx.facet violated, earlier facets satisfied
      lp.add_row(std::move(row), j == fx.facet ? Sense::GreaterEqual : Sense::LessEqual,
                 Rational(dot(f.normal, l)));
    }
  }
  return lp.solve();
}

}  // namespace detail

/// Exact branch-and-bound for a prepared instance.
inline MipResult solve_mip(const MipInstance& inst) {
  const std::size_t d = inst.d, m = inst.facets.size();
  MipResult res;
  res.mu_ub = inst.mu_ub;
  res.translates = inst.translates.size();
  res.mu = -1;

  std::priority_queue<detail::BnbNode, std::vector<detail::BnbNode>, detail::BnbOrder> open;
  open.push({inst.mu_ub, {}, {}});
  while (!open.empty()) {
    detail::BnbNode node = open.top();
    open.pop();
    if (node.bound <= res.mu) break;
    ++res.nodes;
    const LpResult lp = detail::solve_node(inst, node.fixes);
    if (lp.status == LpStatus::Unbounded) throw InternalError("node relaxation unbounded");
    if (lp.status == LpStatus::Infeasible) {
      if (node.fixes.empty()) throw InternalError("root relaxation infeasible");
      continue;
    }
    const Rational mu_star = lp.x[0];
    if (mu_star <= res.mu) continue;
    const RatVector x(lp.x.begin() + 1, lp.x.end());

    // covering value of x over the translate set
    std::optional<std::size_t> closest;
    Rational value;
    for (std::size_t t = 0; t < inst.translates.size(); ++t) {
      const Rational g = gauge(inst.facets, x - to_rational(inst.translates[t]));
      if (!closest || g < value) {
        closest = t;
        value = g;
      }
    }
    if (!closest || value > inst.mu_ub) throw InternalError("covering radius exceeds the certified upper bound");
    if (value > res.mu) {
      res.mu = value;
      res.witness = x;
    }
    if (value >= mu_star) continue;

    for (std::size_t i = 0; i < m; ++i) {
      detail::BnbNode child{mu_star, node.path, node.fixes};
      child.path.push_back(i);
      child.fixes.push_back({*closest, i});
      open.push(std::move(child));
    }
  }
  if (res.mu.sign() < 0) throw InternalError("branch-and-bound found no feasible point");

  // certificate: the witness together with a y assignment satisfies the full program
  std::vector<std::vector<int>> y(m, std::vector<int>(inst.translates.size(), 0));
  for (std::size_t t = 0; t < inst.translates.size(); ++t) {
    const RatVector rel = res.witness - to_rational(inst.translates[t]);
    for (std::size_t i = 0; i < m; ++i)
      if (inst.facets[i].eval(rel) >= res.mu * inst.facets[i].offset) {
        y[i][t] = 1;
        break;
      }
  }
  if (!inst.feasible(res.mu, res.witness, y)) throw InternalError("optimal point fails the big-M program");
  (void)d;
  return res;
}

/// Covering radius of a full-dimensional rational polytope (d <= 3) by the
/// MIP; inputs without the origin in the interior are translated by their
/// vertex centroid c first. An uncovered point x of P - c maps to the
/// uncovered point x + mu c of P.
inline MipResult covering_radius_mip(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw DegeneracyError("covering_radius_mip needs a full-dimensional polytope");
  if (p.dim() > 3) throw UnsupportedDimension("covering_radius_mip needs d <= 3");
  RatVector shift(p.dim(), Rational(0));
  const bool interior = std::all_of(p.facets().begin(), p.facets().end(),
                                    [](const Facet& f) { return f.offset.sign() > 0; });
  if (!interior) shift = vertex_centroid(p);
  const LatticePolytope q = interior ? p : translate(p, RatVector(scaled(shift, Rational(-1))));
  const Rational ub = upper_bound_covrad(q);
  MipResult res = solve_mip(make_mip_instance(q, ub));
  res.witness = reduce_mod_lattice(res.witness + scaled(shift, res.mu));
  return res;
}

// ---------------------------------------------------------------------------
// Last-covered points and needed facets

struct LastCovered {
  std::vector<RatVector> points;  ///< representatives in [0,1)^d, sorted
  bool partial = false;           ///< enumeration stopped at the cap
};

inline constexpr std::size_t kDefaultLastCoveredCap = 64;

namespace detail {

struct HalfSpace {
  RatVector a;  // in x-space
  Rational b;   // a·x <= b
};

/// Vertices of {x : h.a·x <= h.b for all h} (d <= 3) by solving d-subsets.
inline std::vector<RatVector> polytope_vertices(const std::vector<HalfSpace>& hs, std::size_t d) {
  std::vector<RatVector> out;
  const std::size_t n = hs.size();
  if (n < d) return out;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    RatMatrix a(d, d);
    RatVector b(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) a(r, k) = hs[pick[r]].a[k];
      b[r] = hs[pick[r]].b;
    }
    if (auto x = solve(a, b)) {
      const bool ok = std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return dot(h.a, *x) <= h.b; });
      if (ok && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
    }
    std::size_t k = d;
    while (k-- > 0 && pick[k] == n - d + k) {
    }
    if (k == static_cast<std::size_t>(-1)) break;
    ++pick[k];
    for (std::size_t j = k + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Removes halfspaces that are implied by the others (LP test).
inline std::vector<HalfSpace> irredundant(std::vector<HalfSpace> hs, std::size_t d) {
  for (std::size_t k = 0; k < hs.size();) {
    LinearProgram lp(d);
    for (std::size_t j = 0; j < d; ++j) lp.set_free(j);
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (i != k) lp.add_row(hs[i].a, Sense::LessEqual, hs[i].b);
    lp.maximize(hs[k].a);
    const LpResult r = lp.solve();
    if (r.status == LpStatus::Optimal && r.value <= hs[k].b)
      hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return hs;
}

}  // namespace detail

/// Points x with x not in int(mu P) + Z^d, enumerated as vertices of the
/// cells of the translated-facet arrangement inside [0,1]^d that avoid every
/// open translate, reduced mod Z^d.
inline LastCovered last_covered_points(const LatticePolytope& p, const Rational& mu,
                                       std::size_t cap = kDefaultLastCoveredCap) {
  if (p.dim() > 3) throw UnsupportedDimension("last_covered_points needs d <= 3");
  const std::size_t d = p.dim();
  RatVector shift(d, Rational(0));
  const bool interior = std::all_of(p.facets().begin(), p.facets().end(),
                                    [](const Facet& f) { return f.offset.sign() > 0; });
  if (!interior) shift = vertex_centroid(p);
  const LatticePolytope q = interior ? p : translate(p, RatVector(scaled(shift, Rational(-1))));
  const auto& fs = q.facets();
  const std::vector<IntVector> trans = translate_set(q, mu);
  const std::size_t m = fs.size();

  using detail::HalfSpace;
  std::vector<HalfSpace> box;
  for (std::size_t k = 0; k < d; ++k) {
    RatVector e(d, Rational(0));
    e[k] = 1;
    box.push_back({e, Rational(1)});
    box.push_back({scaled(e, Rational(-1)), Rational(0)});
  }

  // is some point of the region strictly inside mu·P + l?  (max s with a_i(x-l) + s <= mu b_i)
  auto meets_interior = [&](const std::vector<HalfSpace>& region, const IntVector& l) {
    LinearProgram lp(d + 1);
    for (std::size_t j = 0; j < d; ++j) lp.set_free(j);
    for (const auto& h : region) {
      RatVector row = h.a;
      row.push_back(Rational(0));
      lp.add_row(row, Sense::LessEqual, h.b);
    }
    for (const auto& f : fs) {
      RatVector row = to_rational(f.normal);
      row.push_back(Rational(1));
      lp.add_row(row, Sense::LessEqual, mu * f.offset + Rational(dot(f.normal, l)));
    }
    RatVector obj(d + 1, Rational(0));
    obj[d] = 1;
    RatVector row(d + 1, Rational(0));
    row[d] = 1;
    lp.add_row(row, Sense::LessEqual, Rational(1));
    lp.maximize(obj);
    const LpResult r = lp.solve();
    return r.status == LpStatus::Optimal && r.value.sign() > 0;
  };

  LastCovered out;
  std::set<RatVector> found;
  std::vector<std::vector<HalfSpace>> stack{box};
  while (!stack.empty() && !out.partial) {
    std::vector<HalfSpace> region = std::move(stack.back());
    stack.pop_back();
    // feasibility
    {
      LinearProgram lp(d);
      for (std::size_t j = 0; j < d; ++j) lp.set_free(j);
      for (const auto& h : region) lp.add_row(h.a, Sense::LessEqual, h.b);
      lp.maximize(RatVector(d, Rational(0)));
      if (lp.solve().status != LpStatus::Optimal) continue;
    }
    std::optional<std::size_t> hit;
    for (std::size_t t = 0; t < trans.size() && !hit; ++t)
      if (meets_interior(region, trans[t])) hit = t;
    if (!hit) {
      for (const auto& v : detail::polytope_vertices(detail::irredundant(region, d), d)) {
        found.insert(reduce_mod_lattice(v + scaled(shift, mu)));
        if (found.size() > cap) {
          out.partial = true;
          break;
        }
      }
      continue;
    }
    const IntVector& l = trans[*hit];
    for (std::size_t i = m; i-- > 0;) {
      std::vector<HalfSpace> child = region;
      for (std::size_t j = 0; j <= i; ++j) {
        const RatVector a = to_rational(fs[j].normal);
        const Rational rhs = mu * fs[j].offset + Rational(dot(fs[j].normal, l));
        if (j == i)
          child.push_back({scaled(a, Rational(-1)), -rhs});
        else
          child.push_back({a, rhs});
      }
      stack.push_back(std::move(child));
    }
  }
  out.points.assign(found.begin(), found.end());
  if (out.points.size() > cap) out.points.resize(cap);
  return out;
}

/// Facets F of P with p - l in relint(mu F) for some integer l.
inline std::vector<std::size_t> needed_facets(const LatticePolytope& p, const RatVector& pt, const Rational& mu) {
  if (pt.size() != p.dim()) throw DimensionError("point has wrong dimension");
  const auto& fs = p.facets();
  const RatVector base = reduce_mod_lattice(pt);
  // translates l with base - l in mu·P, where base is in [0,1)^d
  const std::size_t d = p.dim();
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(base - scaled(v, mu));
  std::vector<IntVector> cand;
  {
    IntVector lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      Rational mn = pts[0][k], mx = mn;
      for (const auto& x : pts) mn = std::min(mn, x[k]), mx = std::max(mx, x[k]);
      lo[k] = mn.ceil();
      hi[k] = mx.floor();
    }
    IntVector l = lo;
    bool empty = false;
    for (std::size_t k = 0; k < d; ++k) empty = empty || lo[k] > hi[k];
    while (!empty) {
      cand.push_back(l);
      std::size_t k = d;
      while (k-- > 0) {
        if (l[k] < hi[k]) {
          l[k] += 1;
          break;
        }
        l[k] = lo[k];
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  std::vector<std::size_t> needed;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& l : cand) {
      const RatVector y = base - to_rational(l);
      bool ok = fs[i].eval(y) == mu * fs[i].offset;
      for (std::size_t j = 0; j < fs.size() && ok; ++j)
        if (j != i) ok = fs[j].eval(y) < mu * fs[j].offset;
      if (ok) {
        needed.push_back(i);
        break;
      }
    }
  }
  return needed;
}

}  // namespace covrad
