#pragma once

/**
 * @file catalog.hpp
 * @brief Named polytopes with stored covering radii, and the drivers that
 * check them.
 *
 * The 26 minimal non-hollow lattice 3-polytopes with one interior lattice
 * point are stored as vertex matrices (columns are vertices). Families:
 *   M_k(a)      conv{(-1,0), (1,a), (0,k+1)}
 *   M_k(a,b)    conv{(1,0,0), (-1,0,a), (0,1,k+1), (0,-1,k+1-b)}
 *   Delta_v     conv{-v, e_1, ..., e_d}
 *   kite(k,i)   conv{(0,0), (0,k+1), (-1,i), (1,i)}
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "covrad/covering_radius.hpp"
#include "covrad/errors.hpp"
#include "covrad/functionals.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"
#include "covrad/simplex_covrad.hpp"

namespace covrad {

struct CatalogEntry {
  std::string name;
  std::string group;  ///< "tetrahedra" or "other"
  IntMatrix columns;  ///< vertices as columns
  Rational expected_mu;
  std::size_t interior_points_expected = 1;
  std::vector<Integer> volume_vector;  ///< sorted; empty for non-simplices

  LatticePolytope polytope() const { return LatticePolytope::from_columns(columns); }
  bool maximal() const { return expected_mu == Rational(3, 2); }
};

namespace detail {

inline std::vector<Integer> ints(std::initializer_list<long long> l) {
  std::vector<Integer> v;
  for (auto x : l) v.emplace_back(x);
  return v;
}

inline CatalogEntry tet(std::string name, IntMatrix m, Rational mu, std::initializer_list<long long> vv) {
  return {std::move(name), "tetrahedra", std::move(m), mu, 1, ints(vv)};
}

inline CatalogEntry other(std::string name, IntMatrix m, Rational mu) {
  return {std::move(name), "other", std::move(m), mu, 1, {}};
}

/// Runs body(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written to slot i so the outcome is independent of scheduling.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n);
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline RatVector parse_list(const std::string& s) {
  RatVector out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string normalize_name(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
      s.replace(pos, from.size(), to);
  };
  replace_all("+", "\xE2\x8A\x95");  // ⊕
  replace_all("^o", "\xC2\xB0");     // °
  replace_all("Delta", "\xCE\x94");  // Δ
  return s;
}

inline LatticePolytope rat_hull(std::initializer_list<std::initializer_list<long long>> pts) {
  std::vector<RatVector> v;
  for (const auto& p : pts) {
    RatVector x;
    for (auto c : p) x.emplace_back(c);
    v.push_back(std::move(x));
  }
  return LatticePolytope::from_points(v);
}

}  // namespace detail

/// The 16 tetrahedra and 10 other minimal polytopes, in table order.
inline const std::vector<CatalogEntry>& table_entries() {
  using detail::other;
  using detail::tet;
  static const std::vector<CatalogEntry> entries = {
      tet("S(1_4)", {{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}}, Rational(3, 2), {1, 1, 1, 1}),
      tet("(I⊕I')'⊕I", {{-2, 2, 0, 0}, {-2, 1, 1, 0}, {-1, 0, 0, 1}}, Rational(3, 2), {2, 2, 2, 2}),
      tet("T(5,5,5,5)", {{-5, 5, 0, 0}, {-3, 2, 1, 0}, {-2, 1, 0, 1}}, Rational(9, 10), {5, 5, 5, 5}),
      tet("T(1,1,1,2)", {{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-2, 0, 0, 1}}, Rational(7, 5), {1, 1, 1, 2}),
      tet("S(1_3)⊕I'", {{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-3, 0, 0, 1}}, Rational(3, 2), {1, 1, 1, 3}),
      tet("S(1_3)'⊕I", {{-1, 1, 0, 0}, {-2, 0, 1, 0}, {-2, 0, 0, 1}}, Rational(3, 2), {1, 1, 2, 2}),
      tet("T(1,1,2,3)", {{-1, 1, 0, 0}, {-2, 0, 1, 0}, {-3, 0, 0, 1}}, Rational(9, 7), {1, 1, 2, 3}),
      tet("(I⊕I')°⊕I'", {{-1, 1, 0, 0}, {-2, 0, 1, 0}, {-4, 0, 0, 1}}, Rational(3, 2), {1, 1, 2, 4}),
      tet("Pyr_3(S(1_3))", {{-1, 1, 0, 0}, {-3, 0, 1, 0}, {-4, 0, 0, 1}}, Rational(11, 9), {1, 1, 3, 4}),
      tet("I'⊕M_2(1)", {{-1, 1, 0, 0}, {-3, 0, 1, 0}, {-5, 0, 0, 1}}, Rational(13, 10), {1, 1, 3, 5}),
      tet("I'⊕M_2(0)", {{-1, 1, 0, 0}, {-4, 0, 1, 0}, {-6, 0, 0, 1}}, Rational(4, 3), {1, 1, 4, 6}),
      tet("T(1,2,3,5)", {{-2, 1, 0, 0}, {-3, 0, 1, 0}, {-5, 0, 0, 1}}, Rational(12, 11), {1, 2, 3, 5}),
      tet("T(1,3,4,5)", {{-3, 1, 0, 0}, {-4, 0, 1, 0}, {-5, 0, 0, 1}}, Rational(14, 13), {1, 3, 4, 5}),
      tet("Pyr_4(S(1_3))", {{-1, 1, 0, 0}, {-3, 0, 2, 0}, {-4, 0, 1, 1}}, Rational(7, 6), {2, 2, 3, 5}),
      tet("T(2,3,5,7)", {{-3, 2, 0, 0}, {-4, 1, 1, 0}, {-5, 1, 0, 1}}, Rational(1), {2, 3, 5, 7}),
      tet("T(3,4,5,7)", {{-4, 3, 0, 0}, {-3, 1, 1, 0}, {-5, 2, 0, 1}}, Rational(18, 19), {3, 4, 5, 7}),

      other("S(1_3)⊕I", {{1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, 0, 1, -1, 0}}, Rational(3, 2)),
      other("I⊕Q_4", {{1, 0, 0, -2, -1}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}}, Rational(4, 3)),
      other("Bipyr_3(S(1_3)⊕I)", {{1, 0, -1, 1, -1}, {0, 1, -1, 2, -2}, {0, 0, 0, 3, -3}}, Rational(17, 18)),
      other("I⊕I⊕I'", {{1, 0, 0, -2, -2}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}}, Rational(3, 2)),
      other("(I⊕I')°⊕I", {{1, 0, 0, 0, -2}, {0, 1, 0, 0, -1}, {0, 0, 1, -1, 0}}, Rational(3, 2)),
      other("Bipyr_2(I⊕I⊕I')", {{1, 0, -2, 1, -3}, {0, 1, -1, 1, -1}, {0, 0, 0, 2, -2}}, Rational(7, 8)),
      other("Bipyr_2((I⊕I')°⊕I)", {{1, 0, -2, 1, -1}, {0, 1, -1, 1, -1}, {0, 0, 0, 2, -2}}, Rational(1)),
      other("I⊕I⊕I", {{1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, 0, -1}}, Rational(3, 2)),
      other("Pyr_3([0,1]^2)", {{1, 0, 0, -1, 1}, {0, 1, 0, -1, 1}, {0, 0, 1, 0, -1}}, Rational(4, 3)),
      other("Bipyr_2(I⊕I⊕I)", {{1, 0, -1, 0, 1, -1}, {0, 1, 0, -1, 1, -1}, {0, 0, 0, 0, 2, -2}}, Rational(3, 4)),
  };
  return entries;
}

inline const CatalogEntry* find_table_entry(const std::string& name) {
  const std::string key = detail::normalize_name(name);
  for (const auto& e : table_entries())
    if (e.name == key) return &e;
  return nullptr;
}

/// M_k(a) = conv{(-1,0), (1,a), (0,k+1)}.
inline LatticePolytope family_M2(long long k, long long a) {
  if (k < 1 || (a != 0 && a != 1)) throw DomainError("M_k(a) needs k >= 1 and a in {0,1}");
  return detail::rat_hull({{-1, 0}, {1, a}, {0, k + 1}});
}

/// M_k(a,b) = conv{(1,0,0), (-1,0,a), (0,1,k+1), (0,-1,k+1-b)}.
inline LatticePolytope family_M3(long long k, long long a, long long b) {
  if (k < 1 || (a != 0 && a != 1) || (b != 0 && b != 1))
    throw DomainError("M_k(a,b) needs k >= 1 and a, b in {0,1}");
  return detail::rat_hull({{1, 0, 0}, {-1, 0, a}, {0, 1, k + 1}, {0, -1, k + 1 - b}});
}

/// Delta_v = conv{-v, e_1, ..., e_d}.
inline LatticePolytope family_delta(const RatVector& v) {
  if (v.empty()) throw DimensionError("Delta_v needs d >= 1");
  std::vector<RatVector> pts;
  pts.push_back(scaled(v, Rational(-1)));
  for (std::size_t i = 0; i < v.size(); ++i) {
    RatVector e(v.size(), Rational(0));
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return LatticePolytope::from_points(pts);
}

/// conv{(0,0), (0,k+1), (-1,i), (1,i)}: the segment [0,k+1] plus a unit
/// segment at height i. Has k interior lattice points.
inline LatticePolytope family_kite(long long k, long long i) {
  if (k < 1 || i < 0 || i > k + 1) throw DomainError("kite needs k >= 1 and 0 <= i <= k+1");
  return detail::rat_hull({{0, 0}, {0, k + 1}, {-1, i}, {1, i}});
}

/// Builds a polytope by name. Accepts the table names ('+' may stand for
/// '⊕', "^o" for '°'), the pieces I, I', I⊕I, I⊕I', S(1_3), S'(1_3),
/// (I⊕I')°, (I⊕I')', Q_4, hexagon, M_k(a)° (M_k(a) moved down by one), and
/// the parametric forms S(1_n), S(a_0,...,a_d), M_k(a), M_k(a,b),
/// Δ_(v_1,...,v_d), kite(k,i), [p,q].
inline LatticePolytope build(const std::string& raw) {
  const std::string name = detail::normalize_name(raw);
  if (const CatalogEntry* e = find_table_entry(name)) return e->polytope();
  using detail::rat_hull;
  if (name == "I") return rat_hull({{-1}, {1}});
  if (name == "I'") return rat_hull({{0}, {2}});
  if (name == "I⊕I") return rat_hull({{-1, 0}, {1, 0}, {0, -1}, {0, 1}});
  if (name == "I⊕I'") return rat_hull({{-1, 0}, {1, 0}, {0, 0}, {0, 2}});
  if (name == "S(1_3)") return rat_hull({{-1, -1}, {1, 0}, {0, 1}});
  if (name == "S'(1_3)") return rat_hull({{0, 0}, {2, 1}, {1, 2}});
  if (name == "(I⊕I')°") return rat_hull({{0, 1}, {-1, -1}, {1, -1}});
  if (name == "(I⊕I')'") return rat_hull({{0, 0}, {-1, -2}, {1, -2}});
  if (name == "Q_4") return rat_hull({{2, 0}, {1, 1}, {0, 0}, {0, -1}});
  if (name == "hexagon") return rat_hull({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});

  std::smatch m;
  static const std::regex s_ones(R"(S\(1_(\d+)\))");
  static const std::regex s_params(R"(S\(([-0-9/,]+)\))");
  static const std::regex m2(R"(M_(\d+)\((\d)\)((?:°)?))");
  static const std::regex m3(R"(M_(\d+)\((\d),(\d)\))");
  static const std::regex delta(R"(Δ_?\(([-0-9/,]+)\))");
  static const std::regex kite(R"(kite\((\d+),(\d+)\))");
  static const std::regex segment(R"(\[(-?\d+),(-?\d+)\])");
  if (std::regex_match(name, m, s_ones)) {
    const auto n = std::stoul(m[1]);
    if (n < 2) throw DomainError("S(1_n) needs n >= 2");
    return simplex_S(RatVector(n, Rational(1)));
  }
  if (std::regex_match(name, m, s_params)) return simplex_S(detail::parse_list(m[1]));
  if (std::regex_match(name, m, m2)) {
    const LatticePolytope p = family_M2(std::stoll(m[1]), std::stoll(m[2]));
    return m[3].length() > 0 ? translate(p, IntVector{Integer(0), Integer(-1)}) : p;
  }
  if (std::regex_match(name, m, m3)) return family_M3(std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]));
  if (std::regex_match(name, m, delta)) return family_delta(detail::parse_list(m[1]));
  if (std::regex_match(name, m, kite)) return family_kite(std::stoll(m[1]), std::stoll(m[2]));
  if (std::regex_match(name, m, segment)) {
    const long long a = std::stoll(m[1]), b = std::stoll(m[2]);
    if (a >= b) throw DomainError("segment [p,q] needs p < q");
    return rat_hull({{a}, {b}});
  }
  throw LookupError("unknown polytope name '" + raw + "'");
}

// ---------------------------------------------------------------------------
// Direct-sum decompositions

struct SumDecomposition {
  std::string left;
  std::string right;
  std::optional<std::string> table_name;  ///< table entry it is equivalent to
};

/// Decompositions P⊕Q of total dimension <= 3 whose summands are catalog
/// pieces.
inline std::vector<SumDecomposition> sum_decompositions() {
  return {
      {"I", "I", std::nullopt},
      {"I", "I'", std::nullopt},
      {"I", "[0,3]", std::nullopt},
      {"I", "[0,4]", std::nullopt},
      {"S(1_3)", "I", "S(1_3)⊕I"},
      {"S'(1_3)", "I", "S(1_3)'⊕I"},
      {"S(1_3)", "I'", "S(1_3)⊕I'"},
      {"I⊕I", "I", "I⊕I⊕I"},
      {"I⊕I", "I'", "I⊕I⊕I'"},
      {"(I⊕I')°", "I", "(I⊕I')°⊕I"},
      {"(I⊕I')'", "I", "(I⊕I')'⊕I"},
      {"(I⊕I')°", "I'", "(I⊕I')°⊕I'"},
      {"I", "Q_4", "I⊕Q_4"},
      {"I'", "M_2(1)°", "I'⊕M_2(1)"},
      {"I'", "M_2(0)°", "I'⊕M_2(0)"},
  };
}

/// The nine direct sums of covering radius 3/2 in dimension three.
inline const std::vector<std::string>& maximal_3d_names() {
  static const std::vector<std::string> names = {
      "S(1_4)",     "S(1_3)⊕I",   "S(1_3)'⊕I",   "S(1_3)⊕I'",   "I⊕I⊕I",
      "I⊕I⊕I'",     "(I⊕I')°⊕I",  "(I⊕I')'⊕I",   "(I⊕I')°⊕I'",
  };
  return names;
}

/// The three polygons of covering radius 1.
inline const std::vector<std::string>& maximal_2d_names() {
  static const std::vector<std::string> names = {"S(1_3)", "I⊕I", "I⊕I'"};
  return names;
}

// ---------------------------------------------------------------------------
// Table verification

struct TableRow {
  std::string name;
  std::string group;
  Rational expected;
  Rational computed;
  Method method = Method::Auto;
  std::size_t interior_points = 0;
  std::vector<Integer> volume_vector;
  bool ok = false;  ///< value, interior count and volume vector all match
};

struct TableReport {
  std::vector<TableRow> rows;
  std::size_t maximal_count = 0;  ///< rows at exactly 3/2
  std::size_t smaller_count = 0;  ///< rows strictly below 3/2
  bool ok = false;
};

/// Graph method for tetrahedra, MIP for the others. `only` is "" (all),
/// "tetrahedra" or "other".
inline TableReport verify_tables(const std::string& only = "", unsigned jobs = 1) {
  if (!only.empty() && only != "tetrahedra" && only != "other")
    throw DomainError("filter must be 'tetrahedra' or 'other'");
  std::vector<const CatalogEntry*> picked;
  for (const auto& e : table_entries())
    if (only.empty() || e.group == only) picked.push_back(&e);

  TableReport rep;
  rep.rows.resize(picked.size());
  detail::parallel_for(picked.size(), jobs, [&](std::size_t i) {
    const CatalogEntry& e = *picked[i];
    const LatticePolytope p = e.polytope();
    TableRow r;
    r.name = e.name;
    r.group = e.group;
    r.expected = e.expected_mu;
    r.method = e.group == "tetrahedra" ? Method::Graph : Method::Mip;
    r.computed = covering_radius(p, r.method).mu;
    r.interior_points = interior_lattice_points(p).size();
    bool vv_ok = true;
    if (!e.volume_vector.empty()) {
      r.volume_vector = volume_vector(p);
      vv_ok = r.volume_vector == e.volume_vector;
    }
    r.ok = r.computed == r.expected && r.interior_points == e.interior_points_expected && vv_ok;
    rep.rows[i] = std::move(r);
  });
  rep.ok = true;
  const Rational three_halves(3, 2);
  for (const auto& r : rep.rows) {
    rep.ok = rep.ok && r.ok;
    if (r.computed == three_halves) ++rep.maximal_count;
    if (r.computed < three_halves) ++rep.smaller_count;
  }
  if (only.empty()) rep.ok = rep.ok && rep.maximal_count == 9 && rep.smaller_count == 17;
  return rep;
}

// ---------------------------------------------------------------------------
// Fingerprints and the d/2 bound

/// Unimodular invariants used to recognize the equality cases.
struct Fingerprint {
  std::size_t interior_points = 0;
  Rational volume;
  Rational width;
  std::size_t facets = 0;
  Rational mu;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const LatticePolytope& p, const Rational& mu) {
  return {interior_lattice_points(p).size(), normalized_volume(p), lattice_width(p).width, p.facets().size(), mu};
}

namespace detail {

inline const std::vector<Fingerprint>& maximal_fingerprints(std::size_t d) {
  auto make = [](const std::vector<std::string>& names) {
    std::vector<Fingerprint> out;
    for (const auto& n : names) {
      const LatticePolytope p = build(n);
      out.push_back(fingerprint(p, covering_radius_value(p)));
    }
    return out;
  };
  static const std::vector<Fingerprint> two = make(maximal_2d_names());
  static const std::vector<Fingerprint> three = make(maximal_3d_names());
  if (d == 2) return two;
  if (d == 3) return three;
  throw UnsupportedDimension("equality cases are catalogued for d = 2, 3 only");
}

}  // namespace detail

struct ConjACheck {
  Rational mu;
  Rational bound;  ///< d/2
  bool holds = false;
  bool equality = false;
  bool catalog_match = false;  ///< fingerprint equals one of the catalogued equality cases
  bool consistent = false;     ///< equality == catalog_match
};

/// mu(P) <= d/2 for a non-hollow lattice polytope, d <= 3.
inline ConjACheck check_conjA(const LatticePolytope& p) {
  if (!p.is_lattice() || !p.full_dimensional()) throw DomainError("expected a full-dimensional lattice polytope");
  if (p.dim() > 3) throw UnsupportedDimension("check_conjA supports d <= 3");
  if (interior_lattice_points(p).empty()) throw DomainError("polytope is hollow");
  ConjACheck c;
  c.mu = covering_radius_value(p);
  c.bound = Rational(static_cast<long long>(p.dim()), 2);
  c.holds = c.mu <= c.bound;
  c.equality = c.mu == c.bound;
  if (p.dim() >= 2) {
    const Fingerprint f = fingerprint(p, c.mu);
    const auto& known = detail::maximal_fingerprints(p.dim());
    c.catalog_match = std::find(known.begin(), known.end(), f) != known.end();
  } else {
    c.catalog_match = normalized_volume(p) == Rational(2);
  }
  c.consistent = c.equality == c.catalog_match;
  return c;
}

struct ConjDCheck {
  std::size_t k = 0;  ///< interior lattice points
  Rational mu;
  Rational bound;  ///< 1/2 + 1/(k+1)
  bool holds = false;
  bool equality = false;
};

/// mu(P) <= 1/2 + 1/(k+1) for a lattice polygon with k >= 2 interior points.
inline ConjDCheck check_conjD_dim2(const LatticePolytope& p) {
  if (p.dim() != 2 || !p.is_lattice() || !p.full_dimensional())
    throw DomainError("expected a lattice polygon");
  ConjDCheck c;
  c.k = interior_lattice_points(p).size();
  if (c.k < 2) throw DomainError("polygon needs at least two interior lattice points");
  c.mu = covering_radius(p, Method::Mip).mu;
  c.bound = Rational(1, 2) + Rational(1, static_cast<long long>(c.k + 1));
  c.holds = c.mu <= c.bound;
  c.equality = c.mu == c.bound;
  return c;
}

/// True iff no vertex can be dropped while keeping a full-dimensional
/// non-hollow lattice polytope.
inline bool check_minimality(const LatticePolytope& p) {
  if (!p.is_lattice() || !p.full_dimensional()) throw DomainError("expected a full-dimensional lattice polytope");
  const auto pts = lattice_points(p);
  for (const auto& v : p.vertices()) {
    std::vector<IntVector> rest;
    for (const auto& x : pts)
      if (to_rational(x) != v) rest.push_back(x);
    if (rest.empty()) continue;
    const LatticePolytope q = LatticePolytope::from_points(rest);
    if (!q.full_dimensional()) continue;
    if (!interior_lattice_points(q).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Family formulas

struct FormulaRow {
  std::string name;
  Rational expected;
  Rational computed;
  bool ok = false;
};

struct FormulaReport {
  std::vector<FormulaRow> rows;
  bool ok = false;
};

namespace detail {

inline FormulaReport finish_formulas(std::vector<FormulaRow> rows) {
  FormulaReport r;
  r.ok = true;
  for (auto& row : rows) {
    row.ok = row.computed == row.expected;
    r.ok = r.ok && row.ok;
  }
  r.rows = std::move(rows);
  return r;
}

}  // namespace detail

/// M_k(0,0), M_k(1,0), M_k(0,1), M_k(1,1), M_k(0), M_k(1) for k = 1..kmax
/// against their closed forms.
inline FormulaReport check_Mk_formulas(long long kmax, unsigned jobs = 1) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  struct Job {
    std::string name;
    LatticePolytope p;
    Rational expected;
  };
  std::vector<Job> todo;
  for (long long k = 1; k <= kmax; ++k) {
    const std::string ks = std::to_string(k);
    todo.push_back({"M_" + ks + "(0,0)", family_M3(k, 0, 0), Rational(1) + Rational(1, k + 1)});
    todo.push_back({"M_" + ks + "(1,0)", family_M3(k, 1, 0), Rational(1) + Rational(3, 4 * k + 2)});
    todo.push_back({"M_" + ks + "(0,1)", family_M3(k, 0, 1), Rational(1) + Rational(3, 4 * k + 2)});
    todo.push_back({"M_" + ks + "(1,1)", family_M3(k, 1, 1), Rational(1) + Rational(1, 2 * k)});
    todo.push_back({"M_" + ks + "(0)", family_M2(k, 0), Rational(k + 3, 2 * k + 2)});
    todo.push_back({"M_" + ks + "(1)", family_M2(k, 1), Rational(k + 2, 2 * k + 1)});
  }
  std::vector<FormulaRow> rows(todo.size());
  detail::parallel_for(todo.size(), jobs, [&](std::size_t i) {
    rows[i] = {todo[i].name, todo[i].expected, covering_radius_value(todo[i].p), false};
  });
  return detail::finish_formulas(std::move(rows));
}

// ---------------------------------------------------------------------------
// Delta_v in the plane

struct DeltaRow {
  RatVector v;
  Rational mu_mip;
  Rational mu_graph;
  bool equality = false;
  bool predicted_equality = false;  ///< min(v) = 1 and max(v) <= 2
  bool ok = false;
};

struct DeltaReport {
  std::vector<DeltaRow> rows;
  Rational mu_3d_mip;    ///< Delta_(3/2,1,1)
  Rational mu_3d_graph;
  bool ok = false;
};

inline DeltaRow delta_row(const RatVector& v) {
  const LatticePolytope p = family_delta(v);
  DeltaRow r;
  r.v = v;
  r.mu_mip = covering_radius(p, Method::Mip).mu;
  r.mu_graph = covering_radius(p, Method::Graph).mu;
  r.equality = r.mu_mip == Rational(1);
  const Rational lo = std::min(v[0], v[1]), hi = std::max(v[0], v[1]);
  r.predicted_equality = lo == Rational(1) && hi <= Rational(2);
  r.ok = r.mu_mip == r.mu_graph && r.mu_mip <= Rational(1) && r.equality == r.predicted_equality;
  return r;
}

/// Fixed probes (1,1), (2,1), (1,2), (3/2,1), (5/2,1), (3,1) followed by
/// `samples` random v in [1,3]^2 with denominators up to 4, plus the
/// three-dimensional Delta_(3/2,1,1).
inline DeltaReport check_delta_v_plane(std::size_t samples, std::uint64_t seed, unsigned jobs = 1) {
  std::vector<RatVector> vs = {
      {Rational(1), Rational(1)},    {Rational(2), Rational(1)},    {Rational(1), Rational(2)},
      {Rational(3, 2), Rational(1)}, {Rational(5, 2), Rational(1)}, {Rational(3), Rational(1)},
  };
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector v(2);
    for (auto& x : v) {
      const long long q = draw(rng, 1, 4);
      x = Rational(draw(rng, q, 3 * q), q);
    }
    vs.push_back(std::move(v));
  }
  DeltaReport rep;
  rep.rows.resize(vs.size());
  detail::parallel_for(vs.size(), jobs, [&](std::size_t i) { rep.rows[i] = delta_row(vs[i]); });
  const LatticePolytope d3 = family_delta({Rational(3, 2), Rational(1), Rational(1)});
  rep.mu_3d_mip = covering_radius(d3, Method::Mip).mu;
  rep.mu_3d_graph = covering_radius(d3, Method::Graph).mu;
  rep.ok = rep.mu_3d_mip == Rational(14, 9) && rep.mu_3d_graph == Rational(14, 9);
  for (const auto& r : rep.rows) rep.ok = rep.ok && r.ok;
  return rep;
}

}  // namespace covrad
