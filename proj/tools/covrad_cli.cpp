// covrad: command-line front end. Every report is one JSON document on
// standard output. Exit status: 0 ok, 1 failed verification, 2 usage or
// domain error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "covrad/catalog.hpp"
#include "covrad/covering_radius.hpp"
#include "covrad/experiments.hpp"
#include "covrad/functionals.hpp"
#include "covrad/json_io.hpp"
#include "covrad/mip_covrad.hpp"
#include "covrad/polytope.hpp"
#include "covrad/simplex_covrad.hpp"

using namespace covrad;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string input;
  std::string name;
  std::string method = "auto";
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::optional<long long> box;
  std::optional<long long> den;
  unsigned jobs = 1;
  std::string only;
  std::optional<long long> kmax;
  std::size_t dim = 2;
  std::string which;
  bool last_covered = false;
  std::vector<std::string> ints;
};

struct Outcome {
  Json report;
  bool ok = true;
};

LatticePolytope load(const Options& o) {
  if (!o.name.empty() && !o.input.empty()) throw ParseError("give either --input or --name, not both");
  if (!o.name.empty()) return build(o.name);
  if (o.input.empty()) throw ParseError("missing polytope: use --input FILE or --name NAME");
  if (o.input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_polytope(text);
  }
  return read_polytope_file(o.input);
}

Json source(const Options& o) {
  Json c;
  c["command"] = "";
  if (!o.name.empty())
    c["name"] = o.name;
  else
    c["input"] = o.input;
  return c;
}

// ---------------------------------------------------------------------------

Outcome cmd_covrad(const Options& o) {
  const LatticePolytope p = load(o);
  const Method m = parse_method(o.method);
  const auto t0 = std::chrono::steady_clock::now();
  const CovradResult r = covering_radius(p, m);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  Json cfg = source(o);
  cfg["command"] = "covrad";
  cfg["method"] = o.method;
  Json j;
  j["config"] = cfg;
  j["mu"] = to_json(r.mu);
  if (r.witness) j["witness"] = to_json(*r.witness);
  j["method"] = to_string(r.method);
  if (r.method == Method::Both) {
    j["mu_graph"] = to_json(*r.mu_graph);
    j["mu_mip"] = to_json(*r.mu_mip);
    j["agree"] = r.agree;
  }
  j["time_ms"] = ms.count();
  return {j, r.agree};
}

Outcome cmd_covrad_mip(const Options& o) {
  const LatticePolytope p = load(o);
  const MipResult r = covering_radius_mip(p);
  Json cfg = source(o);
  cfg["command"] = "covrad-mip";
  cfg["last_covered"] = o.last_covered;
  Json j;
  j["config"] = cfg;
  j["mu"] = to_json(r.mu);
  j["witness"] = to_json(r.witness);
  j["mu_ub"] = to_json(r.mu_ub);
  j["translates"] = r.translates;
  j["nodes"] = r.nodes;
  if (o.last_covered) {
    const LastCovered lc = last_covered_points(p, r.mu);
    Json pts = Json::array();
    for (const auto& x : lc.points) {
      Json e;
      e["point"] = to_json(x);
      Json nf = Json::array();
      for (auto f : needed_facets(p, x, r.mu)) nf.push_back(f);
      e["needed_facets"] = nf;
      pts.push_back(e);
    }
    j["facets"] = p.facets().size();
    j["last_covered"] = pts;
    j["partial"] = lc.partial;
  }
  return {j, true};
}

Outcome cmd_covrad_simplex(const Options& o) {
  const LatticePolytope p = load(o);
  if (!p.is_simplex()) throw DomainError("covrad-simplex needs a full-dimensional simplex");
  const Integer c = lattice_scale(p);
  const LatticePolytope q = c == 1 ? p : dilate(p, Rational(c));
  const QuotientGroup g = quotient_group_of_simplex(q);
  const std::uint64_t delta = cayley_diameter(g);
  const Integer vol = abs(int_determinant(vertex_difference_matrix(q)));
  Json cfg = source(o);
  cfg["command"] = "covrad-simplex";
  Json j;
  j["config"] = cfg;
  j["mu"] = to_json(Rational(c) * Rational(Integer(delta) + Integer(q.dim()), vol));
  j["scale"] = to_json(c);
  j["volume"] = to_json(vol);
  Json inv = Json::array();
  for (const auto& s : g.invariant_factors)
    if (s != 1) inv.push_back(s.str());
  j["invariant_factors"] = inv;
  j["order"] = to_json(g.order);
  j["delta"] = delta;
  return {j, true};
}

Outcome cmd_cayley(const Options& o) {
  if (o.ints.size() < 2) throw ParseError("usage: cayley-diameter V a_1 ... a_d");
  CayleySpec spec;
  spec.V = Integer(o.ints[0]);
  for (std::size_t i = 1; i < o.ints.size(); ++i) spec.gens.push_back(Integer(o.ints[i]));
  const QuotientGroup g = quotient_group(spec);
  Json cfg;
  cfg["command"] = "cayley-diameter";
  cfg["V"] = o.ints[0];
  Json gens = Json::array();
  for (std::size_t i = 1; i < o.ints.size(); ++i) gens.push_back(o.ints[i]);
  cfg["generators"] = gens;
  Json j;
  j["config"] = cfg;
  j["delta"] = cayley_diameter(g);
  j["order"] = to_json(g.order);
  return {j, true};
}

Outcome cmd_surf(const Options& o) {
  const LatticePolytope p = load(o);
  const SimplexRayData r = ray_data(p);
  const Rational vol = normalized_volume(p);
  const Rational surf = discrete_surface_area(p);
  Json cfg = source(o);
  cfg["command"] = "surf";
  Json j;
  j["config"] = cfg;
  j["volume"] = to_json(vol);
  j["surf"] = to_json(surf);
  j["surf_by_projection"] = to_json(discrete_surface_area_by_projection(p));
  j["rhs"] = to_json(surf / (Rational(2) * vol));
  j["t"] = to_json(r.t);
  j["ell"] = to_json(r.ell);
  j["alpha"] = to_json(r.alpha);
  j["beta"] = to_json(r.beta);
  j["directions"] = to_json(r.p);
  return {j, true};
}

Outcome cmd_width(const Options& o) {
  const LatticePolytope p = load(o);
  const WidthResult w = lattice_width(p);
  Json cfg = source(o);
  cfg["command"] = "width";
  Json j;
  j["config"] = cfg;
  j["width"] = to_json(w.width);
  j["direction"] = to_json(w.direction);
  return {j, true};
}

Outcome cmd_volume(const Options& o) {
  const LatticePolytope p = load(o);
  Json cfg = source(o);
  cfg["command"] = "volume";
  Json j;
  j["config"] = cfg;
  j["volume"] = to_json(normalized_volume(p));
  j["vertices"] = p.num_vertices();
  if (p.full_dimensional()) j["facets"] = p.facets().size();
  return {j, true};
}

Outcome cmd_interior(const Options& o) {
  const LatticePolytope p = load(o);
  const auto pts = interior_lattice_points(p);
  Json cfg = source(o);
  cfg["command"] = "interior-points";
  Json j;
  j["config"] = cfg;
  j["count"] = pts.size();
  j["points"] = to_json(pts);
  return {j, true};
}

Outcome cmd_verify_tables(const Options& o) {
  const TableReport rep = verify_tables(o.only, o.jobs);
  Json cfg;
  cfg["command"] = "verify-tables";
  cfg["only"] = o.only.empty() ? "all" : o.only;
  cfg["jobs"] = o.jobs;
  Json j;
  j["config"] = cfg;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["name"] = r.name;
    e["group"] = r.group;
    e["method"] = to_string(r.method);
    e["expected"] = to_json(r.expected);
    e["computed"] = to_json(r.computed);
    e["interior_points"] = r.interior_points;
    if (!r.volume_vector.empty()) {
      Json vv = Json::array();
      for (const auto& x : r.volume_vector) vv.push_back(x.str());
      e["volume_vector"] = vv;
    }
    e["ok"] = r.ok;
    rows.push_back(e);
  }
  j["entries"] = rows;
  j["at_three_halves"] = rep.maximal_count;
  j["below_three_halves"] = rep.smaller_count;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

// ---------------------------------------------------------------------------

Outcome check_A(const Options& o, Json cfg) {
  const std::size_t samples = o.samples.value_or(o.dim == 2 ? 200 : 30);
  const long long box = o.box.value_or(o.dim == 2 ? 3 : 2);
  cfg["dim"] = o.dim;
  cfg["samples"] = samples;
  cfg["box"] = box;
  const ConjAReport rep = conjA_samples(o.dim, samples, o.seed, box, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["label"] = r.label;
    e["vertices"] = to_json(r.vertices);
    e["mu"] = to_json(r.check.mu);
    e["holds"] = r.check.holds;
    e["equality"] = r.check.equality;
    e["catalog_match"] = r.check.catalog_match;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["equality_count"] = rep.equality_count;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_C(const Options& o, Json cfg) {
  const std::size_t samples = o.samples.value_or(o.dim == 2 ? 200 : 50);
  const long long box = o.box.value_or(o.dim == 2 ? 7 : 3);
  const long long den = o.den.value_or(o.dim == 2 ? 3 : 1);
  cfg["dim"] = o.dim;
  cfg["samples"] = samples;
  cfg["box"] = box;
  cfg["den"] = den;
  const ConjCReport rep = conjC_samples(o.dim, samples, o.seed, box, den, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["vertices"] = to_json(r.vertices);
    e["sa_type"] = r.sa_type;
    e["mu"] = to_json(r.check->mu);
    e["rhs"] = to_json(r.check->rhs);
    e["holds"] = r.check->holds;
    e["equality"] = r.check->equality;
    e["surf"] = to_json(r.surf);
    e["identities"] = r.surf_by_projection_ok && r.identity_ok && r.surf_invariant;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["sa_type_count"] = rep.sa_type_count;
  j["equality_count"] = rep.equality_count;
  j["equality_outside_sa_type"] = rep.equality_outside_sa_type;
  j["strict_inside_sa_type"] = rep.strict_inside_sa_type;
  j["holds"] = rep.holds;
  j["equality_matches"] = rep.equality_matches;
  j["identities"] = rep.identities_ok;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_D(const Options& o, Json cfg) {
  const long long kmax = o.kmax.value_or(6);
  const std::size_t samples = o.samples.value_or(100);
  const long long box = o.box.value_or(4);
  cfg["kmax"] = kmax;
  cfg["samples"] = samples;
  cfg["box"] = box;
  const ConjDReport rep = conjD_samples(kmax, samples, o.seed, box, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["label"] = r.label;
    e["vertices"] = to_json(r.vertices);
    e["k"] = r.check.k;
    e["mu"] = to_json(r.check.mu);
    e["bound"] = to_json(r.check.bound);
    e["equality"] = r.check.equality;
    e["sum_of_segments"] = r.sum_of_segments;
    e["ok"] = r.ok;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_E(const Options& o, Json cfg) {
  const std::size_t samples = o.samples.value_or(30);
  const long long box = o.box.value_or(4);
  cfg["samples"] = samples;
  cfg["box"] = box;
  const ConjEReport rep = conjE_samples(samples, o.seed, box, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["vertices"] = to_json(r.vertices);
    Json labels = Json::array();
    for (auto i : r.data.I) labels.push_back(i);
    e["I"] = labels;
    e["ell"] = to_json(r.data.ell);
    e["rhs"] = to_json(r.data.rhs);
    e["mu"] = to_json(r.mu);
    e["holds"] = r.holds;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_product(const Options& o, Json cfg) {
  const std::size_t samples = o.samples.value_or(100);
  cfg["samples"] = samples;
  cfg["width_samples"] = 40;
  const ProductReport rep = product_samples(samples, 40, o.seed);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["a"] = to_json(r.chain.sorted);
    e["ratios"] = to_json(r.chain.ratios);
    e["mu_j_bounds"] = to_json(r.chain.mu_j_bounds);
    e["product"] = to_json(r.chain.product);
    e["target"] = to_json(r.chain.target);
    e["equality"] = r.chain.equality;
    e["all_equal"] = r.chain.all_equal;
    e["ok"] = r.ok;
    rows.push_back(e);
  }
  Json widths = Json::array();
  for (const auto& w : rep.width_rows) {
    Json e;
    e["a"] = to_json(w.a);
    e["mu1"] = to_json(w.mu1);
    e["inverse_width"] = to_json(w.inverse_width);
    e["ok"] = w.ok;
    widths.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["mu1"] = widths;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_delta(const Options& o, Json cfg) {
  const std::size_t samples = o.samples.value_or(50);
  cfg["samples"] = samples;
  const DeltaReport rep = check_delta_v_plane(samples, o.seed, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["v"] = to_json(r.v);
    e["mu_mip"] = to_json(r.mu_mip);
    e["mu_graph"] = to_json(r.mu_graph);
    e["equality"] = r.equality;
    e["predicted_equality"] = r.predicted_equality;
    e["ok"] = r.ok;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["delta_3_2_1_1"] = Json{{"mu_mip", to_json(rep.mu_3d_mip)}, {"mu_graph", to_json(rep.mu_3d_graph)}};
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome check_mk(const Options& o, Json cfg) {
  const long long kmax = o.kmax.value_or(8);
  cfg["kmax"] = kmax;
  const FormulaReport rep = check_Mk_formulas(kmax, o.jobs);
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["name"] = r.name;
    e["expected"] = to_json(r.expected);
    e["computed"] = to_json(r.computed);
    e["ok"] = r.ok;
    rows.push_back(e);
  }
  Json j;
  j["config"] = cfg;
  j["rows"] = rows;
  j["ok"] = rep.ok;
  return {j, rep.ok};
}

Outcome cmd_check(const Options& o) {
  Json cfg;
  cfg["command"] = "check-conjecture";
  cfg["which"] = o.which;
  cfg["seed"] = o.seed;
  cfg["jobs"] = o.jobs;
  if (o.which == "A") return check_A(o, cfg);
  if (o.which == "C") return check_C(o, cfg);
  if (o.which == "D") return check_D(o, cfg);
  if (o.which == "E") return check_E(o, cfg);
  if (o.which == "product") return check_product(o, cfg);
  if (o.which == "delta-v") return check_delta(o, cfg);
  return check_mk(o, cfg);
}

Outcome cmd_info(const Options&) {
  Json j;
  j["config"] = Json{{"command", "info"}};
  j["version"] = kVersion;
  j["methods"] = Json::array({"auto", "graph", "mip", "both"});
  Json names = Json::array();
  for (const auto& e : table_entries()) names.push_back(e.name);
  j["table_entries"] = names;
  j["pieces"] = Json::array({"I", "I'", "I⊕I", "I⊕I'", "S(1_3)", "S'(1_3)", "(I⊕I')°", "(I⊕I')'", "Q_4", "hexagon"});
  j["families"] = Json::array({"S(1_n)", "S(a_0,...,a_d)", "M_k(a)", "M_k(a)°", "M_k(a,b)", "Δ_(v_1,...,v_d)",
                               "kite(k,i)", "[p,q]"});
  j["max_group_order"] = kMaxGroupOrder;
  j["mip_max_dim"] = 3;
  return {j, true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact covering radii of lattice polytopes", "covrad"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto poly = [&](CLI::App* s) {
    s->add_option("--input,file", o.input, "polytope JSON file ('-' reads standard input)");
    s->add_option("--name", o.name, "catalog name, e.g. hexagon, 'S(1_4)', 'M_2(1,1)'");
  };
  auto jobs = [&](CLI::App* s) { s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber); };
  auto sampling = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "random seed");
    s->add_option("--samples", o.samples, "number of random samples");
    s->add_option("--box", o.box, "coordinate bound for random vertices")->check(CLI::PositiveNumber);
  };

  auto* covrad = app.add_subcommand("covrad", "covering radius");
  poly(covrad);
  covrad->add_option("--method", o.method, "auto, graph, mip or both")
      ->check(CLI::IsMember({"auto", "graph", "mip", "both"}));
  auto* mip = app.add_subcommand("covrad-mip", "covering radius by branch-and-bound");
  poly(mip);
  mip->add_flag("--last-covered", o.last_covered, "list last-covered points and their needed facets");
  auto* simplex = app.add_subcommand("covrad-simplex", "covering radius of a simplex by the Cayley graph");
  poly(simplex);
  auto* cayley = app.add_subcommand("cayley-diameter", "diameter of G(V; a_1, ..., a_d)");
  cayley->add_option("values", o.ints, "V a_1 ... a_d")->required();
  auto* surf = app.add_subcommand("surf", "discrete surface area of a simplex with 0 in its interior");
  poly(surf);
  auto* width = app.add_subcommand("width", "lattice width");
  poly(width);
  auto* volume = app.add_subcommand("volume", "normalized volume");
  poly(volume);
  auto* interior = app.add_subcommand("interior-points", "interior lattice points");
  poly(interior);
  auto* tables = app.add_subcommand("verify-tables", "recompute the 26 stored covering radii");
  tables->add_option("--only", o.only, "tetrahedra or other")->check(CLI::IsMember({"tetrahedra", "other"}));
  jobs(tables);
  auto* check = app.add_subcommand("check-conjecture", "sampled conjecture and formula checks");
  check->add_option("which", o.which, "A, C, D, E, product, delta-v or mk")
      ->required()
      ->check(CLI::IsMember({"A", "C", "D", "E", "product", "delta-v", "mk"}));
  sampling(check);
  jobs(check);
  check->add_option("--dim", o.dim, "dimension for A and C")->check(CLI::IsMember({2, 3}));
  check->add_option("--kmax", o.kmax, "largest k for D and mk")->check(CLI::PositiveNumber);
  check->add_option("--den", o.den, "largest denominator for C")->check(CLI::PositiveNumber);
  auto* info = app.add_subcommand("info", "version, catalog names and limits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Outcome out;
    if (covrad->parsed()) out = cmd_covrad(o);
    else if (mip->parsed()) out = cmd_covrad_mip(o);
    else if (simplex->parsed()) out = cmd_covrad_simplex(o);
    else if (cayley->parsed()) out = cmd_cayley(o);
    else if (surf->parsed()) out = cmd_surf(o);
    else if (width->parsed()) out = cmd_width(o);
    else if (volume->parsed()) out = cmd_volume(o);
    else if (interior->parsed()) out = cmd_interior(o);
    else if (tables->parsed()) out = cmd_verify_tables(o);
    else if (check->parsed()) out = cmd_check(o);
    else if (info->parsed()) out = cmd_info(o);
    std::cout << out.report.dump(2) << "\n";
    return out.ok ? 0 : 1;
  } catch (const InternalError& e) {
    std::cerr << "covrad: internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "covrad: " << e.what() << "\n";
    return 2;
  }
}
