#pragma once

/**
 * @file json_io.hpp
 * @brief Polytope JSON input and rational-as-string output helpers.
 *
 * Input format: {"vertices": [["3/2", "1", "1"], ...]}. Entries may also be
 * JSON integers. Output keeps key insertion order (ordered_json) so reports
 * are byte-identical across runs.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "covrad/errors.hpp"
#include "covrad/matrix.hpp"
#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"

namespace covrad {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }
inline Json to_json(const Integer& n) { return n.str(); }

inline Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json to_json(const std::vector<RatVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json polytope_to_json(const LatticePolytope& p) { return Json{{"vertices", to_json(p.vertices())}}; }

/// A rational given as "p/q", "p" or a JSON integer.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<unsigned long long>()));
    return Rational(j.get<long long>());
  }
  throw ParseError("expected a rational string or an integer, got " + j.dump());
}

inline LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw ParseError("polytope JSON needs a \"vertices\" array");
  const Json& vs = j.at("vertices");
  if (!vs.is_array() || vs.empty()) throw ParseError("\"vertices\" must be a non-empty array");
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_array()) throw ParseError("vertex " + std::to_string(i) + " is not an array");
    RatVector v;
    for (std::size_t k = 0; k < vs[i].size(); ++k) {
      try {
        v.push_back(rational_from_json(vs[i][k]));
      } catch (const ParseError& e) {
        throw ParseError("vertex " + std::to_string(i) + ", coordinate " + std::to_string(k) + ": " + e.what());
      }
    }
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_points(pts);
}

/// Parses polytope JSON text; syntax errors carry nlohmann's line/column.
inline LatticePolytope parse_polytope(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

inline LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polytope(buf.str());
}

}  // namespace covrad
