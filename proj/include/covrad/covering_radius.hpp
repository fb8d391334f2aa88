#pragma once

/**
 * @file covering_radius.hpp
 * @brief Method dispatch for covering radii.
 */

#include <optional>
#include <string>

#include "covrad/errors.hpp"
#include "covrad/mip_covrad.hpp"
#include "covrad/polytope.hpp"
#include "covrad/simplex_covrad.hpp"

namespace covrad {

enum class Method { Auto, Graph, Mip, Both };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Graph: return "graph";
    case Method::Mip: return "mip";
    case Method::Both: return "both";
  }
  return "auto";
}

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "graph") return Method::Graph;
  if (s == "mip") return Method::Mip;
  if (s == "both") return Method::Both;
  throw DomainError("unknown method '" + s + "'");
}

struct CovradResult {
  Rational mu;
  Method method = Method::Auto;  ///< method actually used (never Auto)
  std::optional<RatVector> witness;
  std::optional<Rational> mu_graph;
  std::optional<Rational> mu_mip;
  bool agree = true;  ///< false only when Both found different values
};

/// Auto uses the graph method for every simplex (rational ones through their
/// smallest integral dilate) and the MIP otherwise.
inline CovradResult covering_radius(const LatticePolytope& p, Method method = Method::Auto) {
  if (!p.full_dimensional()) throw DegeneracyError("covering radius needs a full-dimensional polytope");
  if (method == Method::Auto) method = p.is_simplex() ? Method::Graph : Method::Mip;
  CovradResult r;
  r.method = method;
  if (method == Method::Graph || method == Method::Both) {
    if (!p.is_simplex()) throw DomainError("graph method needs a simplex");
    r.mu_graph = covering_radius_rational_simplex(p);
    r.mu = *r.mu_graph;
  }
  if (method == Method::Mip || method == Method::Both) {
    MipResult m = covering_radius_mip(p);
    r.mu_mip = m.mu;
    r.witness = m.witness;
    r.mu = m.mu;
  }
  if (method == Method::Both) r.agree = *r.mu_graph == *r.mu_mip;
  return r;
}

inline Rational covering_radius_value(const LatticePolytope& p, Method method = Method::Auto) {
  return covering_radius(p, method).mu;
}

}  // namespace covrad
