#pragma once

#include <stdexcept>
#include <string>

namespace covrad {

/// Matrix or vector shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input lies outside the domain of an operation (zero vector, origin not
/// contained, nonpositive parameter, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Polytope is not full-dimensional where it has to be.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested algorithm is only available in low dimension.
class UnsupportedDimension : public std::runtime_error {
 public:
  explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown catalog name or family.
class LookupError : public std::out_of_range {
 public:
  explicit LookupError(const std::string& what) : std::out_of_range(what) {}
};

/// Malformed textual input (JSON, rational literals, names).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An invariant that the algorithms rely on was found broken at runtime.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace covrad
