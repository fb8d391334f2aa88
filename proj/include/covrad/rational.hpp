#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Rational is the only scalar type used by the library. It wraps a GMP
 * rational, which keeps every value in lowest terms with a positive
 * denominator after each operation; zero is always 0/1.
 */

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "covrad/errors.hpp"

namespace covrad {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

class Rational {
 public:
  using Backend = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                boost::multiprecision::et_off>;

  Rational() = default;
  Rational(int n) : v_(n) {}                 // NOLINT(implicit)
  Rational(long n) : v_(n) {}                // NOLINT(implicit)
  Rational(long long n) : v_(n) {}           // NOLINT(implicit)
  Rational(const Integer& n) : v_(n) {}      // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = Backend(num, den);
  }
  Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "-p", "p/q" (whitespace around the value is ignored).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto to_int = [](std::string_view s) {
      if (!s.empty() && s[0] == '+') s.remove_prefix(1);
      return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!valid_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
      return Rational(to_int(text));
    }
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
      throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(to_int(num), to_int(den));
  }

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  Integer floor() const {
    Integer q, r;
    const Integer n = numerator(), d = denominator();
    boost::multiprecision::divide_qr(n, d, q, r);
    if (r < 0) q -= 1;
    return q;
  }
  Integer ceil() const {
    Integer f = floor();
    return (Rational(f) == *this) ? f : Integer(f + 1);
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  double to_double() const { return v_.convert_to<double>(); }

  const Backend& backend() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  Backend v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}
inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace covrad

template <>
struct std::hash<covrad::Rational> {
  std::size_t operator()(const covrad::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
