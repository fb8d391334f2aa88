#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact vectors and matrices plus integer normal forms.
 *
 * Vectors are plain std::vector over Integer or Rational. Matrix<T> is a
 * row-major dense matrix whose shape is checked by every operation; a
 * mismatch raises DimensionError, never a silent broadcast.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covrad/errors.hpp"
#include "covrad/rational.hpp"

namespace covrad {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    Matrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionError("ragged column list");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// Vector helpers

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rational(a[i]) * b[i];
  return s;
}

template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum of different lengths");
  std::vector<T> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference of different lengths");
  std::vector<T> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T>
std::vector<T> scaled(const std::vector<T>& a, const T& c) {
  std::vector<T> r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
}

/// Integer vector for an integral rational vector; DomainError otherwise.
inline IntVector to_integer(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) throw DomainError("vector has non-integer entry " + x.str());
    r.push_back(x.numerator());
  }
  return r;
}

/// Least common multiple of all denominators (1 for the empty vector).
inline Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  return l;
}

/// Entry gcd of an integer vector (0 for the zero vector).
inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// v divided by the gcd of its entries.
inline IntVector primitive_vector(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw DomainError("primitive_vector of the zero vector");
  IntVector r(v);
  for (auto& x : r) x /= g;
  return r;
}

/// Primitive integer vector positively proportional to a nonzero rational vector.
inline IntVector primitive_direction(const RatVector& v) {
  const Integer den = common_denominator(v);
  IntVector w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(x.numerator() * (den / x.denominator()));
  return primitive_vector(w);
}

// ---------------------------------------------------------------------------
// Elimination

/// Exact determinant via fraction-free (Bareiss) elimination.
template <class T>
Rational determinant(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Matrix<T> a(m);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == T(0)) ++p;
      if (p == n) return Rational(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  Rational d(a(n - 1, n - 1));
  return sign < 0 ? -d : d;
}

/// Integer determinant of an integer matrix.
inline Integer int_determinant(const IntMatrix& m) {
  return determinant(m).numerator();
}

/// Rank of a rational matrix.
inline std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(r, c);
      a.add_row(i, r, -f);
    }
    ++r;
  }
  return r;
}

/// Solves A x = b for square nonsingular A; nullopt if A is singular.
inline std::optional<RatVector> solve(RatMatrix a, RatVector b) {
  if (!a.square()) throw DimensionError("solve needs a square matrix");
  if (b.size() != a.rows()) throw DimensionError("solve right-hand side length mismatch");
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(c, p);
    std::swap(b[c], b[p]);
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      a.add_row(i, c, -f);
      b[i] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rational(0));
    e[j] = 1;
    auto col = solve(a, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

/// Classical adjugate: adj(A) A = A adj(A) = det(A) I.
inline IntMatrix adjugate(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Integer cof = int_determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

// ---------------------------------------------------------------------------
// Integer normal forms

struct SmithForm {
  IntMatrix S;  ///< diagonal, s_1 | s_2 | ..., nonnegative
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix V;  ///< unimodular, cols x cols
  /// Diagonal entries s_1, ..., s_min(rows, cols) (trailing zeros included).
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

/// U A V = S by elementary row and column operations, always pivoting on the
/// smallest nonzero absolute value of the remaining block.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& s = f.S;

  auto min_abs_entry = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        Integer v = abs(s(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto piv = min_abs_entry(t);
    if (!piv) break;
    for (;;) {
      s.swap_rows(t, piv->first);
      f.U.swap_rows(t, piv->first);
      s.swap_cols(t, piv->second);
      f.V.swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = s(i, t) / s(t, t);  // truncating division
        s.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = s(t, j) / s(t, t);
        s.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived in row or column t
        std::pair<std::size_t, std::size_t> best{t, t};
        Integer best_abs = abs(s(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < best_abs) best = {i, t}, best_abs = abs(s(i, t));
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < best_abs) best = {t, j}, best_abs = abs(s(t, j));
        piv = best;
        continue;
      }
      // divisibility of the remaining block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        s.add_row(t, *bad_row, Integer(1));
        f.U.add_row(t, *bad_row, Integer(1));
        piv = std::make_pair(t, t);
        continue;
      }
      break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

struct HermiteForm {
  IntMatrix H;        ///< A U, lower column-echelon form, zero columns last
  IntMatrix U;        ///< unimodular, cols x cols
  std::size_t rank = 0;
};

/// Column-style Hermite normal form: H = A U with unimodular U acting on the
/// right. The first `rank` columns of H are a basis of the lattice spanned by
/// the columns of A; the last cols - rank columns of U are a basis of the
/// integer kernel of A.
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm f{a, IntMatrix::identity(n), 0};
  IntMatrix& h = f.H;
  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < n; ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = c; j < n; ++j)
        if (h(r, j) != 0 && (!best || abs(h(r, j)) < abs(h(r, *best)))) best = j;
      if (!best) break;
      h.swap_cols(c, *best);
      f.U.swap_cols(c, *best);
      bool single = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (h(r, j) == 0) continue;
        const Integer q = h(r, j) / h(r, c);
        h.add_col(j, c, -q);
        f.U.add_col(j, c, -q);
        if (h(r, j) != 0) single = false;
      }
      if (single) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_col(c);
      f.U.negate_col(c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = h(r, j) / h(r, c);
      if (h(r, j) - q * h(r, c) < 0) q -= 1;
      if (q != 0) {
        h.add_col(j, c, -q);
        f.U.add_col(j, c, -q);
      }
    }
    ++c;
  }
  f.rank = c;
  return f;
}

}  // namespace covrad
