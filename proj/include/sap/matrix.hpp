#pragma once

// Exact rational matrices over GMP rationals.
//
// Everything in this header is exact: determinants and ranks use
// fraction-free (Bareiss) elimination on integer-scaled rows, and the
// characteristic polynomial is obtained by Faddeev-LeVerrier, which divides
// only by small integers. Indices are 0-based throughout the C++ API.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sap {

using Rational = mpq_class;
using Integer = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an integer or `p/q`; rejects a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal; every row must have the same length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  RationalMatrix transpose() const;
  std::size_t nonzero_count() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v);

/// Monic characteristic polynomial z^n + f_1 z^(n-1) + ... + f_n, stored as
/// (f_1, ..., f_n). The leading 1 is implicit.
struct CharPoly {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.size(); }
  Rational evaluate(const Rational& z) const;
  /// Number of trailing zero coefficients, i.e. the multiplicity of the root 0.
  std::size_t zero_root_multiplicity() const;
  bool is_monomial() const { return zero_root_multiplicity() == coeffs.size(); }

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }
};

/// Coefficients of a characteristic polynomial together with the matrix
/// coefficients of adj(zI - A) = sum_k adjugate[k] z^(n-1-k).
struct CharPolyExpansion {
  CharPoly poly;
  std::vector<RationalMatrix> adjugate;
};

Rational det(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

CharPoly char_poly(const RationalMatrix& a);
CharPolyExpansion char_poly_expansion(const RationalMatrix& a);
/// det(zI - A) sampled at z = 0..n and interpolated; independent of
/// Faddeev-LeVerrier and used to cross-check it.
CharPoly char_poly_by_interpolation(const RationalMatrix& a);

/// Coefficients (c_0, ..., c_d) of the unique polynomial of degree <= d
/// through the points (xs[i], ys[i]), lowest degree first.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

RationalMatrix power(const RationalMatrix& a, unsigned k);
bool is_nilpotent(const RationalMatrix& a);
/// Smallest k >= 1 with A^k = 0, or nullopt when A is not nilpotent.
std::optional<unsigned> index_of_nilpotency(const RationalMatrix& a);
/// True iff I, A, ..., A^(n-1) are linearly independent, i.e. the minimal
/// polynomial has degree n.
bool is_nonderogatory(const RationalMatrix& a);

/// A(U, V): delete the rows in `rows` and the columns in `cols`.
RationalMatrix minor_matrix(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols);
inline RationalMatrix minor_matrix(const RationalMatrix& a, std::size_t row, std::size_t col) {
  return minor_matrix(a, std::vector<std::size_t>{row}, std::vector<std::size_t>{col});
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

/// One row per line, entries separated by whitespace, each an integer or p/q.
/// Blank lines and lines starting with '#' are ignored.
RationalMatrix parse_matrix(std::string_view text);
std::string format_matrix(const RationalMatrix& m);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

std::vector<double> to_double(const std::vector<Rational>& v);

}  // namespace sap
