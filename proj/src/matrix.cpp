#include "sap/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sap {

namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.square()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Rows scaled to integers; `scale` collects the multiplier of each row.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m, Integer* scale) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free row echelon form in place. Returns the rank; `swaps` counts
// row interchanges. Every division is exact (entries are minors of the input).
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, std::size_t* swaps) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  std::size_t nswaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++nswaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (swaps) *swaps = nswaps;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::col(std::size_t j) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t RationalMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: shape mismatch");
  std::vector<Rational> out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational CharPoly::evaluate(const Rational& z) const {
  Rational acc = 1;
  for (const auto& f : coeffs) acc = acc * z + f;
  return acc;
}

std::size_t CharPoly::zero_root_multiplicity() const {
  std::size_t k = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend() && sgn(*it) == 0; ++it) ++k;
  return k;
}

Rational det(const RationalMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  auto a = integer_rows(m, &scale);
  std::size_t swaps = 0;
  if (bareiss(a, n, &swaps) < n) return 0;
  Rational d(a[n - 1][n - 1], scale);
  d.canonicalize();
  return swaps % 2 ? Rational(-d) : d;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

CharPolyExpansion char_poly_expansion(const RationalMatrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  CharPolyExpansion out;
  out.poly.coeffs.reserve(n);
  out.adjugate.reserve(n);
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.adjugate.push_back(m);
    RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Rational c = -trace / Rational(static_cast<long>(k));
    out.poly.coeffs.push_back(c);
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
    m = std::move(am);
  }
  return out;
}

CharPoly char_poly(const RationalMatrix& a) { return char_poly_expansion(a).poly; }

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DimensionError("interpolate: need matching nonempty samples");
  const std::size_t d = xs.size();
  // Newton divided differences.
  std::vector<Rational> c = ys;
  for (std::size_t level = 1; level < d; ++level)
    for (std::size_t i = d - 1; i >= level; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - level]);
  // Horner on the Newton form: p = c0 + (x - x0)(c1 + (x - x1)(c2 + ...)).
  std::vector<Rational> p{c[d - 1]};
  for (std::size_t i = d - 1; i-- > 0;) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= xs[i] * p[k];
    }
    next[0] += c[i];
    p = std::move(next);
  }
  p.resize(d);
  return p;
}

CharPoly char_poly_by_interpolation(const RationalMatrix& a) {
  require_square(a, "char_poly_by_interpolation");
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    Rational z(static_cast<long>(s));
    RationalMatrix m = -a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += z;
    xs.push_back(z);
    ys.push_back(det(m));
  }
  auto low_first = interpolate(xs, ys);
  CharPoly p;
  for (std::size_t i = 1; i <= n; ++i) p.coeffs.push_back(low_first[n - i]);
  return p;
}

RationalMatrix power(const RationalMatrix& a, unsigned k) {
  require_square(a, "power");
  RationalMatrix acc = RationalMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

bool is_nilpotent(const RationalMatrix& a) { return char_poly(a).is_monomial(); }

std::optional<unsigned> index_of_nilpotency(const RationalMatrix& a) {
  require_square(a, "index_of_nilpotency");
  const std::size_t n = a.rows();
  const RationalMatrix zero(n, n);
  RationalMatrix p = a;
  for (unsigned k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
    if (p == zero) return k;
    p = p * a;
  }
  return std::nullopt;
}

bool is_nonderogatory(const RationalMatrix& a) {
  require_square(a, "is_nonderogatory");
  const std::size_t n = a.rows();
  if (n == 0) return true;
  RationalMatrix krylov(n * n, n);
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) krylov(i * n + j, k) = p(i, j);
    if (k + 1 < n) p = p * a;
  }
  return rank(krylov) == n;
}

RationalMatrix minor_matrix(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  for (auto r : rows)
    if (r >= a.rows()) throw std::out_of_range("minor_matrix: row index out of range");
  for (auto c : cols)
    if (c >= a.cols()) throw std::out_of_range("minor_matrix: column index out of range");
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (std::find(rows.begin(), rows.end(), i) == rows.end()) keep_r.push_back(i);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end()) keep_c.push_back(j);
  RationalMatrix m(keep_r.size(), keep_c.size());
  for (std::size_t i = 0; i < keep_r.size(); ++i)
    for (std::size_t j = 0; j < keep_c.size(); ++j) m(i, j) = a(keep_r[i], keep_c[j]);
  return m;
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<Rational> row;
    if (!(ls >> tok) || tok.front() == '#') continue;
    do {
      try {
        row.push_back(parse_rational(tok));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } while (ls >> tok);
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(lineno) + ": row length differs from the first row");
    rows.push_back(std::move(row));
  }
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string format_matrix(const RationalMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = m(i, j).get_str();
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& s = cells[i * m.cols() + j];
      if (j > 0) out += ' ';
      out.append(width - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) { return os << format_matrix(m); }

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

}  // namespace sap
