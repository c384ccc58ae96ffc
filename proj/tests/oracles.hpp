#pragma once

// Test-only reference implementations, kept independent of the library's
// computational paths (no Bareiss, no Faddeev-LeVerrier, no adjugate).

#include "sap/matrix.hpp"
#include "sap/certify.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using sap::Rational;
using sap::RationalMatrix;

/// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * cofactor_det(sub);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

/// Plain Gauss-Jordan over the rationals.
inline std::size_t gauss_rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Coefficients (f_1..f_n) of prod (z - lambda) over the eigenvalues,
/// computed in long double so finite differences stay below 1e-6.
inline std::vector<long double> coeffs_from_eigenvalues(const Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>& a) {
  const auto n = a.rows();
  Eigen::ComplexEigenSolver<Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>> es(a, false);
  std::vector<std::complex<long double>> p{1.0L};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto lambda = es.eigenvalues()(i);
    std::vector<std::complex<long double>> q(p.size() + 1, 0.0L);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] += p[k];
      q[k + 1] -= lambda * p[k];
    }
    p = std::move(q);
  }
  std::vector<long double> out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k].real());
  return out;
}

inline Eigen::MatrixXd to_double(const RationalMatrix& a) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).get_d();
  return m;
}

/// Central finite differences (step h) of the eigenvalue-derived
/// coefficients with respect to each placement entry.
inline Eigen::MatrixXd finite_difference_jacobian(const RationalMatrix& a, const sap::VariablePlacement& placement,
                                                  double h = 1e-6) {
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat base = to_double(a).cast<long double>();
  const auto n = base.rows();
  Eigen::MatrixXd j(n, static_cast<Eigen::Index>(placement.size()));
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const auto r = static_cast<Eigen::Index>(placement.positions[k].row);
    const auto c = static_cast<Eigen::Index>(placement.positions[k].col);
    Mat plus = base, minus = base;
    plus(r, c) += h;
    minus(r, c) -= h;
    const auto fp = coeffs_from_eigenvalues(plus);
    const auto fm = coeffs_from_eigenvalues(minus);
    for (Eigen::Index i = 0; i < n; ++i)
      j(i, static_cast<Eigen::Index>(k)) =
          static_cast<double>((fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2 * static_cast<long double>(h)));
  }
  return j;
}

class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}

  Rational value(int max_num = 5, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    Rational q(num(gen_), den(gen_));
    q.canonicalize();
    return q;
  }

  /// Entries are zero with probability `zero_prob`, otherwise nonzero.
  RationalMatrix matrix(std::size_t rows, std::size_t cols, double zero_prob = 0.0) {
    RationalMatrix m(rows, cols);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (zero(gen_)) continue;
        Rational q;
        do q = value(); while (sgn(q) == 0);
        m(i, j) = q;
      }
    return m;
  }

  std::vector<Rational> vector(std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(value());
    return v;
  }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
  bool coin() { return std::bernoulli_distribution(0.5)(gen_); }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle
