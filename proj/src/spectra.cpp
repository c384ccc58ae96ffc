#include "sap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sap {

namespace {

using Eigen::Index;

struct FloatExpansion {
  std::vector<double> coeffs;
  std::vector<Eigen::MatrixXd> adjugate;
};

// Faddeev-LeVerrier in doubles; the same recursion as the exact version.
FloatExpansion float_expansion(const Eigen::MatrixXd& a) {
  const Index n = a.rows();
  FloatExpansion out;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    out.adjugate.push_back(m);
    Eigen::MatrixXd am = a * m;
    const double c = -am.trace() / static_cast<double>(k);
    out.coeffs.push_back(c);
    am.diagonal().array() += c;
    m = std::move(am);
  }
  return out;
}

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

struct Problem {
  const SignPattern& pattern;
  Eigen::MatrixXd base;
  const VariablePlacement& placement;
  std::vector<int> signs;

  Eigen::MatrixXd matrix(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = base;
    for (std::size_t k = 0; k < placement.size(); ++k) {
      const auto& p = placement.positions[k];
      m(static_cast<Index>(p.row), static_cast<Index>(p.col)) = x(static_cast<Index>(k));
    }
    return m;
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& x, const Eigen::VectorXd& target) const {
    const auto c = char_poly_coeffs(matrix(x));
    return Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Index>(c.size())) - target;
  }

  bool in_orthant(const Eigen::VectorXd& x) const {
    for (Index k = 0; k < x.size(); ++k)
      if (!(x(k) * signs[static_cast<std::size_t>(k)] > 0.0)) return false;
    return true;
  }
};

struct SolveOutcome {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
};

SolveOutcome gauss_newton(const Problem& prob, Eigen::VectorXd x, const Eigen::VectorXd& target,
                          const RealizeOptions& opts) {
  Eigen::VectorXd r = prob.residual(x, target);
  int it = 0;
  while (max_abs(r) >= opts.tol) {
    if (it >= opts.max_iters) {
      std::ostringstream os;
      os << "no convergence after " << it << " iterations, residual " << max_abs(r);
      throw NonConvergenceError(os.str());
    }
    ++it;
    const Eigen::MatrixXd j = float_jacobian(prob.matrix(x), prob.placement);
    const Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(-r);

    double t = 1.0;
    int halvings = 0;
    while (!prob.in_orthant(x + t * step)) {
      t *= 0.5;
      if (++halvings > 60) throw OrthantError("step cannot be shortened enough to keep the entry signs");
    }
    const double before = r.norm();
    Eigen::VectorXd trial_r = prob.residual(x + t * step, target);
    int damp = 0;
    while (trial_r.norm() > before && damp < 30) {
      t *= 0.5;
      ++damp;
      trial_r = prob.residual(x + t * step, target);
    }
    if (trial_r.norm() > before) {
      std::ostringstream os;
      os << "residual stagnated at " << max_abs(r) << " after " << it << " iterations";
      throw NonConvergenceError(os.str());
    }
    x += t * step;
    r = std::move(trial_r);
  }
  return {std::move(x), max_abs(r), it};
}

}  // namespace

std::vector<double> char_poly_coeffs(const Eigen::MatrixXd& a) { return float_expansion(a).coeffs; }

Eigen::MatrixXd float_jacobian(const Eigen::MatrixXd& a, const VariablePlacement& placement) {
  const auto e = float_expansion(a);
  const Index n = a.rows();
  Eigen::MatrixXd j(n, static_cast<Index>(placement.size()));
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const auto& p = placement.positions[k];
    for (Index i = 0; i < n; ++i)
      j(i, static_cast<Index>(k)) =
          -e.adjugate[static_cast<std::size_t>(i)](static_cast<Index>(p.col), static_cast<Index>(p.row));
  }
  return j;
}

Eigen::MatrixXd to_eigen(const RationalMatrix& a) {
  Eigen::MatrixXd m(static_cast<Index>(a.rows()), static_cast<Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = a(i, j).get_d();
  return m;
}

RationalMatrix to_rational(const Eigen::MatrixXd& a) {
  RationalMatrix m(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(a(i, j));
  return m;
}

RealizationResult realize_polynomial(const SignPattern& pattern, const RationalMatrix& seed,
                                     const VariablePlacement& placement, const std::vector<double>& target,
                                     const RealizeOptions& opts) {
  if (!is_realization(seed, pattern)) throw std::invalid_argument("realize_polynomial: seed does not realize the pattern");
  validate_placement(seed, placement);
  if (target.size() != seed.rows())
    throw DimensionError("realize_polynomial: target must have " + std::to_string(seed.rows()) + " coefficients");
  if (rank(jacobian(seed, placement)) != seed.rows())
    throw std::invalid_argument("realize_polynomial: placement does not give a full-rank Jacobian at the seed");

  Problem prob{pattern, to_eigen(seed), placement, {}};
  Eigen::VectorXd x0(static_cast<Index>(placement.size()));
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const auto& p = placement.positions[k];
    prob.signs.push_back(sgn(seed(p.row, p.col)));
    x0(static_cast<Index>(k)) = seed(p.row, p.col).get_d();
  }
  const Eigen::VectorXd goal = Eigen::Map<const Eigen::VectorXd>(target.data(), static_cast<Index>(target.size()));

  RealizationResult out;
  SolveOutcome sol;
  try {
    sol = gauss_newton(prob, x0, goal, opts);
  } catch (const std::runtime_error&) {
    if (opts.homotopy_steps <= 0) throw;
    out.used_homotopy = true;
    Eigen::VectorXd x = x0;
    int total = 0;
    for (int s = 1; s <= opts.homotopy_steps; ++s) {
      const Eigen::VectorXd partial = goal * (static_cast<double>(s) / opts.homotopy_steps);
      sol = gauss_newton(prob, x, partial, opts);
      total += sol.iterations;
      x = sol.x;
    }
    sol.iterations = total;
  }
  out.matrix = prob.matrix(sol.x);
  out.residual = sol.residual;
  out.iterations = sol.iterations;
  out.sign_ok = is_realization(to_rational(out.matrix), pattern);
  if (!out.sign_ok) throw OrthantError("realized matrix left the qualitative class");
  return out;
}

nlohmann::json to_json(const RealizationResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < r.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < r.matrix.cols(); ++j) row.push_back(r.matrix(i, j));
    rows.push_back(std::move(row));
  }
  return {{"matrix", rows},
          {"residual", r.residual},
          {"iterations", r.iterations},
          {"sign_ok", r.sign_ok},
          {"used_homotopy", r.used_homotopy}};
}

}  // namespace sap
