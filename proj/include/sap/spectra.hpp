#pragma once

// Floating-point realization of target characteristic polynomials inside the
// qualitative class of a certified pattern, by damped Gauss-Newton on the
// placement variables starting from the certified seed.

#include "sap/certify.hpp"
#include "sap/pattern.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace sap {

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrthantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RealizeOptions {
  double tol = 1e-10;
  int max_iters = 100;
  /// On failure, walk the target from all-zero coefficients in this many
  /// equal steps; 0 disables.
  int homotopy_steps = 10;
};

struct RealizationResult {
  Eigen::MatrixXd matrix;
  double residual = 0.0;
  int iterations = 0;
  bool sign_ok = false;
  bool used_homotopy = false;
};

/// Coefficients (f_1..f_n) of det(zI - A) in floating point.
std::vector<double> char_poly_coeffs(const Eigen::MatrixXd& a);
/// Float Jacobian of the coefficients with respect to the placement entries.
Eigen::MatrixXd float_jacobian(const Eigen::MatrixXd& a, const VariablePlacement& placement);

Eigen::MatrixXd to_eigen(const RationalMatrix& a);
/// Exact conversion; every double is a dyadic rational.
RationalMatrix to_rational(const Eigen::MatrixXd& a);

/// Entries outside the placement stay at their seed values; pattern zeros
/// are never variables. Throws NonConvergenceError or OrthantError.
RealizationResult realize_polynomial(const SignPattern& pattern, const RationalMatrix& seed,
                                     const VariablePlacement& placement, const std::vector<double>& target,
                                     const RealizeOptions& opts = {});

nlohmann::json to_json(const RealizationResult& r);

}  // namespace sap
