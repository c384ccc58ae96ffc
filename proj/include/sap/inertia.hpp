#pragma once

// Refined inertia (a, b, c1, c2): eigenvalue counts with positive real part,
// negative real part, zero, and nonzero purely imaginary.

#include "sap/border.hpp"
#include "sap/certify.hpp"
#include "sap/matrix.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace sap {

struct RefinedInertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t zero_mult = 0;
  std::size_t imag_pairs_count = 0;  // number of nonzero imaginary eigenvalues

  std::size_t order() const { return n_plus + n_minus + zero_mult + imag_pairs_count; }
  friend bool operator==(const RefinedInertia&, const RefinedInertia&) = default;
};

struct InertiaCertification {
  RefinedInertia refined_inertia;
  /// c1 always comes from the exact trailing zero coefficients.
  bool zero_mult_exact = true;
  bool imaginary_exact = false;
  std::optional<double> tolerance_used;
};

inline constexpr double kDefaultInertiaTolerance = 1e-9;

/// c1 exactly; the rest exactly when the zero-free factor q is even in z with
/// w = z^2 roots all real and negative and w-degree <= 2, numerically from a
/// balanced companion matrix otherwise.
InertiaCertification refined_inertia(const RationalMatrix& a, double tol = kDefaultInertiaTolerance);

/// Roots of the monic polynomial z^d + c_1 z^(d-1) + ... + c_d.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

/// Parlett-Reinsch diagonal similarity scaling (powers of two) in place.
void balance(std::vector<std::vector<double>>& m);

struct InertiaJacobianReport {
  Certification certification;
  InertiaCertification inertia;
  /// a = b = 0, c1 >= 2 and Jacobian rank n: every superpattern is
  /// inertially arbitrary.
  bool hypothesis_satisfied = false;
};

InertiaJacobianReport certify_inertia_jacobian(const RationalMatrix& a, const VariablePlacement& placement,
                                               double tol = kDefaultInertiaTolerance);

struct InertialBorderResult {
  RationalMatrix matrix;
  PreconditionReport preconditions;
  InertiaJacobianReport before;
  /// Re-certification of the bordered matrix with all nonzeros as variables.
  InertiaJacobianReport after;
  RefinedInertia expected;
  /// refined inertia of B is (0, 0, c1 + 1, c2) and B allows a full-rank
  /// Jacobian.
  bool conclusion_holds = false;
};

/// Equal-index border under the refined-inertia hypotheses. Throws
/// BorderPreconditionError naming the failed hypothesis.
InertialBorderResult inertial_equal_index_border(const RationalMatrix& a, std::size_t k, std::size_t v,
                                                 const VariablePlacement& placement,
                                                 double tol = kDefaultInertiaTolerance);
InertialBorderResult inertial_unequal_index_border(const RationalMatrix& a, std::size_t j, std::size_t k,
                                                   const Rational& b, std::size_t v, const VariablePlacement& placement,
                                                   double tol = kDefaultInertiaTolerance);

nlohmann::json to_json(const RefinedInertia& ri);
nlohmann::json to_json(const InertiaCertification& c);
nlohmann::json to_json(const InertiaJacobianReport& r);
nlohmann::json to_json(const InertialBorderResult& r);

}  // namespace sap
