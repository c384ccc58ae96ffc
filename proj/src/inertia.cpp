#include "sap/inertia.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace sap {

namespace {

struct ExactImaginary {
  std::size_t c2 = 0;
};

// q(z) = z^d + q_1 z^(d-1) + ... + q_d with q_d != 0. Certifies that every
// root is nonzero purely imaginary when q(z) = r(z^2), deg r <= 2 and all
// roots of r are real and negative.
std::optional<ExactImaginary> exact_imaginary(const std::vector<Rational>& q) {
  const std::size_t d = q.size();
  if (d == 0) return ExactImaginary{0};
  if (d % 2 != 0) return std::nullopt;
  for (std::size_t i = 1; i <= d; i += 2)
    if (sgn(q[i - 1]) != 0) return std::nullopt;
  if (d == 2) {
    // w + alpha, root -alpha.
    if (sgn(q[1]) > 0) return ExactImaginary{2};
    return std::nullopt;
  }
  if (d == 4) {
    // w^2 + beta w + gamma: two real negative roots iff the discriminant is
    // nonnegative, their sum -beta < 0 and their product gamma > 0.
    const Rational& beta = q[1];
    const Rational& gamma = q[3];
    const Rational disc = beta * beta - 4 * gamma;
    if (sgn(beta) > 0 && sgn(gamma) > 0 && sgn(disc) >= 0) return ExactImaginary{4};
  }
  return std::nullopt;
}

RefinedInertia classify(const std::vector<std::complex<double>>& roots, std::size_t c1, double tol) {
  RefinedInertia ri;
  ri.zero_mult = c1;
  for (const auto& r : roots) {
    const double re = r.real();
    if (std::abs(r) < tol) {
      // Zero roots were removed exactly; a tiny root is classified by the
      // sign of its real part.
      if (re > 0) ++ri.n_plus;
      else if (re < 0) ++ri.n_minus;
      else ++ri.imag_pairs_count;
    } else if (re > tol) {
      ++ri.n_plus;
    } else if (re < -tol) {
      ++ri.n_minus;
    } else {
      ++ri.imag_pairs_count;
    }
  }
  return ri;
}

}  // namespace

void balance(std::vector<std::vector<double>>& m) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = m.size();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m[j][i]);
        r += std::abs(m[i][j]);
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) m[i][j] *= g;
        for (std::size_t j = 0; j < n; ++j) m[j][i] *= f;
      }
    }
  }
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
  const std::size_t d = coeffs.size();
  if (d == 0) return {};
  std::vector<std::vector<double>> comp(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) comp[0][j] = -coeffs[j];
  for (std::size_t i = 1; i < d; ++i) comp[i][i - 1] = 1.0;
  balance(comp);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = comp[i][j];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

InertiaCertification refined_inertia(const RationalMatrix& a, double tol) {
  const CharPoly p = char_poly(a);
  const std::size_t c1 = p.zero_root_multiplicity();
  const std::vector<Rational> q(p.coeffs.begin(), p.coeffs.end() - static_cast<std::ptrdiff_t>(c1));
  InertiaCertification out;
  if (auto exact = exact_imaginary(q)) {
    out.refined_inertia = {0, 0, c1, exact->c2};
    out.imaginary_exact = true;
    return out;
  }
  out.refined_inertia = classify(polynomial_roots(to_double(q)), c1, tol);
  out.tolerance_used = tol;
  return out;
}

InertiaJacobianReport certify_inertia_jacobian(const RationalMatrix& a, const VariablePlacement& placement, double tol) {
  InertiaJacobianReport r;
  r.certification = certify_nilpotent_jacobian(a, placement);
  r.inertia = refined_inertia(a, tol);
  const auto& ri = r.inertia.refined_inertia;
  r.hypothesis_satisfied = ri.n_plus == 0 && ri.n_minus == 0 && ri.zero_mult >= 2 && r.certification.full_rank;
  return r;
}

namespace {

PreconditionReport inertia_hypotheses(const InertiaJacobianReport& before) {
  PreconditionReport r;
  const auto& ri = before.inertia.refined_inertia;
  r.add("refined inertia (0,0,c1,c2) with c1 >= 2", ri.n_plus == 0 && ri.n_minus == 0 && ri.zero_mult >= 2);
  r.add("A allows a full-rank Jacobian", before.certification.full_rank);
  return r;
}

void finish(InertialBorderResult& out, double tol) {
  out.after = certify_inertia_jacobian(out.matrix, all_nonzero_placement(out.matrix), tol);
  const auto& ri = out.before.inertia.refined_inertia;
  out.expected = {0, 0, ri.zero_mult + 1, ri.imag_pairs_count};
  out.conclusion_holds = out.after.inertia.refined_inertia == out.expected && out.after.certification.full_rank;
}

}  // namespace

InertialBorderResult inertial_equal_index_border(const RationalMatrix& a, std::size_t k, std::size_t v,
                                                 const VariablePlacement& placement, double tol) {
  InertialBorderResult out;
  out.before = certify_inertia_jacobian(a, placement, tol);
  out.preconditions = inertia_hypotheses(out.before);
  for (auto& c : check_theorem2(a, k, v).checks) out.preconditions.checks.push_back(std::move(c));
  if (!out.preconditions.ok())
    throw BorderPreconditionError("inertial equal-index border: " + out.preconditions.failures());
  out.matrix = equal_index_border(a, k);
  finish(out, tol);
  return out;
}

InertialBorderResult inertial_unequal_index_border(const RationalMatrix& a, std::size_t j, std::size_t k,
                                                   const Rational& b, std::size_t v, const VariablePlacement& placement,
                                                   double tol) {
  InertialBorderResult out;
  out.before = certify_inertia_jacobian(a, placement, tol);
  out.preconditions = inertia_hypotheses(out.before);
  for (auto& c : check_theorem4(a, placement, j, k, v).checks) out.preconditions.checks.push_back(std::move(c));
  out.preconditions.add("b != 0", sgn(b) != 0);
  if (!out.preconditions.ok())
    throw BorderPreconditionError("inertial unequal-index border: " + out.preconditions.failures());
  out.matrix = unequal_index_border(a, j, k, b);
  finish(out, tol);
  return out;
}

nlohmann::json to_json(const RefinedInertia& ri) {
  return nlohmann::json::array({ri.n_plus, ri.n_minus, ri.zero_mult, ri.imag_pairs_count});
}

nlohmann::json to_json(const InertiaCertification& c) {
  return {{"refined_inertia", to_json(c.refined_inertia)},
          {"zero_mult_exact", c.zero_mult_exact},
          {"imaginary_exact", c.imaginary_exact},
          {"tolerance_used", c.tolerance_used ? nlohmann::json(*c.tolerance_used) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const InertiaJacobianReport& r) {
  return {{"certification", to_json(r.certification)},
          {"inertia", to_json(r.inertia)},
          {"hypothesis_satisfied", r.hypothesis_satisfied},
          {"certifies_inertially_arbitrary", r.hypothesis_satisfied}};
}

nlohmann::json to_json(const InertialBorderResult& r) {
  return {{"matrix", to_json(r.matrix)},
          {"pattern", to_json(r.after.certification.pattern)},
          {"preconditions", to_json(r.preconditions)},
          {"before", to_json(r.before)},
          {"after", to_json(r.after)},
          {"expected_refined_inertia", to_json(r.expected)},
          {"conclusion_holds", r.conclusion_holds},
          {"spectrally_arbitrary_certified", r.after.certification.certifies_spectrally_arbitrary()}};
}

}  // namespace sap
