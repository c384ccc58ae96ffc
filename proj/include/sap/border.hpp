#pragma once

// Bordering an order-n matrix into an order-(n+1) matrix by the similarity
//
//   B = [ I 0 ; x^T 1 ] [ A z ; 0 0 ] [ I 0 ; -x^T 1 ]
//     = [ A - z x^T , z ; x^T (A - z x^T) , x^T z ]
//
// so that p_B(z) = z p_A(z), plus the two standard unit cases
// (x = a_kk e_k, z = e_k) and (x = b e_k, z = e_j, j != k).

#include "sap/certify.hpp"
#include "sap/matrix.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sap {

class BorderPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BorderKind { General, EqualIndex, UnequalIndex };

const char* to_string(BorderKind kind);

struct BorderStep {
  BorderKind kind = BorderKind::General;
  std::vector<Rational> x;  // General only
  std::vector<Rational> z;  // General only
  std::size_t j = 0;        // UnequalIndex: z = e_j
  std::size_t k = 0;        // EqualIndex, UnequalIndex: x proportional to e_k
  Rational b = 0;           // UnequalIndex
  /// Hypothesis-only column index; never affects the bordered matrix.
  std::optional<std::size_t> v;

  static BorderStep general(std::vector<Rational> x, std::vector<Rational> z);
  static BorderStep equal_index(std::size_t k, std::optional<std::size_t> v = std::nullopt);
  static BorderStep unequal_index(std::size_t j, std::size_t k, Rational b, std::optional<std::size_t> v = std::nullopt);
};

RationalMatrix general_border(const RationalMatrix& a, const std::vector<Rational>& x, const std::vector<Rational>& z);
/// Requires a_kk != 0.
RationalMatrix equal_index_border(const RationalMatrix& a, std::size_t k);
/// Requires j != k and b != 0.
RationalMatrix unequal_index_border(const RationalMatrix& a, std::size_t j, std::size_t k, const Rational& b);
RationalMatrix apply_step(const RationalMatrix& a, const BorderStep& step);

/// The (x, z) pair the step stands for.
std::pair<std::vector<Rational>, std::vector<Rational>> border_vectors(const RationalMatrix& a, const BorderStep& step);

/// Columns c < n of the new last row of `b` that are zero although some term
/// x_i (A - z x^T)_ic is nonzero.
std::vector<std::size_t> last_row_cancellations(const RationalMatrix& a, const BorderStep& step, const RationalMatrix& b);

struct PreconditionCheck {
  std::string name;
  bool passed = false;
};

struct PreconditionReport {
  std::vector<PreconditionCheck> checks;

  bool ok() const;
  /// Names of the failed checks joined by "; ".
  std::string failures() const;
  void add(std::string name, bool passed) { checks.push_back({std::move(name), passed}); }
};

/// a_kk != 0, a_kv != 0 with v != k, det A(k, v) != 0. With a certification
/// also records nilpotency and a full-rank Jacobian.
PreconditionReport check_theorem2(const RationalMatrix& a, std::size_t k, std::size_t v,
                                  const Certification* certification = nullptr);
/// (j, k) not in the placement with j != k, a_kv != 0, det A(j, v) != 0.
PreconditionReport check_theorem4(const RationalMatrix& a, const VariablePlacement& placement, std::size_t j,
                                  std::size_t k, std::size_t v, const Certification* certification = nullptr);

/// Sign s with det(B(n+1, v)) = s det(A(row, v)) when B has last column e_row
/// (row = k for equal index, j for unequal index). `row` is 0-based like the
/// rest of the API; s = (-1)^(row + 1 + n).
int bordered_minor_sign(std::size_t row, std::size_t n);

struct BorderOptions {
  bool cancellation_is_error = true;
};

struct RoundSummary {
  std::size_t order = 0;  // order of the matrix being bordered
  BorderStep step;
  VariablePlacement placement;  // certifying placement of the input
  PreconditionReport preconditions;
  bool nilpotent = false;
  std::size_t jacobian_rank = 0;
  bool full_rank = false;
  Rational det_minor_before = 0;  // det A(row, v)
  Rational det_minor_after = 0;   // det B(n+1, v)
  int det_sign = 1;
  bool det_identity_holds = false;
  std::vector<std::size_t> cancellations;
};

struct BorderProvenance {
  RationalMatrix base;
  std::vector<BorderStep> steps;
  std::vector<RoundSummary> rounds;
  /// Certification of the final matrix (all-nonzeros placement).
  std::optional<Certification> final_certification;

  RationalMatrix replay() const;
};

struct RecursiveBorderResult {
  RationalMatrix matrix;
  BorderProvenance provenance;
};

using StepFunction = std::function<BorderStep(const RationalMatrix& bordered, const BorderStep& previous)>;

/// Index schedule of repeated standard unit bordering: equal index moves k
/// to the new last row, unequal index moves j to the new last row; v, k and b
/// are kept.
BorderStep advance_step(const BorderStep& step, std::size_t new_order);

/// Borders `count` times. Each round certifies the current matrix
/// (nilpotent, full-rank Jacobian; for unequal index with (j, k) excluded
/// from the placement), checks the theorem hypotheses, builds the bordered
/// matrix and checks the bordered-minor determinant identity. Throws
/// BorderPreconditionError naming the round on any failure.
RecursiveBorderResult recursive_border(const RationalMatrix& a, const BorderStep& step, std::size_t count,
                                       const BorderOptions& options = {}, const StepFunction& next = {});

nlohmann::json to_json(const BorderStep& s);
nlohmann::json to_json(const PreconditionReport& r);
nlohmann::json to_json(const BorderProvenance& p);

}  // namespace sap
