#pragma once

// The nilpotent-Jacobian method: exact Jacobian of the characteristic
// polynomial coefficients with respect to chosen entries, and its rank.

#include "sap/matrix.hpp"
#include "sap/pattern.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sap {

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

using PositionSet = std::set<Position>;

/// Entries of a realization that are replaced by variables x_1..x_m.
struct VariablePlacement {
  std::vector<Position> positions;

  std::size_t size() const { return positions.size(); }
  bool contains(Position p) const;
};

class InvalidPlacement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every nonzero position of `a`, row-major.
VariablePlacement all_nonzero_placement(const RationalMatrix& a, const PositionSet& excluded = {});
/// Throws InvalidPlacement for out-of-range, repeated or zero positions.
void validate_placement(const RationalMatrix& a, const VariablePlacement& placement);

/// n x m matrix of d f_i / d x_k evaluated at `a`, where x_k is the entry at
/// placement.positions[k]. Uses d f_i / d a_pq = -(M_(i-1))_qp with
/// adj(zI - A) = sum_k M_k z^(n-1-k).
RationalMatrix jacobian(const RationalMatrix& a, const VariablePlacement& placement);

/// The same Jacobian column by column from the cofactor identity
/// d f_i / d a_pq = coefficient of z^(n-i) in -(-1)^(p+q) det((zI - A)(p, q)),
/// each minor polynomial obtained by evaluation at n integer points and
/// interpolation. Slower; exists as an independent route.
RationalMatrix jacobian_by_minors(const RationalMatrix& a, const VariablePlacement& placement);

struct Certification {
  SignPattern pattern;
  RationalMatrix realization;
  VariablePlacement placement;
  RationalMatrix jacobian;
  CharPoly char_poly;
  bool nilpotent = false;
  std::size_t jacobian_rank = 0;
  bool full_rank = false;
  /// Exact: minimal polynomial has degree n.
  bool nonderogatory_check = false;
  bool irreducible_check = false;
  /// Set for nilpotent realizations only.
  std::optional<unsigned> nilpotency_index;

  /// Nilpotent with a full-rank Jacobian: every superpattern of `pattern` is
  /// spectrally arbitrary.
  bool certifies_spectrally_arbitrary() const { return nilpotent && full_rank; }
  /// For certified nilpotent realizations, irreducibility and
  /// nonderogatory-ness must both hold; false means a bug, not a finding.
  bool consistent() const;
};

Certification certify_nilpotent_jacobian(const RationalMatrix& a, const VariablePlacement& placement);
inline Certification certify_nilpotent_jacobian(const RationalMatrix& a) {
  return certify_nilpotent_jacobian(a, all_nonzero_placement(a));
}

/// Starts from all nonzeros of `a` not in `excluded`; if that certifies
/// rank n, greedily drops columns in placement order while rank n is kept.
/// Returns nullopt when even the maximal placement has rank < n.
std::optional<VariablePlacement> find_full_rank_placement(const RationalMatrix& a, const PositionSet& excluded = {});

nlohmann::json to_json(const VariablePlacement& p);
VariablePlacement placement_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CharPoly& p);
nlohmann::json to_json(const Certification& c);

/// Parses "i,j;i,j;..." (1-based); whitespace also separates pairs.
VariablePlacement parse_placement(std::string_view text);

}  // namespace sap
