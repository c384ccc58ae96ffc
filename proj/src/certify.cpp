#include "sap/certify.hpp"

#include <algorithm>
#include <sstream>

namespace sap {

bool VariablePlacement::contains(Position p) const {
  return std::find(positions.begin(), positions.end(), p) != positions.end();
}

VariablePlacement all_nonzero_placement(const RationalMatrix& a, const PositionSet& excluded) {
  VariablePlacement p;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && !excluded.count({i, j})) p.positions.push_back({i, j});
  return p;
}

void validate_placement(const RationalMatrix& a, const VariablePlacement& placement) {
  PositionSet seen;
  for (const auto& pos : placement.positions) {
    const std::string where = "(" + std::to_string(pos.row + 1) + "," + std::to_string(pos.col + 1) + ")";
    if (pos.row >= a.rows() || pos.col >= a.cols()) throw InvalidPlacement("placement position " + where + " is out of range");
    if (sgn(a(pos.row, pos.col)) == 0) throw InvalidPlacement("placement position " + where + " is a zero entry");
    if (!seen.insert(pos).second) throw InvalidPlacement("placement position " + where + " is repeated");
  }
}

RationalMatrix jacobian(const RationalMatrix& a, const VariablePlacement& placement) {
  if (!a.square()) throw DimensionError("jacobian: expected a square matrix");
  validate_placement(a, placement);
  const std::size_t n = a.rows();
  const auto expansion = char_poly_expansion(a);
  RationalMatrix j(n, placement.size());
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const auto [p, q] = placement.positions[k];
    for (std::size_t i = 0; i < n; ++i) j(i, k) = -expansion.adjugate[i](q, p);
  }
  return j;
}

RationalMatrix jacobian_by_minors(const RationalMatrix& a, const VariablePlacement& placement) {
  if (!a.square()) throw DimensionError("jacobian: expected a square matrix");
  validate_placement(a, placement);
  const std::size_t n = a.rows();
  RationalMatrix j(n, placement.size());
  std::vector<Rational> xs;
  for (std::size_t s = 0; s < n; ++s) xs.emplace_back(static_cast<long>(s));
  for (std::size_t k = 0; k < placement.size(); ++k) {
    const auto [p, q] = placement.positions[k];
    std::vector<Rational> ys;
    for (const auto& z : xs) {
      RationalMatrix m = -a;
      for (std::size_t i = 0; i < n; ++i) m(i, i) += z;
      ys.push_back(det(minor_matrix(m, p, q)));
    }
    const auto coeffs = interpolate(xs, ys);  // coeffs[d] multiplies z^d
    const int sign = (p + q) % 2 == 0 ? -1 : 1;
    for (std::size_t i = 1; i <= n; ++i) j(i - 1, k) = coeffs[n - i] * sign;
  }
  return j;
}

bool Certification::consistent() const {
  if (!certifies_spectrally_arbitrary()) return true;
  return nonderogatory_check && irreducible_check && nilpotency_index == realization.rows();
}

Certification certify_nilpotent_jacobian(const RationalMatrix& a, const VariablePlacement& placement) {
  Certification c;
  c.jacobian = jacobian(a, placement);
  c.pattern = sign_of(a);
  c.realization = a;
  c.placement = placement;
  c.char_poly = char_poly(a);
  c.nilpotent = c.char_poly.is_monomial();
  c.jacobian_rank = rank(c.jacobian);
  c.full_rank = c.jacobian_rank == a.rows();
  c.nonderogatory_check = is_nonderogatory(a);
  c.irreducible_check = is_irreducible(c.pattern);
  if (c.nilpotent) c.nilpotency_index = index_of_nilpotency(a);
  return c;
}

std::optional<VariablePlacement> find_full_rank_placement(const RationalMatrix& a, const PositionSet& excluded) {
  if (!a.square()) throw DimensionError("find_full_rank_placement: expected a square matrix");
  const std::size_t n = a.rows();
  VariablePlacement placement = all_nonzero_placement(a, excluded);
  if (placement.size() < n) return std::nullopt;
  const RationalMatrix full = jacobian(a, placement);
  if (rank(full) < n) return std::nullopt;

  std::vector<std::size_t> kept(placement.size());
  for (std::size_t k = 0; k < kept.size(); ++k) kept[k] = k;
  auto rank_of = [&](const std::vector<std::size_t>& cols) {
    RationalMatrix sub(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) sub(i, c) = full(i, cols[c]);
    return rank(sub);
  };
  for (std::size_t k = 0; k < placement.size() && kept.size() > n; ++k) {
    std::vector<std::size_t> trial;
    std::copy_if(kept.begin(), kept.end(), std::back_inserter(trial), [k](std::size_t c) { return c != k; });
    if (rank_of(trial) == n) kept = std::move(trial);
  }
  VariablePlacement minimal;
  for (auto c : kept) minimal.positions.push_back(placement.positions[c]);
  return minimal;
}

nlohmann::json to_json(const VariablePlacement& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& pos : p.positions) out.push_back({pos.row + 1, pos.col + 1});
  return out;
}

VariablePlacement placement_from_json(const nlohmann::json& j) {
  VariablePlacement p;
  try {
    for (const auto& e : j) {
      const auto r = e.at(0).get<long>();
      const auto c = e.at(1).get<long>();
      if (r < 1 || c < 1) throw ParseError("placement positions are 1-based");
      p.positions.push_back({static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("placement JSON: ") + e.what());
  }
  return p;
}

nlohmann::json to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (j.at(i).size() != cols) throw ParseError("matrix JSON: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& e = j.at(i).at(c);
        m(i, c) = e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

nlohmann::json to_json(const CharPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : p.coeffs) out.push_back(f.get_str());
  return out;
}

nlohmann::json to_json(const Certification& c) {
  nlohmann::json j{{"n", c.realization.rows()},
                   {"pattern", to_json(c.pattern)},
                   {"realization", to_json(c.realization)},
                   {"placement", to_json(c.placement)},
                   {"char_poly", to_json(c.char_poly)},
                   {"nilpotent", c.nilpotent},
                   {"jacobian", to_json(c.jacobian)},
                   {"jacobian_rank", c.jacobian_rank},
                   {"full_rank", c.full_rank},
                   {"nonderogatory_check", c.nonderogatory_check},
                   {"irreducible_check", c.irreducible_check},
                   {"certifies_spectrally_arbitrary", c.certifies_spectrally_arbitrary()}};
  j["nilpotency_index"] = c.nilpotency_index ? nlohmann::json(*c.nilpotency_index) : nlohmann::json(nullptr);
  return j;
}

VariablePlacement parse_placement(std::string_view text) {
  VariablePlacement p;
  std::string s(text);
  std::replace(s.begin(), s.end(), ';', ' ');
  std::istringstream in(s);
  std::string item;
  while (in >> item) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("placement entry '" + item + "' must be i,j");
    try {
      const long r = std::stol(item.substr(0, comma));
      const long c = std::stol(item.substr(comma + 1));
      if (r < 1 || c < 1) throw ParseError("placement positions are 1-based");
      p.positions.push_back({static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)});
    } catch (const std::logic_error&) {
      throw ParseError("placement entry '" + item + "' must be i,j");
    }
  }
  return p;
}

}  // namespace sap
