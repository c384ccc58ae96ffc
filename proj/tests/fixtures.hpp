#pragma once

// Matrices and patterns transcribed from the worked examples.

#include "sap/certify.hpp"
#include "sap/matrix.hpp"
#include "sap/pattern.hpp"

namespace fixtures {

using sap::Rational;
using sap::RationalMatrix;
using sap::SignPattern;

inline Rational half(int p) { return Rational(p, 2); }

inline RationalMatrix t2() { return {{1, -1}, {1, -1}}; }

inline SignPattern t2_pattern() { return {"+-", "+-"}; }
inline SignPattern t3_pattern() { return {"+-0", "+0-", "0+-"}; }
inline SignPattern u3_pattern() { return {"+-+", "+-0", "+0-"}; }
inline SignPattern v3_pattern() { return {"+-0", "+0-", "+0-"}; }
inline SignPattern w3_pattern() { return {"++-", "+0-", "+0-"}; }

inline RationalMatrix b4_seed() { return {{0, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, 0, 1}, {1, 0, -1, 1}}; }
inline SignPattern b4_pattern() { return {"0+00", "0-+0", "+00+", "+0-+"}; }
inline RationalMatrix b5_realization() {
  return {{0, 1, 0, 0, 0}, {0, -1, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, -1, 0, 1}, {1, 0, -1, 0, 1}};
}
inline SignPattern b5_pattern() { return {"0+000", "0-+00", "+00+0", "+0-0+", "+0-0+"}; }

/// T2 realization bordered with (j, k) = (1, 2), as a function of b.
inline RationalMatrix t2_unequal_border(const Rational& b) {
  return {{1, -1 - b, 1}, {1, -1, 0}, {b, -b, 0}};
}

inline RationalMatrix t3_realization() { return {{1, -1, 0}, {half(1), 0, -1}, {0, half(1), -1}}; }
inline RationalMatrix u3_realization() { return {{half(3), -2, half(1)}, {1, -1, 0}, {half(1), 0, half(-1)}}; }
inline RationalMatrix v3_realization() { return {{1, -1, 0}, {1, 0, -1}, {1, 0, -1}}; }

inline RationalMatrix t2_sum() { return {{1, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, -2}, {0, 0, 1, -1}}; }
inline sap::VariablePlacement t2_sum_placement() { return {{{0, 1}, {1, 1}, {2, 3}, {3, 3}}}; }
inline SignPattern t2_sum_border_pattern() { return {"+-000", "+000+", "00+-0", "00+-0", "-000-"}; }

inline RationalMatrix g5() {
  return {{-1, -1, -1, 0, 0}, {2, 1, 1, 0, 0}, {0, 0, 0, -1, -1}, {0, -1, 0, 0, -1}, {-1, 0, 0, 0, 0}};
}
inline sap::VariablePlacement g5_placement() { return {{{0, 1}, {1, 1}, {1, 2}, {2, 4}, {3, 1}}}; }
inline SignPattern g5_border_pattern() { return {"--000+", "+++000", "000--0", "0-00-0", "-00000", "000++0"}; }

/// B_n as displayed: banded rows with the first and third columns filled.
inline SignPattern bn_display(std::size_t n) {
  SignPattern p(n);
  using sap::Sign;
  p(0, 1) = Sign::Plus;
  p(1, 1) = Sign::Minus;
  p(1, 2) = Sign::Plus;
  p(2, 0) = Sign::Plus;
  p(2, 3) = Sign::Plus;
  for (std::size_t r = 3; r < n; ++r) {
    p(r, 0) = Sign::Plus;
    p(r, 2) = Sign::Minus;
    p(r, r + 1 < n ? r + 1 : n - 1) = Sign::Plus;
  }
  return p;
}

/// K_n as displayed.
inline SignPattern kn_display(std::size_t n) {
  SignPattern p(n);
  using sap::Sign;
  p(0, 0) = Sign::Plus;
  p(0, 1) = Sign::Minus;
  p(1, 0) = Sign::Plus;
  p(1, 2) = Sign::Minus;
  p(2, 2) = Sign::Minus;
  p(2, 3) = Sign::Plus;
  for (std::size_t r = 3; r + 1 < n; ++r) {
    p(r, 1) = Sign::Minus;
    p(r, r + 1) = Sign::Plus;
  }
  p(n - 1, 0) = Sign::Plus;
  p(n - 1, 1) = Sign::Minus;
  return p;
}

}  // namespace fixtures
