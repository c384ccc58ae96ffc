#pragma once

// Sign patterns, qualitative classes and pattern equivalence.

#include "sap/matrix.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sap {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }
char to_char(Sign s);

class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::size_t n) : n_(n), data_(n * n, Sign::Zero) {}
  /// Rows written with '+', '-', '0'; whitespace between characters is ignored.
  SignPattern(std::initializer_list<std::string_view> rows);

  std::size_t order() const { return n_; }
  Sign& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Sign operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::size_t nonzero_count() const;

  SignPattern transpose() const;
  SignPattern negated() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Sign> data_;
};

SignPattern sign_of(const RationalMatrix& a);
bool is_realization(const RationalMatrix& a, const SignPattern& p);
/// True iff every nonzero of `sub` appears with the same sign in `super`.
bool is_superpattern(const SignPattern& super, const SignPattern& sub);
SignPattern direct_sum(const SignPattern& a, const SignPattern& b);
/// Strong connectivity of the digraph with an arc i -> j per nonzero (i, j).
bool is_irreducible(const SignPattern& p);

/// Composite equivalence transform. Application order is fixed:
///   1. signature similarity  M -> D M D,   D = diag(signature)
///   2. permutation similarity result(perm[i], perm[j]) = M(i, j)
///   3. transpose, if set
///   4. negation, if set
/// All four steps commute up to relabelling, so any composite of the
/// elementary operations has exactly one representation of this form with
/// signature[0] = +1 (D and -D act identically).
struct Transform {
  bool negate = false;
  bool transpose = false;
  std::vector<std::size_t> permutation;
  std::vector<int> signature;

  static Transform identity(std::size_t n);
  std::size_t order() const { return permutation.size(); }
  /// Throws DimensionError unless the permutation is a bijection and the
  /// signature has entries in {+1, -1} of matching length.
  void validate() const;
  Transform inverse() const;
  /// Pins signature[0] to +1.
  Transform normalized() const;

  friend bool operator==(const Transform&, const Transform&) = default;
};

/// `then` after `first`: apply_transform(p, compose(then, first)) ==
/// apply_transform(apply_transform(p, first), then).
Transform compose(const Transform& then, const Transform& first);

SignPattern apply_transform(const SignPattern& p, const Transform& t);
/// The same operation on a realization. Transposition and the similarities
/// preserve the characteristic polynomial; negation maps f_i to (-1)^i f_i.
RationalMatrix apply_transform(const RationalMatrix& a, const Transform& t);

inline constexpr std::size_t kEquivalenceSearchLimit = 7;

class CapabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finds a transform mapping `p` to `q`, or nullopt. Enumeration order is
/// negate (false, true), transpose (false, true), permutations in
/// lexicographic order, signatures with signature[0] = +1 counted in binary
/// (bit i-1 set means signature[i] = -1); the first hit is returned.
/// Throws CapabilityError for order above kEquivalenceSearchLimit.
std::optional<Transform> equivalent(const SignPattern& p, const SignPattern& q);
/// Finds a transform mapping `sub` to some subpattern of `super`, i.e.
/// `super` is a superpattern of a pattern equivalent to `sub`.
std::optional<Transform> superpattern_of_equivalent(const SignPattern& super, const SignPattern& sub);

SignPattern parse_pattern(std::string_view text);
std::string format_pattern(const SignPattern& p);

nlohmann::json to_json(const SignPattern& p);
SignPattern pattern_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Transform& t);

}  // namespace sap
