#include "sap/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sap {

namespace {

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: throw ParseError(std::string("invalid sign character '") + c + "'");
  }
}

std::vector<Sign> parse_row(std::string_view row) {
  std::vector<Sign> out;
  for (char c : row)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(sign_from_char(c));
  return out;
}

SignPattern from_rows(const std::vector<std::vector<Sign>>& rows) {
  SignPattern p(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ParseError("sign pattern must be square: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) p(i, j) = rows[i][j];
  }
  return p;
}

Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

void require_order(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": order mismatch (" + std::to_string(a) + " vs " + std::to_string(b) +
                         ")");
}

// Enumerates transforms in the documented order and returns the first one
// accepted by `accept(source_after_transpose, negate, perm, signature)`.
template <typename Accept>
std::optional<Transform> search(const SignPattern& source, Accept accept) {
  const std::size_t n = source.order();
  if (n > kEquivalenceSearchLimit)
    throw CapabilityError("equivalence search supports order <= " + std::to_string(kEquivalenceSearchLimit) +
                          ", got " + std::to_string(n));
  std::vector<int> sig(n, 1);
  const std::size_t sig_count = n == 0 ? 1 : (std::size_t{1} << (n - 1));
  for (bool negate : {false, true}) {
    for (bool transpose : {false, true}) {
      const SignPattern x = transpose ? source.transpose() : source;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        for (std::size_t bits = 0; bits < sig_count; ++bits) {
          for (std::size_t i = 1; i < n; ++i) sig[i] = (bits >> (i - 1)) & 1U ? -1 : 1;
          if (accept(x, negate, perm, sig)) return Transform{negate, transpose, perm, sig};
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return std::nullopt;
}

Sign transformed(Sign s, bool negate, int si, int sj) {
  int v = static_cast<int>(s) * si * sj;
  return static_cast<Sign>(negate ? -v : v);
}

}  // namespace

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

SignPattern::SignPattern(std::initializer_list<std::string_view> rows) {
  std::vector<std::vector<Sign>> parsed;
  for (auto r : rows) parsed.push_back(parse_row(r));
  *this = from_rows(parsed);
}

std::size_t SignPattern::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Sign s) { return s != Sign::Zero; }));
}

SignPattern SignPattern::transpose() const {
  SignPattern t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SignPattern SignPattern::negated() const {
  SignPattern t = *this;
  for (auto& s : t.data_) s = -s;
  return t;
}

SignPattern sign_of(const RationalMatrix& a) {
  if (!a.square()) throw DimensionError("sign_of: expected a square matrix");
  SignPattern p(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = sign_of(a(i, j));
  return p;
}

bool is_realization(const RationalMatrix& a, const SignPattern& p) {
  if (!a.square()) throw DimensionError("is_realization: expected a square matrix");
  require_order(a.rows(), p.order(), "is_realization");
  return sign_of(a) == p;
}

bool is_superpattern(const SignPattern& super, const SignPattern& sub) {
  require_order(super.order(), sub.order(), "is_superpattern");
  for (std::size_t i = 0; i < sub.order(); ++i)
    for (std::size_t j = 0; j < sub.order(); ++j)
      if (sub(i, j) != Sign::Zero && super(i, j) != sub(i, j)) return false;
  return true;
}

SignPattern direct_sum(const SignPattern& a, const SignPattern& b) {
  SignPattern p(a.order() + b.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) p(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j) p(a.order() + i, a.order() + j) = b(i, j);
  return p;
}

bool is_irreducible(const SignPattern& p) {
  const std::size_t n = p.order();
  if (n == 0) return false;
  // Vertex 0 must reach every vertex along arcs and along reversed arcs.
  auto reaches_all = [&](bool reversed) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const Sign s = reversed ? p(w, u) : p(u, w);
        if (s != Sign::Zero && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(false) && reaches_all(true);
}

Transform Transform::identity(std::size_t n) {
  Transform t;
  t.permutation.resize(n);
  std::iota(t.permutation.begin(), t.permutation.end(), std::size_t{0});
  t.signature.assign(n, 1);
  return t;
}

void Transform::validate() const {
  const std::size_t n = permutation.size();
  if (signature.size() != n) throw DimensionError("transform: signature length differs from permutation length");
  std::vector<bool> hit(n, false);
  for (auto p : permutation) {
    if (p >= n || hit[p]) throw DimensionError("transform: permutation is not a bijection");
    hit[p] = true;
  }
  for (int s : signature)
    if (s != 1 && s != -1) throw DimensionError("transform: signature entries must be +1 or -1");
}

Transform Transform::inverse() const {
  validate();
  const std::size_t n = order();
  Transform t{negate, transpose, std::vector<std::size_t>(n), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.permutation[permutation[i]] = i;
    t.signature[permutation[i]] = signature[i];
  }
  return t.normalized();
}

Transform Transform::normalized() const {
  Transform t = *this;
  if (!t.signature.empty() && t.signature[0] < 0)
    for (auto& s : t.signature) s = -s;
  return t;
}

Transform compose(const Transform& then, const Transform& first) {
  then.validate();
  first.validate();
  require_order(then.order(), first.order(), "compose");
  const std::size_t n = first.order();
  Transform t;
  t.negate = then.negate != first.negate;
  t.transpose = then.transpose != first.transpose;
  t.permutation.resize(n);
  t.signature.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.permutation[i] = then.permutation[first.permutation[i]];
    t.signature[i] = then.signature[first.permutation[i]] * first.signature[i];
  }
  return t.normalized();
}

SignPattern apply_transform(const SignPattern& p, const Transform& t) {
  t.validate();
  require_order(p.order(), t.order(), "apply_transform");
  const std::size_t n = p.order();
  const SignPattern x = t.transpose ? p.transpose() : p;
  SignPattern out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(t.permutation[i], t.permutation[j]) = transformed(x(i, j), t.negate, t.signature[i], t.signature[j]);
  return out;
}

RationalMatrix apply_transform(const RationalMatrix& a, const Transform& t) {
  t.validate();
  if (!a.square()) throw DimensionError("apply_transform: expected a square matrix");
  require_order(a.rows(), t.order(), "apply_transform");
  const std::size_t n = a.rows();
  const RationalMatrix x = t.transpose ? a.transpose() : a;
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = x(i, j) * (t.signature[i] * t.signature[j] * (t.negate ? -1 : 1));
      out(t.permutation[i], t.permutation[j]) = v;
    }
  return out;
}

std::optional<Transform> equivalent(const SignPattern& p, const SignPattern& q) {
  require_order(p.order(), q.order(), "equivalent");
  const std::size_t n = p.order();
  if (p.nonzero_count() != q.nonzero_count()) {
    if (n > kEquivalenceSearchLimit)
      throw CapabilityError("equivalence search supports order <= " + std::to_string(kEquivalenceSearchLimit));
    return std::nullopt;
  }
  return search(p, [&](const SignPattern& x, bool negate, const std::vector<std::size_t>& perm,
                       const std::vector<int>& sig) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (q(perm[i], perm[j]) != transformed(x(i, j), negate, sig[i], sig[j])) return false;
    return true;
  });
}

std::optional<Transform> superpattern_of_equivalent(const SignPattern& super, const SignPattern& sub) {
  require_order(super.order(), sub.order(), "superpattern_of_equivalent");
  const std::size_t n = sub.order();
  return search(sub, [&](const SignPattern& x, bool negate, const std::vector<std::size_t>& perm,
                         const std::vector<int>& sig) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x(i, j) != Sign::Zero && super(perm[i], perm[j]) != transformed(x(i, j), negate, sig[i], sig[j]))
          return false;
    return true;
  });
}

SignPattern parse_pattern(std::string_view text) {
  std::vector<std::vector<Sign>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      rows.push_back(parse_row(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return from_rows(rows);
}

std::string format_pattern(const SignPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.order(); ++i) {
    for (std::size_t j = 0; j < p.order(); ++j) out += to_char(p(i, j));
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const SignPattern& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < p.order(); ++i) {
    std::string r;
    for (std::size_t j = 0; j < p.order(); ++j) r += to_char(p(i, j));
    rows.push_back(r);
  }
  return {{"n", p.order()}, {"rows", rows}};
}

SignPattern pattern_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::vector<Sign>> rows;
    for (const auto& r : j.at("rows")) rows.push_back(parse_row(r.get<std::string>()));
    if (rows.size() != n) throw ParseError("pattern JSON: 'n' does not match the number of rows");
    return from_rows(rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pattern JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Transform& t) {
  std::vector<std::size_t> perm1;
  for (auto p : t.permutation) perm1.push_back(p + 1);
  return {{"negate", t.negate}, {"transpose", t.transpose}, {"permutation", perm1}, {"signature", t.signature}};
}

}  // namespace sap
