#include "sap/border.hpp"

#include <sstream>

namespace sap {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::vector<Rational> unit(std::size_t n, std::size_t i, const Rational& scale = 1) {
  std::vector<Rational> e(n, Rational(0));
  e.at(i) = scale;
  return e;
}

bool in_range(const RationalMatrix& a, std::size_t i) { return i < a.rows(); }

}  // namespace

const char* to_string(BorderKind kind) {
  switch (kind) {
    case BorderKind::General: return "general";
    case BorderKind::EqualIndex: return "equal_index";
    case BorderKind::UnequalIndex: return "unequal_index";
  }
  return "unknown";
}

BorderStep BorderStep::general(std::vector<Rational> x, std::vector<Rational> z) {
  BorderStep s;
  s.kind = BorderKind::General;
  s.x = std::move(x);
  s.z = std::move(z);
  return s;
}

BorderStep BorderStep::equal_index(std::size_t k, std::optional<std::size_t> v) {
  BorderStep s;
  s.kind = BorderKind::EqualIndex;
  s.k = k;
  s.v = v;
  return s;
}

BorderStep BorderStep::unequal_index(std::size_t j, std::size_t k, Rational b, std::optional<std::size_t> v) {
  BorderStep s;
  s.kind = BorderKind::UnequalIndex;
  s.j = j;
  s.k = k;
  s.b = std::move(b);
  s.v = v;
  return s;
}

RationalMatrix general_border(const RationalMatrix& a, const std::vector<Rational>& x, const std::vector<Rational>& z) {
  if (!a.square()) throw DimensionError("general_border: expected a square matrix");
  const std::size_t n = a.rows();
  if (x.size() != n || z.size() != n) throw DimensionError("general_border: x and z must have length " + std::to_string(n));
  RationalMatrix b(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) b(i, c) = a(i, c) - z[i] * x[c];
  for (std::size_t c = 0; c < n; ++c) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * b(i, c);
    b(n, c) = s;
  }
  Rational xz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    b(i, n) = z[i];
    xz += x[i] * z[i];
  }
  b(n, n) = xz;
  return b;
}

RationalMatrix equal_index_border(const RationalMatrix& a, std::size_t k) {
  if (!a.square()) throw DimensionError("equal_index_border: expected a square matrix");
  if (!in_range(a, k)) throw DimensionError("equal_index_border: k out of range");
  const Rational akk = a(k, k);
  if (sgn(akk) == 0) throw BorderPreconditionError("equal_index_border: a_" + idx(k) + idx(k) + " = 0");
  const std::size_t n = a.rows();
  RationalMatrix b(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) b(i, c) = a(i, c);
  b(k, k) = 0;
  for (std::size_t c = 0; c < n; ++c) b(n, c) = akk * b(k, c);
  b(k, n) = 1;
  b(n, n) = akk;
  return b;
}

RationalMatrix unequal_index_border(const RationalMatrix& a, std::size_t j, std::size_t k, const Rational& bval) {
  if (!a.square()) throw DimensionError("unequal_index_border: expected a square matrix");
  if (!in_range(a, j) || !in_range(a, k)) throw DimensionError("unequal_index_border: index out of range");
  if (j == k) throw BorderPreconditionError("unequal_index_border: j = k = " + idx(j));
  if (sgn(bval) == 0) throw BorderPreconditionError("unequal_index_border: b = 0");
  const std::size_t n = a.rows();
  RationalMatrix b(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) b(i, c) = a(i, c);
  b(j, k) -= bval;
  for (std::size_t c = 0; c < n; ++c) b(n, c) = bval * b(k, c);
  b(j, n) = 1;
  return b;
}

std::pair<std::vector<Rational>, std::vector<Rational>> border_vectors(const RationalMatrix& a, const BorderStep& step) {
  const std::size_t n = a.rows();
  switch (step.kind) {
    case BorderKind::General: return {step.x, step.z};
    case BorderKind::EqualIndex: return {unit(n, step.k, a.at(step.k, step.k)), unit(n, step.k)};
    case BorderKind::UnequalIndex: return {unit(n, step.k, step.b), unit(n, step.j)};
  }
  return {};
}

RationalMatrix apply_step(const RationalMatrix& a, const BorderStep& step) {
  switch (step.kind) {
    case BorderKind::General: return general_border(a, step.x, step.z);
    case BorderKind::EqualIndex: return equal_index_border(a, step.k);
    case BorderKind::UnequalIndex: return unequal_index_border(a, step.j, step.k, step.b);
  }
  throw std::logic_error("apply_step: unknown kind");
}

std::vector<std::size_t> last_row_cancellations(const RationalMatrix& a, const BorderStep& step, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  const auto [x, z] = border_vectors(a, step);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n; ++c) {
    bool expected = false;
    for (std::size_t i = 0; i < n && !expected; ++i) expected = sgn(x[i]) != 0 && sgn(b(i, c)) != 0;
    if (expected && sgn(b(n, c)) == 0) out.push_back(c);
  }
  return out;
}

bool PreconditionReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string PreconditionReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += "; ";
    out += c.name;
  }
  return out;
}

PreconditionReport check_theorem2(const RationalMatrix& a, std::size_t k, std::size_t v,
                                  const Certification* certification) {
  PreconditionReport r;
  const bool square = a.square();
  const bool k_ok = square && in_range(a, k);
  const bool v_ok = square && in_range(a, v);
  r.add("a_" + idx(k) + idx(k) + " != 0", k_ok && sgn(a(k, k)) != 0);
  r.add("a_" + idx(k) + idx(v) + " != 0 with v != k", k_ok && v_ok && v != k && sgn(a(k, v)) != 0);
  r.add("det A(" + idx(k) + "," + idx(v) + ") != 0", k_ok && v_ok && sgn(det(minor_matrix(a, k, v))) != 0);
  if (certification) {
    r.add("A is nilpotent", certification->nilpotent);
    r.add("A allows a full-rank Jacobian", certification->full_rank);
  }
  return r;
}

PreconditionReport check_theorem4(const RationalMatrix& a, const VariablePlacement& placement, std::size_t j,
                                  std::size_t k, std::size_t v, const Certification* certification) {
  PreconditionReport r;
  const bool square = a.square();
  const bool j_ok = square && in_range(a, j);
  const bool k_ok = square && in_range(a, k);
  const bool v_ok = square && in_range(a, v);
  r.add("a_" + idx(j) + idx(k) + " is non-Jacobian (not in the placement)", !placement.contains({j, k}));
  r.add("j != k", j != k);
  r.add("a_" + idx(k) + idx(v) + " != 0", k_ok && v_ok && sgn(a(k, v)) != 0);
  r.add("det A(" + idx(j) + "," + idx(v) + ") != 0", j_ok && v_ok && sgn(det(minor_matrix(a, j, v))) != 0);
  if (certification) {
    r.add("A is nilpotent", certification->nilpotent);
    r.add("A allows a full-rank Jacobian", certification->full_rank);
  }
  return r;
}

int bordered_minor_sign(std::size_t row, std::size_t n) { return (row + 1 + n) % 2 == 0 ? 1 : -1; }

RationalMatrix BorderProvenance::replay() const {
  RationalMatrix m = base;
  for (const auto& s : steps) m = apply_step(m, s);
  return m;
}

BorderStep advance_step(const BorderStep& step, std::size_t new_order) {
  BorderStep next = step;
  const std::size_t last = new_order - 1;
  if (step.kind == BorderKind::EqualIndex) next.k = last;
  if (step.kind == BorderKind::UnequalIndex) next.j = last;
  return next;
}

RecursiveBorderResult recursive_border(const RationalMatrix& a, const BorderStep& first, std::size_t count,
                                       const BorderOptions& options, const StepFunction& next) {
  if (first.kind == BorderKind::General)
    throw BorderPreconditionError("recursive_border: step kind must be equal_index or unequal_index");
  if (!a.square()) throw DimensionError("recursive_border: expected a square matrix");
  if (!first.v) throw BorderPreconditionError("recursive_border: the hypothesis column v is required");

  RecursiveBorderResult out;
  out.provenance.base = a;
  RationalMatrix current = a;
  BorderStep step = first;
  for (std::size_t round = 1; round <= count; ++round) {
    const std::size_t n = current.rows();
    const std::string tag = "round " + std::to_string(round) + " (order " + std::to_string(n) + "): ";
    RoundSummary summary;
    summary.order = n;
    summary.step = step;

    const bool equal = step.kind == BorderKind::EqualIndex;
    const std::size_t row = equal ? step.k : step.j;
    const std::size_t v = *step.v;
    if (!in_range(current, row) || !in_range(current, v) || !in_range(current, step.k))
      throw BorderPreconditionError(tag + "index out of range");

    std::optional<VariablePlacement> placement =
        equal ? std::optional(all_nonzero_placement(current)) : find_full_rank_placement(current, {{step.j, step.k}});
    if (!placement)
      throw BorderPreconditionError(tag + "no full-rank placement with a_" + idx(step.j) + idx(step.k) +
                                    " non-Jacobian");
    const Certification cert = certify_nilpotent_jacobian(current, *placement);
    summary.placement = *placement;
    summary.nilpotent = cert.nilpotent;
    summary.jacobian_rank = cert.jacobian_rank;
    summary.full_rank = cert.full_rank;
    summary.preconditions = equal ? check_theorem2(current, step.k, v, &cert)
                                  : check_theorem4(current, *placement, step.j, step.k, v, &cert);
    if (!summary.preconditions.ok()) throw BorderPreconditionError(tag + summary.preconditions.failures());

    RationalMatrix bordered = apply_step(current, step);

    summary.cancellations = last_row_cancellations(current, step, bordered);
    if (!summary.cancellations.empty() && options.cancellation_is_error)
      throw BorderPreconditionError(tag + "cancellation in the new last row at column " +
                                    idx(summary.cancellations.front()));

    summary.det_minor_before = det(minor_matrix(current, row, v));
    summary.det_minor_after = det(minor_matrix(bordered, n, v));
    summary.det_sign = bordered_minor_sign(row, n);
    summary.det_identity_holds = summary.det_minor_after == summary.det_minor_before * summary.det_sign;
    if (!summary.det_identity_holds) throw std::logic_error(tag + "bordered-minor determinant identity violated");

    out.provenance.steps.push_back(step);
    out.provenance.rounds.push_back(std::move(summary));
    step = next ? next(bordered, step) : advance_step(step, bordered.rows());
    current = std::move(bordered);
  }
  out.provenance.final_certification = certify_nilpotent_jacobian(current);
  out.matrix = std::move(current);
  return out;
}

nlohmann::json to_json(const BorderStep& s) {
  nlohmann::json j{{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case BorderKind::General: {
      nlohmann::json x = nlohmann::json::array(), z = nlohmann::json::array();
      for (const auto& q : s.x) x.push_back(q.get_str());
      for (const auto& q : s.z) z.push_back(q.get_str());
      j["x"] = x;
      j["z"] = z;
      break;
    }
    case BorderKind::EqualIndex: j["k"] = s.k + 1; break;
    case BorderKind::UnequalIndex:
      j["j"] = s.j + 1;
      j["k"] = s.k + 1;
      j["b"] = s.b.get_str();
      break;
  }
  j["v"] = s.v ? nlohmann::json(*s.v + 1) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const PreconditionReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

nlohmann::json to_json(const BorderProvenance& p) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : p.steps) steps.push_back(to_json(s));
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : p.rounds) {
    nlohmann::json cancel = nlohmann::json::array();
    for (auto c : r.cancellations) cancel.push_back(c + 1);
    rounds.push_back({{"order", r.order},
                      {"placement", to_json(r.placement)},
                      {"preconditions", to_json(r.preconditions)},
                      {"nilpotent", r.nilpotent},
                      {"jacobian_rank", r.jacobian_rank},
                      {"full_rank", r.full_rank},
                      {"det_minor_before", r.det_minor_before.get_str()},
                      {"det_minor_after", r.det_minor_after.get_str()},
                      {"det_sign", r.det_sign},
                      {"det_identity_holds", r.det_identity_holds},
                      {"cancellations", cancel}});
  }
  nlohmann::json j{{"base", to_json(p.base)}, {"steps", steps}, {"rounds", rounds}};
  if (p.final_certification) {
    const auto& c = *p.final_certification;
    j["final"] = {{"n", c.realization.rows()},
                  {"nilpotent", c.nilpotent},
                  {"jacobian_rank", c.jacobian_rank},
                  {"full_rank", c.full_rank}};
  }
  return j;
}

}  // namespace sap
