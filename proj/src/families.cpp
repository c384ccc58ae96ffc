#include "sap/families.hpp"

#include "sap/inertia.hpp"

#include <stdexcept>

namespace sap {

namespace {

VariablePlacement placement_1based(std::initializer_list<std::pair<std::size_t, std::size_t>> positions) {
  VariablePlacement p;
  for (auto [r, c] : positions) p.positions.push_back({r - 1, c - 1});
  return p;
}

const RationalMatrix& t2_realization() {
  static const RationalMatrix a{{1, -1}, {1, -1}};
  return a;
}

SeedEntry make_w3() {
  const SignPattern w3{"++-", "+0-", "+0-"};
  // Unequal-index border of T2 with b = 1/2 lands on a pattern equivalent to
  // W3; carry the matrix along the equivalence witness.
  const RationalMatrix b = unequal_index_border(t2_realization(), 0, 1, Rational(1, 2));
  const auto witness = equivalent(sign_of(b), w3);
  if (!witness) throw std::logic_error("seed catalog: W3 witness not found");
  RationalMatrix a = apply_transform(b, *witness);
  return {"W3", w3, a, all_nonzero_placement(a), SeedKind::Nilpotent,
          "image of the T2 unequal-index border (j,k)=(1,2), b=1/2 under an equivalence"};
}

void self_check(const SeedEntry& e) {
  const auto fail = [&](const std::string& why) { throw std::logic_error("seed catalog entry " + e.name + ": " + why); };
  if (!is_realization(e.realization, e.pattern)) fail("realization does not match the pattern");
  if (e.kind == SeedKind::Nilpotent) {
    const auto c = certify_nilpotent_jacobian(e.realization, e.placement);
    if (!c.nilpotent) fail("not nilpotent");
    if (!c.full_rank) fail("Jacobian is not full rank");
  } else {
    const auto r = certify_inertia_jacobian(e.realization, e.placement);
    if (!r.hypothesis_satisfied) fail("refined-inertia hypothesis not satisfied");
  }
}

std::vector<SeedEntry> build_catalog() {
  std::vector<SeedEntry> out;
  out.push_back({"T2", SignPattern{"+-", "+-"}, t2_realization(), placement_1based({{1, 1}, {2, 1}}),
                 SeedKind::Nilpotent, "a_12 is non-Jacobian"});
  {
    RationalMatrix a{{1, -1, 0}, {Rational(1, 2), 0, -1}, {0, Rational(1, 2), -1}};
    out.push_back({"T3", SignPattern{"+-0", "+0-", "0+-"}, a, all_nonzero_placement(a), SeedKind::Nilpotent,
                   "general border of T2 with z=(0,-1), x=(-1/2,1)"});
  }
  {
    RationalMatrix a{{Rational(3, 2), -2, Rational(1, 2)}, {1, -1, 0}, {Rational(1, 2), 0, Rational(-1, 2)}};
    out.push_back({"U3", SignPattern{"+-+", "+-0", "+0-"}, a, all_nonzero_placement(a), SeedKind::Nilpotent,
                   "general border of T2 with z=(1/2,0), x=(-1,2)"});
  }
  {
    RationalMatrix a{{1, -1, 0}, {1, 0, -1}, {1, 0, -1}};
    out.push_back({"V3", SignPattern{"+-0", "+0-", "+0-"}, a, all_nonzero_placement(a, {{2, 0}}),
                   SeedKind::Nilpotent, "a_31 is non-Jacobian; base of the K_n family"});
  }
  out.push_back(make_w3());
  {
    RationalMatrix a{{-1, -1, -1, 0, 0}, {2, 1, 1, 0, 0}, {0, 0, 0, -1, -1}, {0, -1, 0, 0, -1}, {-1, 0, 0, 0, 0}};
    out.push_back({"G5", sign_of(a), a, placement_1based({{1, 2}, {2, 2}, {2, 3}, {3, 5}, {4, 2}}),
                   SeedKind::RefinedInertia,
                   "refined inertia (0,0,3,2), a_13 non-Jacobian; higher orders of the G_(2n+1) family are "
                   "defined elsewhere and not included"});
  }
  {
    RationalMatrix a = direct_sum(t2_realization(), RationalMatrix{{1, -2}, {1, -1}});
    out.push_back({"T2_PLUS_T2", direct_sum(SignPattern{"+-", "+-"}, SignPattern{"+-", "+-"}), a,
                   placement_1based({{1, 2}, {2, 2}, {3, 4}, {4, 4}}), SeedKind::RefinedInertia,
                   "reducible, refined inertia (0,0,2,2)"});
  }
  {
    RationalMatrix a{{0, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, 0, 1}, {1, 0, -1, 1}};
    out.push_back({"EXAMPLE1_A", sign_of(a), a, all_nonzero_placement(a), SeedKind::Nilpotent,
                   "B_4; base of the B_n family"});
  }
  for (const auto& e : out) self_check(e);
  return out;
}

}  // namespace

const std::vector<SeedEntry>& seed_catalog() {
  static const std::vector<SeedEntry> catalog = build_catalog();
  return catalog;
}

const SeedEntry& seed(std::string_view name) {
  for (const auto& e : seed_catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
}

std::optional<std::string> catalog_match(const RationalMatrix& a) {
  for (const auto& e : seed_catalog())
    if (e.realization == a) return e.name;
  if (!a.square()) return std::nullopt;
  return catalog_match(sign_of(a));
}

std::optional<std::string> catalog_match(const SignPattern& p) {
  for (const auto& e : seed_catalog())
    if (e.pattern == p) return e.name;
  return std::nullopt;
}

FamilyMember gen_bn(std::size_t n) {
  if (n < 4) throw std::invalid_argument("B_n is defined for n >= 4");
  auto r = recursive_border(seed("EXAMPLE1_A").realization, BorderStep::equal_index(3, 0), n - 4);
  return {sign_of(r.matrix), std::move(r.matrix), std::move(r.provenance)};
}

FamilyMember gen_kn(std::size_t n) {
  if (n < 4) throw std::invalid_argument("K_n is defined for n >= 4");
  auto r = recursive_border(seed("V3").realization, BorderStep::unequal_index(2, 0, Rational(1), 1), n - 3);
  return {sign_of(r.matrix), std::move(r.matrix), std::move(r.provenance)};
}

}  // namespace sap
