#pragma once

// Catalog of base patterns with exact realizations, and the B_n / K_n
// families grown from them by repeated standard unit bordering.

#include "sap/border.hpp"
#include "sap/certify.hpp"
#include "sap/pattern.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sap {

enum class SeedKind { Nilpotent, RefinedInertia };

struct SeedEntry {
  std::string name;
  SignPattern pattern;
  RationalMatrix realization;
  VariablePlacement placement;
  SeedKind kind = SeedKind::Nilpotent;
  std::string note;
};

/// T2, T3, U3, V3, W3, G5, T2_PLUS_T2, EXAMPLE1_A.
///
/// G5 is the order-5 member of the G_(2n+1) family only; the general
/// matrices are not reproduced here.
const std::vector<SeedEntry>& seed_catalog();
/// Throws std::out_of_range for unknown names.
const SeedEntry& seed(std::string_view name);
/// Name of a catalog entry whose realization (or, failing that, pattern)
/// equals the input.
std::optional<std::string> catalog_match(const RationalMatrix& a);
std::optional<std::string> catalog_match(const SignPattern& p);

struct FamilyMember {
  SignPattern pattern;
  RationalMatrix realization;
  BorderProvenance provenance;
};

/// n >= 4. Equal-index bordering of EXAMPLE1_A with k advancing to the last
/// row and v = 1.
FamilyMember gen_bn(std::size_t n);
/// n >= 4. Unequal-index bordering of V3 with b = k = 1, v = 2 and j
/// advancing from 3.
FamilyMember gen_kn(std::size_t n);

}  // namespace sap
