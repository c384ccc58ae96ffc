#include "doctest.h"

#include "fixtures.hpp"
#include "sap/families.hpp"
#include "sap/inertia.hpp"

using namespace sap;

TEST_CASE("seed catalog contents") {
  const auto& cat = seed_catalog();
  REQUIRE(cat.size() == 8);
  const std::vector<std::string> names{"T2", "T3", "U3", "V3", "W3", "G5", "T2_PLUS_T2", "EXAMPLE1_A"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(cat[i].name == names[i]);

  CHECK(seed("T3").realization == fixtures::t3_realization());
  CHECK(seed("U3").realization == fixtures::u3_realization());
  CHECK(seed("V3").realization == fixtures::v3_realization());
  CHECK(seed("G5").realization == fixtures::g5());
  CHECK(seed("EXAMPLE1_A").realization == fixtures::b4_seed());
  CHECK(seed("T2_PLUS_T2").realization == fixtures::t2_sum());
  CHECK(seed("W3").pattern == fixtures::w3_pattern());
  CHECK_THROWS_AS(seed("X9"), std::out_of_range);
}

TEST_CASE("every seed certifies") {
  for (const auto& e : seed_catalog()) {
    CAPTURE(e.name);
    CHECK(is_realization(e.realization, e.pattern));
    const auto j = jacobian(e.realization, e.placement);
    CHECK(rank(j) == e.realization.rows());
    if (e.kind == SeedKind::Nilpotent) CHECK(is_nilpotent(e.realization));
  }
  const auto g = refined_inertia(seed("G5").realization).refined_inertia;
  CHECK(g == RefinedInertia{0, 0, 3, 2});
}

TEST_CASE("catalog_match") {
  CHECK(catalog_match(fixtures::t3_realization()) == "T3");
  CHECK(catalog_match(fixtures::v3_pattern()) == "V3");
  CHECK(catalog_match(fixtures::b5_pattern()) == std::nullopt);
}

TEST_CASE("B_n family") {
  const auto b4 = gen_bn(4);
  CHECK(b4.realization == fixtures::b4_seed());
  CHECK(b4.pattern == fixtures::b4_pattern());
  CHECK(gen_bn(5).realization == fixtures::b5_realization());

  for (std::size_t n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto m = gen_bn(n);
    CHECK(m.pattern == fixtures::bn_display(n));
    CHECK(m.pattern.nonzero_count() == 3 * n - 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(abs(m.realization(i, j)) <= 1);
    CHECK(index_of_nilpotency(m.realization) == static_cast<unsigned>(n));
    CHECK(is_irreducible(m.pattern));
    REQUIRE(m.provenance.final_certification);
    CHECK(m.provenance.final_certification->certifies_spectrally_arbitrary());
    CHECK(m.provenance.replay() == m.realization);
  }
  CHECK_THROWS_AS(gen_bn(3), std::invalid_argument);
}

TEST_CASE("K_n family") {
  CHECK(gen_kn(4).pattern == SignPattern{"+-00", "+0-0", "00-+", "+-00"});
  for (std::size_t n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto m = gen_kn(n);
    CHECK(m.pattern == fixtures::kn_display(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(abs(m.realization(i, j)) <= 1);
    CHECK(is_nilpotent(m.realization));
    CHECK(m.provenance.final_certification->certifies_spectrally_arbitrary());
  }
  CHECK_THROWS_AS(gen_kn(2), std::invalid_argument);
}
