#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sap/inertia.hpp"

#include <algorithm>

using namespace sap;

namespace {

// [[1, -c], [1, -1]] has characteristic polynomial z^2 + (c - 1).
RationalMatrix rotation_block(const Rational& c) { return {{1, -c}, {1, -1}}; }

RefinedInertia ri(const RationalMatrix& a) { return refined_inertia(a).refined_inertia; }

}  // namespace

TEST_CASE("refined inertia of the block example is exact") {
  const auto c = refined_inertia(fixtures::t2_sum());
  CHECK(c.refined_inertia == RefinedInertia{0, 0, 2, 2});
  CHECK(c.zero_mult_exact);
  CHECK(c.imaginary_exact);
  CHECK_FALSE(c.tolerance_used.has_value());
}

TEST_CASE("refined inertia examples") {
  CHECK(ri(fixtures::g5()) == RefinedInertia{0, 0, 3, 2});
  CHECK(ri(RationalMatrix::identity(3)) == RefinedInertia{3, 0, 0, 0});
  CHECK(ri(-RationalMatrix::identity(3)) == RefinedInertia{0, 3, 0, 0});
  CHECK(ri(RationalMatrix(4, 4)) == RefinedInertia{0, 0, 4, 0});
  CHECK(ri(fixtures::b4_seed()) == RefinedInertia{0, 0, 4, 0});
  CHECK(ri(RationalMatrix(0, 0)) == RefinedInertia{});

  // Not even in z: numeric path.
  const auto mixed = direct_sum(RationalMatrix{{1, 0}, {0, -2}}, RationalMatrix{{0, -1}, {1, 0}});
  const auto c = refined_inertia(mixed);
  CHECK(c.refined_inertia == RefinedInertia{1, 1, 0, 2});
  CHECK_FALSE(c.imaginary_exact);
  CHECK(c.tolerance_used == kDefaultInertiaTolerance);

  // w-degree 3: even but outside the exact path.
  const auto three = direct_sum(direct_sum(rotation_block(2), rotation_block(3)), rotation_block(5));
  const auto c3 = refined_inertia(three);
  CHECK(c3.refined_inertia == RefinedInertia{0, 0, 0, 6});
  CHECK_FALSE(c3.imaginary_exact);

  // Even in z with a positive w root: z^2 - 1.
  CHECK(ri(RationalMatrix{{0, 1}, {1, 0}}) == RefinedInertia{1, 1, 0, 0});
}

TEST_CASE("polynomial_roots and balance") {
  auto roots = polynomial_roots({-3, 2});  // z^2 - 3z + 2
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == doctest::Approx(1.0));
  CHECK(roots[1].real() == doctest::Approx(2.0));
  CHECK(polynomial_roots({}).empty());

  std::vector<std::vector<double>> m{{1, 1e6}, {1e-6, 1}};
  balance(m);
  CHECK(std::abs(m[0][1]) < 1e3);
  CHECK(m[0][1] * m[1][0] == doctest::Approx(1.0));
}

TEST_CASE("inertia invariants on random matrices") {
  oracle::RandomRationals rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    auto a = rng.matrix(n, n, 0.4);
    if (trial % 3 == 0) a = direct_sum(a, RationalMatrix(2, 2));
    const auto c = refined_inertia(a);
    const auto& r = c.refined_inertia;
    CHECK(r.order() == a.rows());
    CHECK(r.imag_pairs_count % 2 == 0);
    CHECK(r.zero_mult == char_poly(a).zero_root_multiplicity());
    const auto neg = ri(-a);
    CHECK(neg.n_plus == r.n_minus);
    CHECK(neg.n_minus == r.n_plus);
    CHECK(neg.zero_mult == r.zero_mult);
    CHECK(neg.imag_pairs_count == r.imag_pairs_count);

    // Cross-check c1 with the oracle's eigenvalues.
    const auto coeffs = oracle::coeffs_from_eigenvalues(oracle::to_double(a).cast<long double>());
    std::size_t tiny_trailing = 0;
    for (std::size_t i = coeffs.size(); i-- > 0 && std::abs(static_cast<double>(coeffs[i])) < 1e-9;) ++tiny_trailing;
    CHECK(tiny_trailing == r.zero_mult);
  }
}

TEST_CASE("certify_inertia_jacobian") {
  const auto r = certify_inertia_jacobian(fixtures::t2_sum(), fixtures::t2_sum_placement());
  CHECK(r.hypothesis_satisfied);
  CHECK(r.certification.jacobian_rank == 4);
  CHECK_FALSE(r.certification.irreducible_check);

  const auto nil = certify_inertia_jacobian(fixtures::b4_seed(), all_nonzero_placement(fixtures::b4_seed()));
  CHECK(nil.hypothesis_satisfied);
  CHECK(nil.inertia.refined_inertia == RefinedInertia{0, 0, 4, 0});

  const auto id = RationalMatrix::identity(2);
  CHECK_FALSE(certify_inertia_jacobian(id, all_nonzero_placement(id)).hypothesis_satisfied);
}

TEST_CASE("equal-index inertial border on the block example") {
  const auto res = inertial_equal_index_border(fixtures::t2_sum(), 1, 0, fixtures::t2_sum_placement());
  CHECK(res.preconditions.ok());
  CHECK(sign_of(res.matrix) == fixtures::t2_sum_border_pattern());
  CHECK(res.after.inertia.refined_inertia == RefinedInertia{0, 0, 3, 2});
  CHECK(res.expected == RefinedInertia{0, 0, 3, 2});
  CHECK(res.conclusion_holds);
  CHECK(res.after.certification.full_rank);
  CHECK(char_poly(res.matrix).coeffs == std::vector<Rational>{0, 1, 0, 0, 0});
  const auto w = equivalent(sign_of(res.matrix), direct_sum(fixtures::t2_pattern(), fixtures::v3_pattern()));
  CHECK(w.has_value());
}

TEST_CASE("unequal-index inertial border on G5") {
  const auto res = inertial_unequal_index_border(fixtures::g5(), 0, 2, -1, 3, fixtures::g5_placement());
  CHECK(res.preconditions.ok());
  CHECK(sign_of(res.matrix) == fixtures::g5_border_pattern());
  CHECK(res.after.inertia.refined_inertia == RefinedInertia{0, 0, 4, 2});
  CHECK(res.conclusion_holds);
  // Inertially arbitrary without a nilpotent realization.
  CHECK_FALSE(res.after.certification.nilpotent);
  CHECK(res.after.hypothesis_satisfied);
}

TEST_CASE("inertial border hypothesis failures") {
  const auto a = fixtures::t2_sum();
  const auto p = fixtures::t2_sum_placement();
  CHECK_THROWS_AS(inertial_unequal_index_border(fixtures::g5(), 0, 2, 0, 3, fixtures::g5_placement()),
                  BorderPreconditionError);
  // a_33 of G5 is zero.
  CHECK_THROWS_AS(inertial_equal_index_border(fixtures::g5(), 2, 3, fixtures::g5_placement()), BorderPreconditionError);
  // v == k
  CHECK_THROWS_AS(inertial_equal_index_border(a, 1, 1, p), BorderPreconditionError);
  // (j, k) = (1, 2) is a variable position.
  CHECK_THROWS_AS(inertial_unequal_index_border(a, 0, 1, 1, 0, p), BorderPreconditionError);
  // A = I_2 fails the inertia hypothesis.
  const auto id = RationalMatrix::identity(2);
  try {
    inertial_equal_index_border(id, 0, 1, all_nonzero_placement(id));
    FAIL("expected a precondition error");
  } catch (const BorderPreconditionError& e) {
    CHECK(std::string(e.what()).find("refined inertia") != std::string::npos);
  }
}

TEST_CASE("inertial borders on random T2-type direct sums") {
  oracle::RandomRationals rng(52);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational c = 1 + abs(rng.value(4, 3)) + Rational(1, 7);
    RationalMatrix a = direct_sum(fixtures::t2(), rotation_block(c));
    if (trial % 2) {
      const Rational d = c + 1 + abs(rng.value(3, 2));
      a = direct_sum(a, rotation_block(d));
    }
    const auto placement = find_full_rank_placement(a);
    if (!placement) continue;
    const auto before = certify_inertia_jacobian(a, *placement);
    REQUIRE(before.hypothesis_satisfied);
    CHECK(before.inertia.imaginary_exact);

    // k = 2, v = 1 (1-based): a_22 = -1, a_21 = 1, det A(2,1) != 0.
    const auto eq = inertial_equal_index_border(a, 1, 0, *placement);
    CHECK(eq.conclusion_holds);
    auto expected = before.inertia.refined_inertia;
    ++expected.zero_mult;
    CHECK(eq.after.inertia.refined_inertia == expected);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("inertia JSON") {
  CHECK(to_json(RefinedInertia{0, 0, 2, 2}).dump() == "[0,0,2,2]");
  const auto j = to_json(refined_inertia(fixtures::t2_sum()));
  CHECK(j["imaginary_exact"] == true);
  CHECK(j["refined_inertia"] == nlohmann::json::array({0, 0, 2, 2}));
}
