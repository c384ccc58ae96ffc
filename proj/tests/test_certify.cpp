#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sap/certify.hpp"

#include <algorithm>

using namespace sap;

namespace {

VariablePlacement random_placement(oracle::RandomRationals& rng, const RationalMatrix& a) {
  auto all = all_nonzero_placement(a).positions;
  std::shuffle(all.begin(), all.end(), rng.engine());
  all.resize(1 + rng.index(all.size()));
  return {all};
}

}  // namespace

TEST_CASE("jacobian of an order-1 matrix") {
  const RationalMatrix a{{Rational(5, 3)}};
  CHECK(jacobian(a, {{{0, 0}}}) == RationalMatrix{{-1}});
  CHECK(jacobian_by_minors(a, {{{0, 0}}}) == RationalMatrix{{-1}});
}

TEST_CASE("jacobian of T2 by hand") {
  // f1 = -(a11 + a22), f2 = a11 a22 - a12 a21
  const auto j = jacobian(fixtures::t2(), all_nonzero_placement(fixtures::t2()));
  CHECK(j == RationalMatrix{{-1, 0, 0, -1}, {-1, -1, 1, 1}});
}

TEST_CASE("block example: four-variable placement has rank 4") {
  const auto j = jacobian(fixtures::t2_sum(), fixtures::t2_sum_placement());
  CHECK(j.rows() == 4);
  CHECK(j.cols() == 4);
  CHECK(rank(j) == 4);
  CHECK(oracle::gauss_rank(j) == 4);
}

TEST_CASE("invalid placements") {
  const auto a = fixtures::t2();
  CHECK_THROWS_AS(jacobian(RationalMatrix{{1, 0}, {0, 1}}, {{{0, 1}}}), InvalidPlacement);
  CHECK_THROWS_AS(jacobian(a, {{{0, 0}, {0, 0}}}), InvalidPlacement);
  CHECK_THROWS_AS(jacobian(a, {{{2, 0}}}), InvalidPlacement);
  CHECK_THROWS_AS(certify_nilpotent_jacobian(a, {{{5, 5}}}), InvalidPlacement);
}

TEST_CASE("jacobian agrees with the finite-difference oracle") {
  oracle::RandomRationals rng(31);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const auto a = rng.matrix(n, n, 0.3);
    if (a.nonzero_count() == 0) continue;
    const auto placement = random_placement(rng, a);
    const auto exact = oracle::to_double(jacobian(a, placement));
    const auto fd = oracle::finite_difference_jacobian(a, placement);
    worst = std::max(worst, (exact - fd).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("adjugate and minor routes give the same jacobian") {
  oracle::RandomRationals rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.index(5);
    const auto a = rng.matrix(n, n, 0.3);
    if (a.nonzero_count() == 0) continue;
    const auto placement = all_nonzero_placement(a);
    CHECK(jacobian(a, placement) == jacobian_by_minors(a, placement));
  }
}

TEST_CASE("permuting the placement permutes the columns") {
  oracle::RandomRationals rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const auto a = rng.matrix(n, n, 0.2);
    if (a.nonzero_count() == 0) continue;
    const auto p = all_nonzero_placement(a);
    std::vector<std::size_t> order(p.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng.engine());
    VariablePlacement q;
    for (auto k : order) q.positions.push_back(p.positions[k]);
    const auto jp = jacobian(a, p), jq = jacobian(a, q);
    for (std::size_t k = 0; k < order.size(); ++k) CHECK(jq.col(k) == jp.col(order[k]));
  }
}

TEST_CASE("certifications") {
  const auto c1 = certify_nilpotent_jacobian(fixtures::b4_seed());
  CHECK(c1.placement.size() == 8);
  CHECK(c1.nilpotent);
  CHECK(c1.full_rank);
  CHECK(c1.jacobian_rank == 4);
  CHECK(c1.certifies_spectrally_arbitrary());
  CHECK(c1.nonderogatory_check);
  CHECK(c1.irreducible_check);
  CHECK(c1.nilpotency_index == 4u);
  CHECK(c1.consistent());

  const auto id = certify_nilpotent_jacobian(RationalMatrix::identity(2));
  CHECK_FALSE(id.nilpotent);
  CHECK_FALSE(id.certifies_spectrally_arbitrary());
  CHECK_FALSE(id.nilpotency_index.has_value());

  // (1,2) and (2,2) stay fixed: a_12 is non-Jacobian in this placement.
  const VariablePlacement xa{{{0, 0}, {1, 0}}};
  const auto c4 = certify_nilpotent_jacobian(fixtures::t2(), xa);
  CHECK(c4.full_rank);
  CHECK(c4.nilpotent);
  CHECK_FALSE(c4.placement.contains({0, 1}));

  for (const auto& a : {fixtures::t3_realization(), fixtures::u3_realization(), fixtures::v3_realization()}) {
    const auto c = certify_nilpotent_jacobian(a);
    CHECK(c.certifies_spectrally_arbitrary());
    CHECK(c.consistent());
  }
}

TEST_CASE("certified nilpotent realizations are nonderogatory and irreducible") {
  oracle::RandomRationals rng(34);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // 2x2 nilpotents are [[a, b], [c, -a]] with a^2 + bc = 0.
    const Rational a = rng.value(3, 2), b = rng.value(3, 2);
    if (sgn(b) == 0) continue;
    const Rational c = -a * a / b;
    const RationalMatrix m{{a, b}, {c, -a}};
    if (m.nonzero_count() == 0) continue;
    const auto cert = certify_nilpotent_jacobian(m);
    REQUIRE(cert.nilpotent);
    if (cert.full_rank) {
      ++certified;
      CHECK(cert.consistent());
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("find_full_rank_placement") {
  const auto p = find_full_rank_placement(fixtures::t2(), {{0, 1}});
  REQUIRE(p);
  CHECK_FALSE(p->contains({0, 1}));
  CHECK(rank(jacobian(fixtures::t2(), *p)) == 2);

  const auto id = RationalMatrix::identity(2);
  const auto pi = find_full_rank_placement(id);
  CHECK(pi.has_value() == (rank(jacobian(id, all_nonzero_placement(id))) == 2));

  PositionSet all;
  for (const auto& pos : all_nonzero_placement(fixtures::b4_seed()).positions) all.insert(pos);
  CHECK_FALSE(find_full_rank_placement(fixtures::b4_seed(), all));

  oracle::RandomRationals rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const auto a = rng.matrix(n, n, 0.4);
    PositionSet ex;
    for (const auto& pos : all_nonzero_placement(a).positions)
      if (rng.coin() && rng.coin()) ex.insert(pos);
    const auto q = find_full_rank_placement(a, ex);
    const auto maximal = all_nonzero_placement(a, ex);
    const auto maximal_rank = rank(jacobian(a, maximal));
    CHECK(q.has_value() == (maximal_rank == n));
    if (q) {
      CHECK(rank(jacobian(a, *q)) == n);
      for (const auto& pos : q->positions) CHECK(ex.count(pos) == 0);
      // Minimality: dropping any single column loses full rank.
      for (std::size_t k = 0; k < q->size(); ++k) {
        VariablePlacement r = *q;
        r.positions.erase(r.positions.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(rank(jacobian(a, r)) < n);
      }
    }
  }
}

TEST_CASE("placement text and JSON") {
  const auto p = parse_placement("1,2; 2,2;3,4");
  CHECK(p.positions == std::vector<Position>{{0, 1}, {1, 1}, {2, 3}});
  CHECK(to_json(p).dump() == "[[1,2],[2,2],[3,4]]");
  CHECK(placement_from_json(to_json(p)).positions == p.positions);
  CHECK_THROWS_AS(parse_placement("0,1"), ParseError);
  CHECK_THROWS_AS(parse_placement("1;2"), ParseError);

  const auto m = fixtures::u3_realization();
  CHECK(matrix_from_json(to_json(m)) == m);
  const auto cj = to_json(certify_nilpotent_jacobian(fixtures::t2()));
  CHECK(cj["nilpotent"] == true);
  CHECK(cj["full_rank"] == true);
  CHECK(cj["jacobian_rank"] == 2);
}
