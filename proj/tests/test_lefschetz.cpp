#include <doctest.h>

#include <random>

#include "slp/lefschetz.hpp"

using slp::FieldSpec;
using slp::Scalar;
using slp::Verdict;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

}  // namespace

TEST_CASE("rank profiles") {
  const auto a = slp::monomial_complete_intersection(QQ, {2, 2});
  const auto l = a.variable(0) + a.variable(1);
  const auto p = slp::rank_profile(a, l, 2);
  REQUIRE(p.rows.size() == 3);
  CHECK(p.rows[0].source_dim == 1);
  CHECK(p.rows[0].target_dim == 1);
  CHECK(p.rows[0].rank == 1);
  CHECK(p.rows[0].maximal);
  CHECK(p.all_maximal());

  const auto g = slp::monomial_complete_intersection(FieldSpec::prime(2), {2, 2});
  const auto pg = slp::rank_profile(g, g.variable(0) + g.variable(1), 2);
  CHECK(pg.rows[0].rank == 0);
  CHECK(!pg.rows[0].maximal);
  REQUIRE(pg.first_failure());
  CHECK(pg.first_failure()->degree == 0);

  const auto z = slp::rank_profile(a, a.zero(1), 1);
  for (const auto& row : z.rows) {
    CHECK(row.rank == 0);
    CHECK(row.maximal == (row.source_dim == 0 || row.target_dim == 0));
  }
  CHECK_THROWS_AS(slp::rank_profile(a, l, 0), std::invalid_argument);
}

TEST_CASE("Lefschetz elements") {
  const auto c = slp::monomial_complete_intersection(QQ, {5});
  CHECK(slp::is_lefschetz(c, c.variable(0)).ok);

  const auto a = slp::monomial_complete_intersection(QQ, {2, 2});
  const auto x = a.variable(0);
  const auto weak = slp::is_lefschetz(a, x);
  CHECK(weak.ok);
  // Ranks by hand: x : A_0 -> A_1 has rank 1, x : A_1 -> A_2 has rank 1.
  CHECK(weak.profiles[0].rows[0].rank == 1);
  CHECK(weak.profiles[0].rows[1].rank == 1);

  const auto strong = slp::is_strong_lefschetz(a, x);
  CHECK(!strong.ok);
  REQUIRE(strong.witness);
  CHECK(*strong.witness == slp::FailureWitness{2, 0});

  // Degree-2 elements are allowed for the weak test.
  const auto xy = a.multiply(x, a.variable(1));
  CHECK(slp::is_lefschetz(a, xy).ok);
  CHECK(!slp::is_lefschetz(a, a.multiply(x, x)).ok);
}

TEST_CASE("strong Lefschetz elements") {
  for (int n = 1; n <= 20; ++n) {
    const auto c = slp::monomial_complete_intersection(QQ, {n});
    CHECK(slp::is_strong_lefschetz(c, c.variable(0)).ok);
  }
  const auto a = slp::monomial_complete_intersection(QQ, {2, 2});
  CHECK(slp::is_strong_lefschetz(a, a.variable(0) + a.variable(1)).ok);

  const auto g = slp::monomial_complete_intersection(FieldSpec::prime(2), {2, 2});
  const auto bad = slp::is_strong_lefschetz(g, g.variable(0) + g.variable(1));
  CHECK(!bad.ok);
  CHECK(bad.witness->power == 2);
  CHECK_THROWS_AS(slp::is_strong_lefschetz(a, a.multiply(a.variable(0), a.variable(1))), std::invalid_argument);
}

TEST_CASE("strong Lefschetz is invariant under scaling") {
  std::mt19937_64 rng(12);
  const auto a = slp::monomial_complete_intersection(QQ, {2, 3, 3});
  for (int trial = 0; trial < 10; ++trial) {
    const auto l = slp::random_homogeneous(a, 1, rng);
    const auto c = Scalar::from_ratio(QQ, 1 + static_cast<long>(rng() % 9), -1 - static_cast<long>(rng() % 7));
    CHECK(slp::is_strong_lefschetz(a, l).ok == slp::is_strong_lefschetz(a, c * l).ok);
  }
  // Over GF(3) strongness fails for some elements; scaling must not change that.
  const auto g = slp::monomial_complete_intersection(FieldSpec::prime(3), {2, 3});
  for (long u = 0; u < 3; ++u)
    for (long v = 0; v < 3; ++v) {
      const auto l = g.from_ints(1, {u, v});
      const auto two = Scalar::from_int(g.field(), 2);
      CHECK(slp::is_strong_lefschetz(g, l).ok == slp::is_strong_lefschetz(g, two * l).ok);
    }
}

TEST_CASE("searches") {
  const auto a = slp::monomial_complete_intersection(QQ, {2, 2, 2});
  const auto strong = slp::search_strong(a, 5, 1);
  CHECK(strong.verdict == Verdict::certified_success);
  REQUIRE(strong.element);
  CHECK(strong.powers == std::vector<int>{1, 2, 3});

  // A certified strong element also certifies the weak property.
  CHECK(slp::check_weak_element(a, *strong.element).verdict == Verdict::certified_success);

  const auto again = slp::search_strong(a, 5, 1);
  CHECK(again.element_text == strong.element_text);
  REQUIRE(again.profiles.size() == strong.profiles.size());
  for (std::size_t k = 0; k < again.profiles.size(); ++k) {
    for (std::size_t i = 0; i < again.profiles[k].rows.size(); ++i) {
      CHECK(again.profiles[k].rows[i].rank == strong.profiles[k].rows[i].rank);
    }
  }

  const auto g = slp::monomial_complete_intersection(FieldSpec::prime(2), {2, 2});
  const auto fail = slp::search_strong(g, 6, 3);
  CHECK(fail.verdict == Verdict::search_inconclusive);
  CHECK(fail.trials_used == 6);
  CHECK(fail.probabilistic_field);
  CHECK(slp::search_weak(g, 6, 3).verdict == Verdict::certified_success);

  CHECK_THROWS_AS(slp::search_weak(a, 0, 1), std::invalid_argument);

  const auto k = slp::trivial_algebra(QQ);
  CHECK(slp::search_strong(k, 1, 0).verdict == Verdict::certified_success);
}

TEST_CASE("element reports") {
  const auto a = slp::monomial_complete_intersection(QQ, {2, 2});
  const auto rep = slp::check_strong_element(a, a.variable(0));
  CHECK(rep.verdict == Verdict::element_failure);
  REQUIRE(rep.witness);
  CHECK(rep.witness->power == 2);
  CHECK(slp::to_string(rep.verdict) == "element_failure");
}

TEST_CASE("maximal rank property") {
  const auto a = slp::monomial_complete_intersection(QQ, {2, 2});
  const auto rep = slp::maximal_rank_property(a, 8, 5);
  REQUIRE(rep.degrees.size() == 2);
  CHECK(rep.all_certified());

  // Forms of degree sigma only ever map A_0 -> A_sigma.
  const auto c = slp::monomial_complete_intersection(QQ, {3, 2});
  const auto rc = slp::maximal_rank_property(c, 8, 1);
  CHECK(rc.degrees.back().degree == c.socle_degree());
  CHECK(rc.degrees.back().verdict == Verdict::certified_success);
}
