#include <doctest.h>

#include <random>

#include "leveler/standard_form.hpp"
#include "random_instances.hpp"

using namespace leveler;

namespace {

// z(x) through the lifted variable vector.
Rational z_at(const StandardFormQP& qp, const TransferVector& x) {
  const auto v = qp.lift(x);
  return qp.objective(v);
}

Rational v_at(const MonthlyLoads& a, const TransferVector& x) {
  return quadratic_deviation(a, x, mean_load(a));
}

}  // namespace

TEST_CASE("uniform loads") {
  const MonthlyLoads a({7, 7});
  const StandardFormQP qp = standard_form(a);
  CHECK(qp.shifted_loads == std::vector<Rational>{0, 0});
  CHECK(qp.constant_offset == 0);
  CHECK(z_at(qp, {{0}}) == 0);
}

TEST_CASE("worked example identity") {
  const MonthlyLoads a({50, 40, 44, 51});
  const StandardFormQP qp = standard_form(a);
  // Sum of squared shifted loads: 3.75^2 + 6.25^2 + 2.25^2 + 4.75^2.
  CHECK(qp.constant_offset == Rational(323, 4));
  // z = -(V - 323/4) with V = 3/4.
  CHECK(z_at(qp, {{4, -2, -4}}) == Rational(80));
  CHECK(z_at(qp, {{0, 0, 0}}) == 0);
  CHECK(qp.variables() == 10);
  CHECK(qp.constraints.size() == 6);
}

TEST_CASE("two months") {
  const MonthlyLoads a({10, 0});
  const StandardFormQP qp = standard_form(a);
  CHECK(qp.shifted_loads == std::vector<Rational>{5, -5});
  CHECK(z_at(qp, {{5}}) == 50);
  // With a single boundary both end couplings land on the same entry.
  CHECK(qp.quadratic[0][qp.lifted_index(0)] == 2);
}

TEST_CASE("coefficient structure") {
  const StandardFormQP qp = standard_form(MonthlyLoads({3, 8, 1, 6, 2}));
  const std::size_t m = qp.boundaries();
  for (std::size_t a = 0; a < qp.variables(); ++a)
    for (std::size_t b = 0; b < qp.variables(); ++b) CHECK(qp.quadratic[a][b] == qp.quadratic[b][a]);
  // Lifted variables couple only with their neighbours and the offset.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto d = i > j ? i - j : j - i;
      if (d > 1) CHECK(qp.quadratic[qp.lifted_index(i)][qp.lifted_index(j)] == 0);
    }
  // Slack variables never enter the objective.
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(qp.linear[qp.upper_slack_index(i)] == 0);
    CHECK(qp.linear[qp.lower_slack_index(i)] == 0);
    for (std::size_t b = 0; b < qp.variables(); ++b) {
      CHECK(qp.quadratic[qp.upper_slack_index(i)][b] == 0);
      CHECK(qp.quadratic[qp.lower_slack_index(i)][b] == 0);
    }
  }
  CHECK(qp.quadratic[0][0] == -2);
  CHECK(qp.linear[0] == 2 * (qp.shifted_loads.back() - qp.shifted_loads.front()));
}

TEST_CASE("z + V equals the constant for random feasible transfers") {
  std::mt19937_64 rng(5);
  for (int instance = 0; instance < 20; ++instance) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 12));
    const MonthlyLoads a = testing::random_loads(rng, n, 100);
    const StandardFormQP qp = standard_form(a);
    for (int k = 0; k < 1000; ++k) {
      const TransferVector x = testing::random_feasible_transfers(rng, a);
      const auto v = qp.lift(x);
      REQUIRE(qp.satisfies_constraints(v));
      CHECK(qp.project(v) == x);
      REQUIRE(qp.objective(v) + v_at(a, x) == qp.constant_offset);
    }
  }
}

TEST_CASE("identity holds for any non-negative offset") {
  // x = lifted - offset is invariant under adding the same amount to both.
  const MonthlyLoads a({12, 3, 9, 0, 7, 5});
  const StandardFormQP qp = standard_form(a);
  const TransferVector x{{2, -3, 4, -2, 0}};
  auto v = qp.lift(x);
  for (int extra = 0; extra < 5; ++extra) {
    CHECK(qp.objective(v) + v_at(a, x) == qp.constant_offset);
    v[0] += 1;
    for (std::size_t i = 0; i < qp.boundaries(); ++i) v[qp.lifted_index(i)] += 1;
  }
}

TEST_CASE("constraint rows reject out-of-box transfers") {
  const StandardFormQP qp = standard_form(MonthlyLoads({4, 2}));
  std::vector<Hours> v(qp.variables(), 0);
  v[qp.lifted_index(0)] = 5;  // x = 5 > A1 = 4
  v[qp.lower_slack_index(0)] = 7;
  v[qp.upper_slack_index(0)] = -1;
  CHECK_FALSE(qp.satisfies_constraints(v));
}
