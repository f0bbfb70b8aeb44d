#include <doctest.h>

#include <random>

#include "leveler/errors.hpp"
#include "leveler/plan_model.hpp"
#include "random_instances.hpp"

using namespace leveler;

namespace {

AnnualPlan paper_plan() {
  return AnnualPlan({{10, 20, 30, 40}, {5, 8, 6, 6}, {21, 11, 3, 2}, {14, 1, 5, 3}});
}

MonthlyLoads loads(std::vector<Hours> v) { return MonthlyLoads(std::move(v)); }

}  // namespace

TEST_CASE("column sums") {
  CHECK(column_sums(paper_plan()) == loads({50, 40, 44, 51}));
  CHECK(column_sums(AnnualPlan({{0, 0}})) == loads({0, 0}));
  CHECK(column_sums(AnnualPlan({{1, 2}, {3, 4}})) == loads({4, 6}));
}

TEST_CASE("plan validation") {
  CHECK_THROWS_AS(AnnualPlan(std::vector<std::vector<Hours>>{}), ValidationError);
  CHECK_THROWS_AS(AnnualPlan({std::vector<Hours>{1}}), ValidationError);
  CHECK_THROWS_AS(AnnualPlan({{1, 2}, {3}}), ValidationError);
  CHECK_THROWS_AS(AnnualPlan({{1, -2}}), ValidationError);
  CHECK(AnnualPlan({{0, 0}}).items() == 1);
}

TEST_CASE("mean load is exact") {
  CHECK(mean_load(loads({50, 40, 44, 51})).value() == Rational(185, 4));
  CHECK(mean_load(loads({7, 7, 7})).value() == Rational(7));
  CHECK(mean_load(loads({0, 0, 0, 0})).value() == Rational(0));
  CHECK(to_string(mean_load(loads({50, 40, 44, 51})).value()) == "185/4");
}

TEST_CASE("apply transfers") {
  const auto a = loads({50, 40, 44, 51});
  CHECK(apply_transfers(a, {{0, 0, 0}}) == a);
  CHECK(apply_transfers(a, {{4, -2, -4}}) == loads({46, 46, 46, 47}));

  SUBCASE("empty donor month") {
    try {
      apply_transfers(loads({10, 0}), {{-1}});
      FAIL("expected a constraint error");
    } catch (const ConstraintError& e) {
      CHECK(e.boundary() == 0);
    }
  }
  SUBCASE("bounds hold but a month goes negative") {
    // Month 2 gives 3 back and 3 forward but only has 3.
    try {
      apply_transfers(loads({0, 3, 5}), {{-3, 3}});
      FAIL("expected a feasibility error");
    } catch (const FeasibilityError& e) {
      CHECK(e.month() == 1);
    }
  }
  SUBCASE("wrong length") {
    CHECK_THROWS_AS(apply_transfers(a, {{1, 2}}), ConstraintError);
  }
}

TEST_CASE("l1 deviation") {
  const MeanLoad m = mean_load(loads({50, 40, 44, 51}));
  CHECK(l1_deviation(loads({50, 40, 44, 51}), m) == Rational(17));
  CHECK(l1_deviation(loads({46, 46, 46, 47}), m) == Rational(3, 2));
  CHECK(l1_deviation(loads({7, 7}), mean_load(loads({7, 7}))) == Rational(0));
}

TEST_CASE("quadratic deviation") {
  const auto a = loads({50, 40, 44, 51});
  const MeanLoad m = mean_load(a);
  // 3.75^2 + 6.25^2 + 2.25^2 + 4.75^2
  CHECK(quadratic_deviation(a, {{0, 0, 0}}, m) == Rational(323, 4));
  CHECK(quadratic_deviation(a, {{4, -2, -4}}, m) == Rational(3, 4));
  CHECK(quadratic_deviation(loads({7, 7, 7}), {{0, 0}}, mean_load(loads({7, 7, 7}))) == 0);
  CHECK_THROWS_AS(quadratic_deviation(loads({10, 0}), {{-1}}, mean_load(loads({10, 0}))),
                  ConstraintError);
}

TEST_CASE("apply shift matrix") {
  const ShiftMatrix printed({{0, 0, 0, 0}, {0, -1, 0, -1}, {1, -1, -1, 0}, {0, 1, 0, 0}});
  const AnnualPlan adjusted = apply_shift_matrix(paper_plan(), printed);
  CHECK(column_sums(adjusted) == loads({48, 44, 48, 45}));
  CHECK(adjusted.total() == 185);
  CHECK(l1_deviation(column_sums(adjusted), mean_load(column_sums(paper_plan()))) == 7);

  CHECK(apply_shift_matrix(paper_plan(), ShiftMatrix(4, 4)) == paper_plan());
  CHECK(apply_shift_matrix(AnnualPlan({{5, 0}}), ShiftMatrix({{1, 0}})) == AnnualPlan({{0, 5}}));

  CHECK_THROWS_AS(apply_shift_matrix(AnnualPlan({{5, 1}}), ShiftMatrix({{-1, 0}})), BoundaryError);
  CHECK_THROWS_AS(apply_shift_matrix(AnnualPlan({{5, 1}}), ShiftMatrix({{0, 1}})), BoundaryError);
  CHECK_THROWS_AS(apply_shift_matrix(AnnualPlan({{0, 1}, {1, 1}}), ShiftMatrix({{1, 0}, {0, 0}})),
                  ValidationError);
  CHECK_THROWS_AS(ShiftMatrix({{2, 0}}), ValidationError);
}

TEST_CASE("properties over random instances") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 12));
    const MonthlyLoads a = testing::random_loads(rng, n, 80);
    const MeanLoad m = mean_load(a);
    const TransferVector x = testing::random_feasible_transfers(rng, a);
    const MonthlyLoads moved = apply_transfers(a, x);

    CHECK(moved.total() == a.total());

    Rational direct = 0;
    for (Hours v : moved.values()) direct += (Rational(v) - m.value()) * (Rational(v) - m.value());
    REQUIRE(quadratic_deviation(a, x, m) == direct);
    CHECK(quadratic_deviation(a, x, m) == quadratic_deviation(moved, m));

    const Rational l1 = l1_deviation(moved, m);
    CHECK(l1 >= 0);
    bool level = true;
    for (Hours v : moved.values()) level = level && Rational(v) == m.value();
    CHECK((l1 == 0) == level);
    CHECK(l1_deviation(moved, m) == l1);

    CHECK(apply_transfers(a, TransferVector{std::vector<Hours>(n - 1, 0)}) == a);
  }
}

TEST_CASE("shift matrix conserves hours") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 8));
    const AnnualPlan plan = testing::random_plan(rng, k, n, 20);
    ShiftMatrix s(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (plan.at(i, j) == 0) continue;
        const int lo = j == 0 ? 0 : -1;
        const int hi = j + 1 == n ? 0 : 1;
        s.set(i, j, static_cast<int>(testing::uniform(rng, lo, hi)));
      }
    CHECK(apply_shift_matrix(plan, s).total() == plan.total());
  }
}
