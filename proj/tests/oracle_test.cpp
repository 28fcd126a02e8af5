#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace bandhs {
namespace {

TEST(ExactSolve, E1) {
  const ExactResult r = exact_solve(testing::e1());
  ASSERT_EQ(r.status, ExactStatus::optimal);
  EXPECT_EQ(r.opt_cost, 1u);
  EXPECT_EQ(r.assignment, testing::make_assignment({true, false}));
}

TEST(ExactSolve, HardUnsat) {
  EXPECT_EQ(exact_solve(parse_wcnf("h 1 0\nh -1 0\n1 2 0\n")).status, ExactStatus::hard_unsat);
}

TEST(ExactSolve, SoftOnlySatisfiable) {
  const ExactResult r = exact_solve(parse_wcnf("3 1 2 0\n4 -1 0\n5 -2 -1 0\n"));
  ASSERT_EQ(r.status, ExactStatus::optimal);
  EXPECT_EQ(r.opt_cost, 0u);
}

TEST(ExactSolve, VariableLimit) {
  const Instance inst = parse_wcnf("p wcnf 30 1 2\n1 30 0\n");
  EXPECT_THROW(exact_solve(inst), std::invalid_argument);
  EXPECT_EQ(exact_solve(inst, 30).opt_cost, 0u);
  // The limit itself is capped.
  EXPECT_THROW(exact_solve(parse_wcnf("p wcnf 41 1 2\n1 41 0\n"), 50), std::invalid_argument);
}

// Cross-check against a naive evaluation over every assignment.
TEST(ExactSolve, MatchesNaiveEnumeration) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing::random_instance(rng, 10, 30, 9);
    std::optional<Weight> best;
    Assignment a(inst.num_vars());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << inst.num_vars()); ++m) {
      for (Var v = 1; v <= inst.num_vars(); ++v) a.set(v, ((m >> (v - 1)) & 1) != 0);
      if (!is_feasible(inst, a)) continue;
      const Weight c = evaluate_cost(inst, a);
      if (!best || c < *best) best = c;
    }
    const ExactResult r = exact_solve(inst);
    if (!best) {
      ASSERT_EQ(r.status, ExactStatus::hard_unsat);
      continue;
    }
    ASSERT_EQ(r.status, ExactStatus::optimal);
    ASSERT_EQ(r.opt_cost, *best);
    ASSERT_TRUE(is_feasible(inst, r.assignment));
    ASSERT_EQ(evaluate_cost(inst, r.assignment), *best);
  }
}

}  // namespace
}  // namespace bandhs
