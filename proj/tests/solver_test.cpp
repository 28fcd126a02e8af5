#include <gtest/gtest.h>

#include <map>

#include "support/test_support.hpp"

namespace bandhs {
namespace {

using testing::e1;
using testing::make_assignment;

Params steps(std::uint64_t n, std::uint64_t seed = 1) {
  Params p;
  p.max_steps = n;
  p.seed = seed;
  return p;
}

// Records every event and checks the state after each step.
struct Recorder : SearchObserver {
  std::vector<StepEvent> events;
  std::vector<TracePoint> improvements;
  bool check_state = false;
  std::string mismatch;

  void on_improvement(const TracePoint& p) override { improvements.push_back(p); }
  void on_step(const StepEvent& e, const SearchState& s) override {
    events.push_back(e);
    if (check_state && mismatch.empty()) mismatch = testing::state_mismatch(s);
  }
};

TEST(Solve, E1ReachesOptimum) {
  const RunResult r = solve(e1(), steps(1000));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.best_cost, 1u);
  EXPECT_EQ(*r.best_assignment, make_assignment({true, false}));
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_EQ(r.steps, 1000u);
}

TEST(Solve, HardUnsatReportsNoFeasible) {
  const Instance inst = parse_wcnf("h 1 0\nh -1 0\n1 2 0\n");
  const RunResult r = solve(inst, steps(5000));
  EXPECT_EQ(r.status, RunStatus::no_feasible_found);
  EXPECT_FALSE(r.best_assignment);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_GT(r.stats.hard_optima, 0u);
}

TEST(Solve, ZeroCostStopsEarly) {
  const Instance inst = parse_wcnf("1 1 0\n1 2 0\n1 -1 2 0\n");
  const RunResult r = solve(inst, steps(100000));
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.best_cost, 0u);
  EXPECT_LT(r.steps, 100u);
}

TEST(Solve, CutoffStopsWithoutStepLimit) {
  Rng gen(3);
  GeneratorSpec spec;
  spec.num_vars = 40;
  spec.num_hard = 100;
  spec.num_soft = 150;
  spec.max_weight = 20;
  const Instance inst = generate_instance(spec, gen).instance;
  Params p;
  p.cutoff_seconds = 0.05;
  const RunResult r = solve(inst, p);
  EXPECT_GT(r.steps, 0u);
}

TEST(Solve, DeterministicPerSeed) {
  Rng gen(9);
  for (int i = 0; i < 10; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 30);
    const RunResult a = solve(inst, steps(20000, i));
    const RunResult b = solve(inst, steps(20000, i));
    ASSERT_EQ(a.status, b.status);
    ASSERT_EQ(a.best_cost, b.best_cost);
    ASSERT_EQ(a.best_assignment, b.best_assignment);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t j = 0; j < a.trace.size(); ++j) {
      ASSERT_EQ(a.trace[j].step, b.trace[j].step);
      ASSERT_EQ(a.trace[j].cost, b.trace[j].cost);
    }
  }
}

TEST(Solve, TraceStrictlyImprovesAndMatchesBest) {
  Rng gen(21);
  for (int i = 0; i < 20; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 30);
    Recorder rec;
    const RunResult r = solve(inst, steps(20000, i), &rec);
    ASSERT_EQ(rec.improvements.size(), r.trace.size());
    for (std::size_t j = 1; j < r.trace.size(); ++j) ASSERT_LT(r.trace[j].cost, r.trace[j - 1].cost);
    if (r.feasible()) {
      ASSERT_EQ(r.trace.back().cost, r.best_cost);
      ASSERT_EQ(evaluate_cost(inst, *r.best_assignment), r.best_cost);
      ASSERT_TRUE(is_feasible(inst, *r.best_assignment));
      ASSERT_EQ(r.trace.front().step, *r.step_of_first_feasible);
    }
  }
}

TEST(Solve, IncrementalStateStaysExactDuringSearch) {
  Rng gen(4);
  for (int i = 0; i < 5; ++i) {
    const Instance inst = testing::random_instance(gen, 12, 40, 9);
    Recorder rec;
    rec.check_state = true;
    solve(inst, steps(3000, i), &rec);
    ASSERT_EQ(rec.mismatch, "");
  }
}

TEST(Solve, FirstFeasibleStops) {
  Rng gen(6);
  for (int i = 0; i < 10; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 30);
    Params p = steps(50000, i);
    p.first_feasible = true;
    const RunResult r = solve(inst, p);
    if (!r.feasible()) continue;
    EXPECT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.steps, *r.step_of_first_feasible);
  }
}

TEST(Solve, TrainingSeparation) {
  Rng gen(12);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 9);
    Recorder rec;
    const RunResult r = solve(inst, steps(20000, i), &rec);
    EXPECT_EQ(r.stats.hard_mutations_after_feasible, 0u);
    for (const StepEvent& e : rec.events) {
      if (!e.best_feasible) continue;
      ASSERT_NE(e.kind, StepKind::hard_bandit);
      ASSERT_EQ(e.hard_mutations_before, e.hard_mutations_after);
    }
  }
}

TEST(Solve, HardRewardSkippedOnlyOnce) {
  Rng gen(13);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 9);
    Recorder rec;
    const RunResult r = solve(inst, steps(20000, i), &rec);
    std::size_t skipped = 0;
    bool first = true;
    for (const StepEvent& e : rec.events) {
      if (e.kind != StepKind::hard_bandit) continue;
      ASSERT_EQ(e.hard_reward_skipped, first);
      skipped += e.hard_reward_skipped ? 1 : 0;
      // N_h already counts this optimum when the arm is picked.
      ASSERT_GE(e.hard_local_optima, 1u);
      first = false;
    }
    EXPECT_EQ(skipped, r.stats.hard_reward_skips);
    EXPECT_LE(skipped, 1u);
  }
}

TEST(Solve, SoftPullsEqualSoftOptima) {
  Rng gen(14);
  for (int i = 0; i < 20; ++i) {
    const Instance inst = testing::random_instance(gen, 20, 60, 9);
    const RunResult r = solve(inst, steps(20000, i));
    std::uint64_t pulls = 0;
    for (ArmId a = 0; a < r.soft_bandit.num_arms(); ++a) pulls += r.soft_bandit.pulls(a);
    EXPECT_EQ(pulls, r.soft_local_optima());
    EXPECT_EQ(r.soft_local_optima(), r.stats.soft_optima);
  }
}

TEST(Solve, NoDelayKeepsOnePull) {
  Params p = steps(5000);
  p.no_delay = true;
  EXPECT_EQ(p.history_length(), 1u);
  Rng gen(15);
  const Instance inst = testing::random_instance(gen, 20, 60, 9);
  const RunResult r = solve(inst, p);
  EXPECT_LE(r.soft_bandit.history().size(), 1u);
  EXPECT_LE(r.hard_bandit.history().size(), 1u);
}

TEST(Solve, MixedTrainingKeepsUpdatingHardBandit) {
  // Dense hard constraints with heavy soft pressure revisit infeasible optima.
  Rng gen(16);
  std::uint64_t total = 0;
  for (int i = 0; i < 20 && total == 0; ++i) {
    GeneratorSpec spec;
    spec.num_vars = 30;
    spec.num_hard = 120;
    spec.num_soft = 60;
    spec.min_len = 2;
    spec.max_len = 3;
    spec.max_weight = 50;
    const Instance inst = generate_instance(spec, gen).instance;
    Params p = steps(50000, i);
    p.mixed_training = true;
    total += solve(inst, p).stats.hard_mutations_after_feasible;
  }
  EXPECT_GT(total, 0u);
}

TEST(Solve, ValidatesParams) {
  const Instance inst = e1();
  Params p;
  p.k = 0;
  EXPECT_THROW(solve(inst, p), std::invalid_argument);
  p = Params{};
  p.gamma = 1.5;
  EXPECT_THROW(solve(inst, p), std::invalid_argument);
  p = Params{};
  p.arm_num = 0;
  EXPECT_THROW(solve(inst, p), std::invalid_argument);
}

TEST(BmsPick, PicksHighestSampledScore) {
  // Softs only: every variable false falsifies each unit, all positive scores.
  const Instance inst = parse_wcnf("1 1 0\n2 2 0\n3 3 0\n");
  const SearchState s(inst, Assignment(3));
  Rng rng(1);
  std::map<Var, int> counts;
  for (int i = 0; i < 2000; ++i) ++counts[bms_pick(s, 15, rng)];
  EXPECT_GT(counts[3], 1900);  // missed only when 15 draws avoid x3
  for (int i = 0; i < 300; ++i) ++counts[bms_pick(s, 1, rng)];
  EXPECT_GT(counts[1], 0);
}

TEST(BestScoreVarInClause, LowestIndexOnTies) {
  const Instance inst = e1();
  const SearchState s(inst, make_assignment({false, false}));
  EXPECT_EQ(best_score_var_in_clause(s, 0), 1u);  // scores 0 and -1
  const Instance flat = parse_wcnf("h 1 2 3 0\n");
  const SearchState t(flat, Assignment(3));
  EXPECT_EQ(best_score_var_in_clause(t, 0), 1u);
}

TEST(RandomFalsifiedHard, Uniform) {
  const Instance inst = parse_wcnf("h 1 0\nh 2 0\nh 3 0\nh 4 0\nh 5 0\n");
  const SearchState s(inst, Assignment(5));
  Rng rng(2);
  std::array<int, 5> counts{};
  const int n = 50000;
  for (int i = 0; i < n; ++i) ++counts[random_falsified_hard(s, rng)];
  double chi2 = 0;
  for (const int c : counts) chi2 += (c - n / 5.0) * (c - n / 5.0) / (n / 5.0);
  EXPECT_LT(chi2, 18.47);  // p = 0.001, 4 dof
}

TEST(ClauseWeighting, InfeasibleBumpsHardOnly) {
  const Instance inst = e1();
  SearchState s(inst, make_assignment({false, false}));
  ClauseWeighting(inst, Params{}).update(s);
  EXPECT_EQ(s.dyn_weight(0), 2u);
  EXPECT_EQ(s.dyn_weight(1), 1u);
  EXPECT_EQ(s.dyn_weight(2), 2u);
  EXPECT_EQ(testing::state_mismatch(s), "");
}

TEST(ClauseWeighting, FeasibleBumpsFalsifiedSoft) {
  const Instance inst = e1();
  SearchState s(inst, make_assignment({true, false}));
  ClauseWeighting(inst, Params{}).update(s);
  EXPECT_EQ(s.dyn_weight(0), 1u);
  EXPECT_EQ(s.dyn_weight(1), 2u);
  EXPECT_EQ(s.dyn_weight(2), 2u);
}

TEST(ClauseWeighting, SoftWeightsAreCapped) {
  // Mean soft weight 1.5, cap max(w, 15).
  const Instance inst = e1();
  const ClauseWeighting w(inst, Params{});
  EXPECT_EQ(w.cap(1), 15u);
  EXPECT_EQ(w.cap(2), 15u);
  SearchState s(inst, make_assignment({true, false}));
  for (int i = 0; i < 40; ++i) w.update(s);
  EXPECT_EQ(s.dyn_weight(1), 15u);

  const Instance skewed = parse_wcnf("1 1 0\n100 2 0\n");
  const ClauseWeighting sw(skewed, Params{});
  EXPECT_EQ(sw.cap(0), 505u);
  EXPECT_EQ(sw.cap(1), 505u);
  Params tight;
  tight.soft_cap_factor = 0.5;
  EXPECT_EQ(ClauseWeighting(skewed, tight).cap(1), 100u);
}

}  // namespace
}  // namespace bandhs
