#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace bandhs {
namespace {

using testing::e1;
using testing::make_assignment;
using testing::state_mismatch;

TEST(SearchState, BuildOnE1) {
  const Instance inst = e1();
  const SearchState tf(inst, make_assignment({true, false}));
  EXPECT_EQ(tf.cost(), 1u);
  EXPECT_EQ(tf.hard_falsified_count(), 0u);
  ASSERT_EQ(tf.falsified_soft().size(), 1u);
  EXPECT_EQ(inst.clause(tf.falsified_soft()[0]).literals, (std::vector<Literal>{{1, true}}));
  EXPECT_EQ(state_mismatch(tf), "");

  const SearchState ff(inst, make_assignment({false, false}));
  EXPECT_EQ(ff.hard_falsified_count(), 1u);
  EXPECT_EQ(ff.cost(), 0u);
  EXPECT_EQ(state_mismatch(ff), "");
}

TEST(SearchState, InitialWeights) {
  const Instance inst = e1();
  const SearchState s(inst, make_assignment({false, false}));
  EXPECT_EQ(s.dyn_weight(0), 1u);
  EXPECT_EQ(s.dyn_weight(1), 1u);
  EXPECT_EQ(s.dyn_weight(2), 2u);
}

TEST(SearchState, ScoresOnE1) {
  const Instance inst = e1();
  const SearchState s(inst, make_assignment({false, false}));
  EXPECT_EQ(s.score(1), 0);   // +1 hard, -1 soft (-x1)
  EXPECT_EQ(s.score(2), -1);  // +1 hard, -2 soft (-x2)
  EXPECT_TRUE(s.goodvars().empty());
}

TEST(SearchState, RebuildIsDeterministic) {
  Rng rng(3);
  const Instance inst = testing::random_instance(rng);
  Assignment a(inst.num_vars());
  for (Var v = 1; v <= inst.num_vars(); ++v) a.set(v, rng.coin());
  const SearchState x(inst, a);
  const SearchState y(inst, a);
  EXPECT_EQ(x.cost(), y.cost());
  EXPECT_EQ(x.hard_falsified_count(), y.hard_falsified_count());
  for (Var v = 1; v <= inst.num_vars(); ++v) EXPECT_EQ(x.score(v), y.score(v));
  for (ClauseId c = 0; c < inst.num_clauses(); ++c) EXPECT_EQ(x.sat_count(c), y.sat_count(c));
  EXPECT_TRUE(std::equal(x.falsified_soft().begin(), x.falsified_soft().end(), y.falsified_soft().begin(),
                         y.falsified_soft().end()));
}

TEST(SearchState, FlipOnE1) {
  const Instance inst = e1();
  SearchState s(inst, make_assignment({false, false}));
  s.flip(1);
  EXPECT_EQ(s.assignment(), make_assignment({true, false}));
  EXPECT_EQ(s.hard_falsified_count(), 0u);
  EXPECT_EQ(s.cost(), 1u);
  EXPECT_EQ(state_mismatch(s), "");
  EXPECT_EQ(s.flips(), 1u);
}

TEST(SearchState, DoubleFlipIsInvolution) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing::random_instance(rng);
    Assignment a(inst.num_vars());
    for (Var v = 1; v <= inst.num_vars(); ++v) a.set(v, rng.coin());
    SearchState s(inst, a);
    const SearchState before = s;
    const Var v = static_cast<Var>(rng.between(1, inst.num_vars()));
    s.flip(v);
    s.flip(v);
    ASSERT_EQ(s.assignment(), before.assignment());
    ASSERT_EQ(s.cost(), before.cost());
    ASSERT_EQ(s.hard_falsified_count(), before.hard_falsified_count());
    for (Var u = 1; u <= inst.num_vars(); ++u) ASSERT_EQ(s.score(u), before.score(u));
    for (ClauseId c = 0; c < inst.num_clauses(); ++c) ASSERT_EQ(s.sat_count(c), before.sat_count(c));
  }
}

TEST(SearchState, RandomFlipsMatchRecomputation) {
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    const Instance inst = testing::random_instance(rng, 15, 40, 20);
    Assignment a(inst.num_vars());
    for (Var v = 1; v <= inst.num_vars(); ++v) a.set(v, rng.coin());
    SearchState s(inst, a);
    for (int step = 0; step < 10000; ++step) {
      s.flip(static_cast<Var>(rng.between(1, inst.num_vars())));
      if (step % 97 == 0) s.add_weight(static_cast<ClauseId>(rng.below(inst.num_clauses())), rng.between(1, 3));
      if (step % 500 == 0) ASSERT_EQ(state_mismatch(s), "") << "instance " << i << " step " << step;
    }
    ASSERT_EQ(state_mismatch(s), "");
    // A from-scratch rebuild with the same weights agrees exactly.
    const SearchState rebuilt(inst, s.assignment(), std::vector<Weight>(s.dyn_weights().begin(), s.dyn_weights().end()));
    ASSERT_EQ(rebuilt.cost(), s.cost());
    for (Var v = 1; v <= inst.num_vars(); ++v) ASSERT_EQ(rebuilt.score(v), s.score(v));
  }
}

TEST(SearchState, UnusedVariableIsANoOp) {
  const Instance inst = parse_wcnf("p wcnf 3 2 5\n5 1 0\n1 -1 0\n");
  SearchState s(inst, Assignment(3));
  EXPECT_EQ(s.score(3), 0);
  const Weight cost = s.cost();
  s.flip(3);
  EXPECT_EQ(s.cost(), cost);
  EXPECT_EQ(state_mismatch(s), "");
}

TEST(SearchState, AddWeightUpdatesScores) {
  const Instance inst = e1();
  SearchState s(inst, make_assignment({false, false}));
  s.add_weight(0, 1);  // hard clause now weight 2
  EXPECT_EQ(s.score(1), 1);
  EXPECT_EQ(s.score(2), 0);
  EXPECT_TRUE(s.goodvars().contains(1));
  EXPECT_EQ(state_mismatch(s), "");
}

TEST(SearchState, RejectsWrongSizes) {
  const Instance inst = e1();
  EXPECT_THROW(SearchState(inst, Assignment(3)), std::invalid_argument);
  EXPECT_THROW(SearchState(inst, Assignment(2), std::vector<Weight>{1}), std::invalid_argument);
}

}  // namespace
}  // namespace bandhs
