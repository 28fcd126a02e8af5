#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "bandhs/formula.hpp"
#include "bandhs/indexed_set.hpp"
#include "bandhs/rng.hpp"

namespace bandhs {

using ArmId = std::uint32_t;

// value + lambda * sqrt(ln(local_optima) / (pulls + 1)). local_optima >= 1.
double ucb(double value, std::uint64_t pulls, std::uint64_t local_optima, double lambda);

enum class HardReward : std::uint8_t {
  relative,         // (H' - H) / H'
  relative_plus_one // (H' - H) / (H' + 1)
};

// Reward for the hard bandit given the falsified hard clause counts of the
// current (H) and previous (H') infeasible local optima. H' >= 1.
double reward_hard(std::uint64_t current, std::uint64_t previous,
                   HardReward variant = HardReward::relative);

// Reward for the soft bandit given the costs of the current and previous
// feasible local optima and of the best solution found so far.
double reward_soft(Weight cost, Weight previous_cost, Weight best_cost);

// Estimated values, pull counts, local-optimum counter and the bounded
// history of the latest pulls for one set of arms.
class Bandit {
 public:
  Bandit() = default;
  Bandit(std::size_t num_arms, std::size_t history_limit);

  std::size_t num_arms() const { return value_.size(); }
  std::size_t history_limit() const { return history_limit_; }

  double value(ArmId a) const { return value_[a]; }
  std::uint64_t pulls(ArmId a) const { return pulls_[a]; }
  std::uint64_t local_optima() const { return local_optima_; }
  const std::deque<ArmId>& history() const { return history_; }

  double ucb(ArmId a, double lambda) const {
    return bandhs::ucb(value_[a], pulls_[a], local_optima_, lambda);
  }

  void count_local_optimum() { ++local_optima_; }
  void record_pull(ArmId a);
  // Credit the history, newest first, with r, r*gamma, r*gamma^2, ...
  void apply_delayed_reward(double r, double gamma);

  // Test hooks.
  void set_value(ArmId a, double v) { value_[a] = v; }
  void set_pulls(ArmId a, std::uint64_t t) { pulls_[a] = t; }
  void set_local_optima(std::uint64_t n) { local_optima_ = n; }

  // Number of record_pull and non-empty apply_delayed_reward calls.
  std::uint64_t mutations() const { return mutations_; }

 private:
  std::vector<double> value_;
  std::vector<std::uint64_t> pulls_;
  std::uint64_t local_optima_ = 0;
  std::size_t history_limit_ = 0;
  std::deque<ArmId> history_;
  std::uint64_t mutations_ = 0;
};

struct HardArm {
  ClauseId clause;
  std::uint32_t position;
  ArmId arm;
};

// One arm per literal occurrence in a hard clause.
class HardBandit : public Bandit {
 public:
  HardBandit() = default;
  HardBandit(const Instance& inst, std::size_t history_limit);

  ArmId arm(ClauseId c, std::uint32_t position) const { return offset_[c] + position; }

 private:
  std::vector<ArmId> offset_;
};

// One arm per soft clause.
class SoftBandit : public Bandit {
 public:
  SoftBandit() = default;
  SoftBandit(const Instance& inst, std::size_t history_limit);

  ArmId arm(ClauseId c) const { return c - first_soft_; }
  ClauseId clause(ArmId a) const { return a + first_soft_; }

 private:
  ClauseId first_soft_ = 0;
};

// Literal occurrence of hard clause c with the highest UCB; ties go to the
// earliest position. Does not record the pull.
HardArm pick_hard_arm(const HardBandit& bandit, const Instance& inst, ClauseId c, double lambda);

// Samples arm_num clauses with replacement from the falsified soft clauses
// and returns the one with the highest UCB; ties go to the earlier draw.
// Does not record the pull.
ClauseId pick_soft_arm(const SoftBandit& bandit, const IndexedSet& falsified_soft,
                       std::uint32_t arm_num, double lambda, Rng& rng);

// Scans every falsified soft clause instead of sampling; ties go to the
// earlier set position.
ClauseId pick_soft_arm_exhaustive(const SoftBandit& bandit, const IndexedSet& falsified_soft,
                                  double lambda);

}  // namespace bandhs
