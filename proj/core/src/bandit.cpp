#include "bandhs/bandit.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace bandhs {

double ucb(double value, std::uint64_t pulls, std::uint64_t local_optima, double lambda) {
  const double n = static_cast<double>(local_optima);
  return value + lambda * std::sqrt(std::log(n) / (static_cast<double>(pulls) + 1.0));
}

double reward_hard(std::uint64_t current, std::uint64_t previous, HardReward variant) {
  const double diff = static_cast<double>(previous) - static_cast<double>(current);
  const double denom = static_cast<double>(previous) + (variant == HardReward::relative ? 0.0 : 1.0);
  return diff / denom;
}

double reward_soft(Weight cost, Weight previous_cost, Weight best_cost) {
  const double diff = static_cast<double>(previous_cost) - static_cast<double>(cost);
  const double denom = static_cast<double>(previous_cost) - static_cast<double>(best_cost) + 1.0;
  return diff / denom;
}

Bandit::Bandit(std::size_t num_arms, std::size_t history_limit)
    : value_(num_arms, 1.0), pulls_(num_arms, 0), history_limit_(history_limit) {}

void Bandit::record_pull(ArmId a) {
  ++pulls_[a];
  history_.push_back(a);
  while (history_.size() > history_limit_) history_.pop_front();
  ++mutations_;
}

void Bandit::apply_delayed_reward(double r, double gamma) {
  if (history_.empty()) return;
  double share = r;
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    value_[*it] += share;
    share *= gamma;
  }
  ++mutations_;
}

namespace {

std::size_t hard_literal_count(const Instance& inst) {
  std::size_t n = 0;
  for (const Clause& c : inst.hard_clauses()) n += c.literals.size();
  return n;
}

}  // namespace

HardBandit::HardBandit(const Instance& inst, std::size_t history_limit)
    : Bandit(hard_literal_count(inst), history_limit) {
  offset_.reserve(inst.num_hard());
  ArmId next = 0;
  for (const Clause& c : inst.hard_clauses()) {
    offset_.push_back(next);
    next += static_cast<ArmId>(c.literals.size());
  }
}

SoftBandit::SoftBandit(const Instance& inst, std::size_t history_limit)
    : Bandit(inst.num_soft(), history_limit), first_soft_(static_cast<ClauseId>(inst.num_hard())) {}

HardArm pick_hard_arm(const HardBandit& bandit, const Instance& inst, ClauseId c, double lambda) {
  const auto size = static_cast<std::uint32_t>(inst.clause(c).literals.size());
  HardArm best{c, 0, bandit.arm(c, 0)};
  double best_ucb = -std::numeric_limits<double>::infinity();
  for (std::uint32_t pos = 0; pos < size; ++pos) {
    const ArmId a = bandit.arm(c, pos);
    const double u = bandit.ucb(a, lambda);
    if (u > best_ucb) {
      best_ucb = u;
      best = {c, pos, a};
    }
  }
  return best;
}

ClauseId pick_soft_arm(const SoftBandit& bandit, const IndexedSet& falsified_soft,
                       std::uint32_t arm_num, double lambda, Rng& rng) {
  assert(!falsified_soft.empty());
  ClauseId best = falsified_soft[0];
  double best_ucb = -std::numeric_limits<double>::infinity();
  for (std::uint32_t i = 0; i < arm_num; ++i) {
    const ClauseId c = falsified_soft[rng.below(falsified_soft.size())];
    const double u = bandit.ucb(bandit.arm(c), lambda);
    if (u > best_ucb) {
      best_ucb = u;
      best = c;
    }
  }
  return best;
}

ClauseId pick_soft_arm_exhaustive(const SoftBandit& bandit, const IndexedSet& falsified_soft,
                                  double lambda) {
  assert(!falsified_soft.empty());
  ClauseId best = falsified_soft[0];
  double best_ucb = -std::numeric_limits<double>::infinity();
  for (const ClauseId c : falsified_soft) {
    const double u = bandit.ucb(bandit.arm(c), lambda);
    if (u > best_ucb) {
      best_ucb = u;
      best = c;
    }
  }
  return best;
}

}  // namespace bandhs
