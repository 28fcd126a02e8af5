#include "bandhs/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "bandhs/decimation.hpp"

namespace bandhs {

void Params::validate() const {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (d == 0) throw std::invalid_argument("d must be at least 1");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (arm_num == 0) throw std::invalid_argument("arm-num must be at least 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
  if (!(cutoff_seconds >= 0.0)) throw std::invalid_argument("cutoff must be non-negative");
  if (!(soft_cap_factor > 0.0)) throw std::invalid_argument("soft cap factor must be positive");
}

Var bms_pick(const SearchState& state, std::uint32_t k, Rng& rng) {
  const auto& good = state.goodvars();
  assert(!good.empty());
  Var best = good[rng.below(good.size())];
  for (std::uint32_t i = 1; i < k; ++i) {
    const Var v = good[rng.below(good.size())];
    if (state.score(v) > state.score(best)) best = v;
  }
  return best;
}

Var best_score_var_in_clause(const SearchState& state, ClauseId c) {
  const auto& lits = state.instance().clause(c).literals;
  Var best = lits.front().var;
  for (const Literal l : lits) {
    const auto s = state.score(l.var);
    if (s > state.score(best) || (s == state.score(best) && l.var < best)) best = l.var;
  }
  return best;
}

ClauseId random_falsified_hard(const SearchState& state, Rng& rng) {
  const auto& f = state.falsified_hard();
  assert(!f.empty());
  return f[rng.below(f.size())];
}

ClauseWeighting::ClauseWeighting(const Instance& inst, const Params& params)
    : hard_inc_(params.hard_weight_inc), soft_inc_(params.soft_weight_inc), cap_(inst.num_clauses(), 0) {
  if (inst.num_soft() == 0) return;
  const double mean = static_cast<double>(inst.total_soft_weight()) / static_cast<double>(inst.num_soft());
  const auto scaled = static_cast<Weight>(std::ceil(params.soft_cap_factor * mean));
  for (ClauseId c = static_cast<ClauseId>(inst.num_hard()); c < inst.num_clauses(); ++c) {
    cap_[c] = std::max(inst.clause(c).weight, scaled);
  }
}

void ClauseWeighting::update(SearchState& state) const {
  if (!state.feasible()) {
    // add_weight leaves the falsified sets untouched.
    for (const ClauseId c : state.falsified_hard()) state.add_weight(c, hard_inc_);
    return;
  }
  for (const ClauseId c : state.falsified_soft()) {
    const Weight w = state.dyn_weight(c);
    if (w >= cap_[c]) continue;
    state.add_weight(c, std::min(soft_inc_, cap_[c] - w));
  }
}

namespace {

class Clock {
 public:
  Clock() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

RunResult solve(const Instance& inst, const Params& params, SearchObserver* observer) {
  params.validate();
  const Clock clock;
  Rng rng(params.seed);
  RunResult res;

  DecimationOptions init_options;
  init_options.prioritize_binary = !params.no_binary;
  SearchState state(inst, hydeci(inst, rng, init_options));
  const ClauseWeighting weighting(inst, params);
  HardBandit hard(inst, params.history_length());
  SoftBandit soft(inst, params.history_length());

  std::optional<std::uint64_t> prev_hard;  // H' of the previous infeasible optimum
  Weight prev_cost = state.cost();         // cost of A'
  bool best_feasible = false;
  std::uint64_t step = 0;

  // Returns true when the run should stop.
  auto record = [&]() {
    if (!state.feasible()) return false;
    if (best_feasible && state.cost() >= res.best_cost) return false;
    const double now = clock.seconds();
    res.best_cost = state.cost();
    res.best_assignment = state.assignment();
    res.trace.push_back({now, step, state.cost()});
    if (!best_feasible) {
      best_feasible = true;
      res.time_to_first_feasible = now;
      res.step_of_first_feasible = step;
    }
    if (observer) observer->on_improvement(res.trace.back());
    if (state.cost() == 0) {
      res.proven_optimal = true;
      return true;
    }
    return params.first_feasible;
  };

  bool stopped = false;
  while (true) {
    if (params.max_steps && step >= *params.max_steps) break;
    if ((step & 1023) == 0 && clock.seconds() >= params.cutoff_seconds) break;
    if (record()) {
      stopped = true;
      break;
    }

    StepEvent ev{};
    ev.step = step;
    ev.best_feasible = best_feasible;
    ev.hard_mutations_before = hard.mutations();

    Var v;
    if (!state.goodvars().empty()) {
      ev.kind = StepKind::descent;
      v = bms_pick(state, params.k, rng);
    } else {
      weighting.update(state);
      if (!state.feasible()) {
        ++res.stats.hard_optima;
        const auto falsified = static_cast<std::uint64_t>(state.hard_falsified_count());
        const ClauseId c = random_falsified_hard(state, rng);
        ev.clause = c;
        if (!best_feasible || params.mixed_training) {
          if (prev_hard) {
            hard.apply_delayed_reward(reward_hard(falsified, *prev_hard, params.hard_reward), params.gamma);
          } else {
            ev.hard_reward_skipped = true;
            ++res.stats.hard_reward_skips;
          }
          hard.count_local_optimum();
          prev_hard = falsified;
          const HardArm arm = pick_hard_arm(hard, inst, c, params.lambda);
          hard.record_pull(arm.arm);
          ev.kind = StepKind::hard_bandit;
          v = inst.clause(c).literals[arm.position].var;
        } else {
          ev.kind = StepKind::hard_greedy;
          v = best_score_var_in_clause(state, c);
        }
      } else {
        ++res.stats.soft_optima;
        if (!soft.history().empty()) {
          soft.apply_delayed_reward(reward_soft(state.cost(), prev_cost, res.best_cost), params.gamma);
        }
        soft.count_local_optimum();
        prev_cost = state.cost();
        const ClauseId c = params.no_sample
                               ? pick_soft_arm_exhaustive(soft, state.falsified_soft(), params.lambda)
                               : pick_soft_arm(soft, state.falsified_soft(), params.arm_num, params.lambda, rng);
        soft.record_pull(soft.arm(c));
        ev.kind = StepKind::soft_bandit;
        ev.clause = c;
        v = best_score_var_in_clause(state, c);
      }
    }

    state.flip(v);
    ++step;
    if (best_feasible) res.stats.hard_mutations_after_feasible += hard.mutations() - ev.hard_mutations_before;
    if (observer) {
      ev.flipped = v;
      ev.hard_local_optima = hard.local_optima();
      ev.soft_local_optima = soft.local_optima();
      ev.hard_mutations_after = hard.mutations();
      observer->on_step(ev, state);
    }
  }
  if (!stopped) record();

  res.steps = step;
  res.status = best_feasible ? RunStatus::feasible : RunStatus::no_feasible_found;
  res.hard_bandit = std::move(hard);
  res.soft_bandit = std::move(soft);
  return res;
}

}  // namespace bandhs
