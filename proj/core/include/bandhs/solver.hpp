#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bandhs/bandit.hpp"
#include "bandhs/formula.hpp"
#include "bandhs/rng.hpp"
#include "bandhs/search_state.hpp"

namespace bandhs {

struct Params {
  std::uint32_t k = 15;         // BMS samples
  std::uint32_t d = 20;         // delayed-reward history length
  double gamma = 0.9;           // reward discount
  std::uint32_t arm_num = 20;   // soft arms sampled per pick
  double lambda = 1.0;          // exploration bias
  double cutoff_seconds = 300.0;
  std::optional<std::uint64_t> max_steps;
  std::uint64_t seed = 1;

  bool no_delay = false;        // forces d = 1
  bool mixed_training = false;  // keep training the hard bandit after a feasible solution
  bool no_binary = false;       // initialization ignores binary clauses
  bool no_sample = false;       // soft pick scans every falsified soft clause
  bool first_feasible = false;  // stop at the first feasible solution
  HardReward hard_reward = HardReward::relative;

  // Clause weighting at local optima.
  Weight hard_weight_inc = 1;
  Weight soft_weight_inc = 1;
  double soft_cap_factor = 10.0;

  std::uint32_t history_length() const { return no_delay ? 1 : d; }
  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

enum class RunStatus : std::uint8_t { feasible, no_feasible_found };

struct TracePoint {
  double seconds;
  std::uint64_t step;
  Weight cost;
};

enum class StepKind : std::uint8_t {
  descent,            // BMS pick among positive-score variables
  hard_bandit,        // infeasible local optimum, hard bandit pick
  hard_greedy,        // infeasible local optimum after a feasible solution
  soft_bandit         // feasible local optimum
};

struct StepEvent {
  std::uint64_t step;
  StepKind kind;
  Var flipped;
  std::optional<ClauseId> clause;
  bool best_feasible;                   // A* feasible before this step
  std::uint64_t hard_local_optima;      // N_h after this step's update
  std::uint64_t soft_local_optima;      // N_s after this step's update
  std::uint64_t hard_mutations_before;  // hard bandit mutation count entering the step
  std::uint64_t hard_mutations_after;
  bool hard_reward_skipped;             // first hard update, no previous optimum
};

class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_improvement(const TracePoint&) {}
  virtual void on_step(const StepEvent&, const SearchState&) {}
};

struct RunStats {
  std::uint64_t hard_optima = 0;
  std::uint64_t soft_optima = 0;
  std::uint64_t hard_reward_skips = 0;
  std::uint64_t hard_mutations_after_feasible = 0;
};

struct RunResult {
  RunStatus status = RunStatus::no_feasible_found;
  std::optional<Assignment> best_assignment;
  Weight best_cost = std::numeric_limits<Weight>::max();
  std::vector<TracePoint> trace;
  std::uint64_t steps = 0;
  std::optional<double> time_to_first_feasible;
  std::optional<std::uint64_t> step_of_first_feasible;
  bool proven_optimal = false;  // reached cost 0
  HardBandit hard_bandit;
  SoftBandit soft_bandit;
  RunStats stats;

  bool feasible() const { return status == RunStatus::feasible; }
  std::uint64_t hard_local_optima() const { return hard_bandit.local_optima(); }
  std::uint64_t soft_local_optima() const { return soft_bandit.local_optima(); }
};

// Anytime local search with bandit-guided escapes from local optima.
RunResult solve(const Instance& inst, const Params& params, SearchObserver* observer = nullptr);

// k draws with replacement from the positive-score variables; the highest
// score wins, ties to the earliest draw. goodvars must be non-empty.
Var bms_pick(const SearchState& state, std::uint32_t k, Rng& rng);

// Variable of c with the highest score; ties to the lowest index.
Var best_score_var_in_clause(const SearchState& state, ClauseId c);

ClauseId random_falsified_hard(const SearchState& state, Rng& rng);

// Per-clause soft weight caps: max(original, ceil(factor * mean soft weight)).
class ClauseWeighting {
 public:
  ClauseWeighting(const Instance& inst, const Params& params);

  // At an infeasible optimum bump every falsified hard clause, otherwise
  // every falsified soft clause below its cap.
  void update(SearchState& state) const;
  Weight cap(ClauseId c) const { return cap_[c]; }

 private:
  Weight hard_inc_;
  Weight soft_inc_;
  std::vector<Weight> cap_;
};

}  // namespace bandhs
