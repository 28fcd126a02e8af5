#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bandhs/formula.hpp"
#include "bandhs/indexed_set.hpp"

namespace bandhs {

// Current assignment plus everything the local search reads per step, all
// maintained incrementally under flip() and add_weight():
//   - per-clause satisfied-literal counts and dynamic weights,
//   - per-variable score: dynamic weight of falsified clauses removed by
//     flipping the variable (positive means improving),
//   - falsified hard and soft clause sets, cost, and the set of variables
//     with positive score.
//
// Dynamic weights start at 1 for hard clauses and at the original weight for
// soft clauses. The instance must outlive the state.
class SearchState {
 public:
  SearchState(const Instance& inst, Assignment a);
  // Rebuild from scratch with explicit dynamic weights, one per clause.
  SearchState(const Instance& inst, Assignment a, std::vector<Weight> weights);

  const Instance& instance() const { return *inst_; }
  const Assignment& assignment() const { return assignment_; }
  bool value(Var v) const { return assignment_[v]; }

  std::uint32_t sat_count(ClauseId c) const { return sat_count_[c]; }
  Weight dyn_weight(ClauseId c) const { return weight_[c]; }
  std::span<const Weight> dyn_weights() const { return weight_; }
  std::int64_t score(Var v) const { return score_[v]; }

  // Unified clause ids (see Instance).
  const IndexedSet& falsified_hard() const { return falsified_hard_; }
  const IndexedSet& falsified_soft() const { return falsified_soft_; }
  const IndexedSet& goodvars() const { return goodvars_; }

  Weight cost() const { return cost_; }
  std::size_t hard_falsified_count() const { return falsified_hard_.size(); }
  bool feasible() const { return falsified_hard_.empty(); }
  std::uint64_t flips() const { return flips_; }

  void flip(Var v);
  // Raise the dynamic weight of clause c by delta, updating affected scores.
  void add_weight(ClauseId c, Weight delta);

 private:
  void rebuild();
  void adjust_score(Var v, std::int64_t delta);
  void set_falsified(ClauseId c);
  void set_satisfied(ClauseId c);
  // The variable of the single satisfying literal of c other than `skip`.
  Var true_var_except(ClauseId c, Var skip) const;

  const Instance* inst_;
  Assignment assignment_;
  std::vector<std::uint32_t> sat_count_;
  std::vector<Weight> weight_;
  std::vector<std::int64_t> score_;
  IndexedSet falsified_hard_;
  IndexedSet falsified_soft_;
  IndexedSet goodvars_;
  Weight cost_ = 0;
  std::uint64_t flips_ = 0;
};

std::vector<Weight> initial_dyn_weights(const Instance& inst);

}  // namespace bandhs
