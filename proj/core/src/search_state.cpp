#include "bandhs/search_state.hpp"

#include <cassert>
#include <stdexcept>

namespace bandhs {

std::vector<Weight> initial_dyn_weights(const Instance& inst) {
  std::vector<Weight> w(inst.num_clauses());
  for (ClauseId c = 0; c < inst.num_clauses(); ++c) {
    w[c] = inst.is_hard(c) ? 1 : inst.clause(c).weight;
  }
  return w;
}

SearchState::SearchState(const Instance& inst, Assignment a)
    : SearchState(inst, std::move(a), initial_dyn_weights(inst)) {}

SearchState::SearchState(const Instance& inst, Assignment a, std::vector<Weight> weights)
    : inst_(&inst), assignment_(std::move(a)), weight_(std::move(weights)) {
  if (assignment_.size() != inst.num_vars()) {
    throw std::invalid_argument("assignment size does not match the instance");
  }
  if (weight_.size() != inst.num_clauses()) {
    throw std::invalid_argument("one dynamic weight per clause required");
  }
  rebuild();
}

void SearchState::rebuild() {
  const Instance& inst = *inst_;
  sat_count_.assign(inst.num_clauses(), 0);
  score_.assign(std::size_t{inst.num_vars()} + 1, 0);
  falsified_hard_.reset(inst.num_clauses());
  falsified_soft_.reset(inst.num_clauses());
  goodvars_.reset(std::size_t{inst.num_vars()} + 1);
  cost_ = 0;

  for (ClauseId c = 0; c < inst.num_clauses(); ++c) {
    const auto& lits = inst.clause(c).literals;
    Var last_true = 0;
    for (const Literal l : lits) {
      if (assignment_.satisfies(l)) {
        ++sat_count_[c];
        last_true = l.var;
      }
    }
    const auto w = static_cast<std::int64_t>(weight_[c]);
    if (sat_count_[c] == 0) {
      set_falsified(c);
      for (const Literal l : lits) score_[l.var] += w;
    } else if (sat_count_[c] == 1) {
      score_[last_true] -= w;
    }
  }
  for (Var v = 1; v <= inst.num_vars(); ++v) {
    if (score_[v] > 0) goodvars_.insert(v);
  }
}

void SearchState::adjust_score(Var v, std::int64_t delta) {
  score_[v] += delta;
  if (score_[v] > 0) {
    goodvars_.insert(v);
  } else {
    goodvars_.erase(v);
  }
}

void SearchState::set_falsified(ClauseId c) {
  if (inst_->is_hard(c)) {
    falsified_hard_.insert(c);
  } else {
    falsified_soft_.insert(c);
    cost_ += inst_->clause(c).weight;
  }
}

void SearchState::set_satisfied(ClauseId c) {
  if (inst_->is_hard(c)) {
    falsified_hard_.erase(c);
  } else {
    falsified_soft_.erase(c);
    cost_ -= inst_->clause(c).weight;
  }
}

Var SearchState::true_var_except(ClauseId c, Var skip) const {
  for (const Literal l : inst_->clause(c).literals) {
    if (l.var != skip && assignment_.satisfies(l)) return l.var;
  }
  assert(false && "clause has no other satisfied literal");
  return 0;
}

void SearchState::flip(Var v) {
  assignment_.flip(v);
  ++flips_;
  for (const Occurrence occ : inst_->var_occurrences(v)) {
    const ClauseId c = occ.clause;
    const auto& lits = inst_->clause(c).literals;
    const auto w = static_cast<std::int64_t>(weight_[c]);
    if (assignment_.satisfies(lits[occ.position])) {
      const auto count = ++sat_count_[c];
      if (count == 1) {
        set_satisfied(c);
        for (const Literal l : lits) adjust_score(l.var, -w);
        adjust_score(v, -w);
      } else if (count == 2) {
        adjust_score(true_var_except(c, v), w);
      }
    } else {
      const auto count = --sat_count_[c];
      if (count == 0) {
        set_falsified(c);
        for (const Literal l : lits) adjust_score(l.var, w);
        adjust_score(v, w);
      } else if (count == 1) {
        adjust_score(true_var_except(c, v), -w);
      }
    }
  }
}

void SearchState::add_weight(ClauseId c, Weight delta) {
  weight_[c] += delta;
  const auto d = static_cast<std::int64_t>(delta);
  if (sat_count_[c] == 0) {
    for (const Literal l : inst_->clause(c).literals) adjust_score(l.var, d);
  } else if (sat_count_[c] == 1) {
    adjust_score(true_var_except(c, 0), -d);
  }
}

}  // namespace bandhs
