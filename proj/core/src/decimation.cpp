#include "bandhs/decimation.hpp"

#include <cassert>
#include <stdexcept>

namespace bandhs {

ResidualFormula::ResidualFormula(const Instance& inst)
    : inst_(&inst),
      value_(std::size_t{inst.num_vars()} + 1, kUnassigned),
      status_(inst.num_clauses(), ClauseStatus::open),
      live_(inst.num_clauses()),
      pool_of_(inst.num_clauses(), -1),
      unassigned_(std::size_t{inst.num_vars()} + 1) {
  for (auto& p : pools_) p.reset(inst.num_clauses());
  for (ClauseId c = 0; c < inst.num_clauses(); ++c) {
    live_[c] = static_cast<std::uint32_t>(inst.clause(c).literals.size());
    update_pool(c);
  }
  for (Var v = 1; v <= inst.num_vars(); ++v) unassigned_.insert(v);
}

void ResidualFormula::leave_pool(ClauseId c) {
  if (pool_of_[c] >= 0) {
    pools_[static_cast<std::size_t>(pool_of_[c])].erase(c);
    pool_of_[c] = -1;
  }
}

void ResidualFormula::update_pool(ClauseId c) {
  leave_pool(c);
  if (status_[c] != ClauseStatus::open || live_[c] == 0 || live_[c] > 2) return;
  const bool hard = inst_->is_hard(c);
  Pool p;
  if (live_[c] == 1) {
    p = hard ? Pool::hard_unit : Pool::soft_unit;
  } else {
    p = hard ? Pool::hard_binary : Pool::soft_binary;
  }
  pool_of_[c] = static_cast<std::int8_t>(p);
  pools_[static_cast<std::size_t>(p)].insert(c);
}

void ResidualFormula::assign(Var v, bool value) {
  if (is_assigned(v)) throw std::logic_error("variable already assigned");
  value_[v] = value ? 1 : 0;
  unassigned_.erase(v);
  for (const Occurrence occ : inst_->var_occurrences(v)) {
    const ClauseId c = occ.clause;
    if (status_[c] != ClauseStatus::open) continue;
    if (inst_->clause(c).literals[occ.position].satisfied_by(value)) {
      status_[c] = ClauseStatus::satisfied;
      leave_pool(c);
    } else {
      if (--live_[c] == 0) status_[c] = ClauseStatus::empty;
      update_pool(c);
    }
  }
}

std::vector<Literal> ResidualFormula::live_literals(ClauseId c) const {
  std::vector<Literal> out;
  for (const Literal l : inst_->clause(c).literals) {
    if (!is_assigned(l.var)) out.push_back(l);
  }
  return out;
}

Weight ResidualFormula::open_soft_weight(Literal l) const {
  Weight total = 0;
  for (const Occurrence occ : inst_->soft_occurrences(l)) {
    if (status_[occ.clause] == ClauseStatus::open) total += inst_->clause(occ.clause).weight;
  }
  return total;
}

Assignment ResidualFormula::to_assignment() const {
  Assignment a(inst_->num_vars());
  for (Var v = 1; v <= inst_->num_vars(); ++v) {
    if (!is_assigned(v)) throw std::logic_error("incomplete assignment");
    a.set(v, value_[v] == 1);
  }
  return a;
}

Literal greedy_binary_literal(ClauseId c, const ResidualFormula& residual, Rng& rng) {
  const auto live = residual.live_literals(c);
  assert(live.size() == 2);
  const Weight w0 = residual.open_soft_weight(live[0]);
  const Weight w1 = residual.open_soft_weight(live[1]);
  if (w0 != w1) return w0 > w1 ? live[0] : live[1];
  return rng.coin() ? live[1] : live[0];
}

Assignment hydeci(const Instance& inst, Rng& rng, const DecimationOptions& options,
                  std::vector<Decision>* trace) {
  ResidualFormula residual(inst);

  auto draw = [&](Pool p) -> ClauseId {
    const auto& pool = residual.pool(p);
    return pool[rng.below(pool.size())];
  };

  while (!residual.unassigned().empty()) {
    std::array<std::size_t, kNumPools> sizes{};
    for (std::size_t i = 0; i < kNumPools; ++i) sizes[i] = residual.pool(static_cast<Pool>(i)).size();

    DecisionKind kind;
    std::optional<ClauseId> clause;
    Literal chosen;
    if (!residual.pool(Pool::hard_unit).empty()) {
      kind = DecisionKind::hard_unit;
      clause = draw(Pool::hard_unit);
      chosen = residual.live_literals(*clause).front();
    } else if (!residual.pool(Pool::soft_unit).empty()) {
      kind = DecisionKind::soft_unit;
      clause = draw(Pool::soft_unit);
      chosen = residual.live_literals(*clause).front();
    } else if (options.prioritize_binary && !residual.pool(Pool::hard_binary).empty()) {
      kind = DecisionKind::hard_binary;
      clause = draw(Pool::hard_binary);
      chosen = greedy_binary_literal(*clause, residual, rng);
    } else if (options.prioritize_binary && !residual.pool(Pool::soft_binary).empty()) {
      kind = DecisionKind::soft_binary;
      clause = draw(Pool::soft_binary);
      chosen = greedy_binary_literal(*clause, residual, rng);
    } else {
      kind = DecisionKind::random_var;
      const auto& free = residual.unassigned();
      chosen.var = free[rng.below(free.size())];
      chosen.negated = rng.coin();
    }

    const bool value = !chosen.negated;
    residual.assign(chosen.var, value);
    if (trace) trace->push_back({kind, chosen.var, value, clause, sizes});
  }
  return residual.to_assignment();
}

}  // namespace bandhs
