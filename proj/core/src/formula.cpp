#include "bandhs/formula.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bandhs {

namespace {

// Sorts, merges duplicates and detects x / -x pairs. Returns false for a
// tautology.
bool normalize(std::vector<Literal>& lits, NormalizationReport& report) {
  std::sort(lits.begin(), lits.end());
  const auto before = lits.size();
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  report.duplicate_literals_removed += before - lits.size();
  // After sorting, x and -x of the same variable are adjacent.
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var == lits[i - 1].var) {
      ++report.tautologies_dropped;
      return false;
    }
  }
  return true;
}

void check_literals(const std::vector<Literal>& lits, Var num_vars) {
  if (lits.empty()) throw std::invalid_argument("clause has no literals");
  for (const Literal l : lits) {
    if (l.var == 0 || l.var > num_vars) {
      throw std::invalid_argument("literal variable " + std::to_string(l.var) + " out of range 1.." +
                                  std::to_string(num_vars));
    }
  }
}

}  // namespace

Instance::Instance(Var num_vars, std::vector<std::vector<Literal>> hard,
                   std::vector<std::pair<std::vector<Literal>, Weight>> soft,
                   std::optional<Weight> top_weight)
    : num_vars_(num_vars), top_weight_(top_weight) {
  clauses_.reserve(hard.size() + soft.size());
  for (auto& lits : hard) {
    check_literals(lits, num_vars);
    if (!normalize(lits, normalization_)) continue;
    clauses_.push_back({std::move(lits), ClauseKind::hard, 0});
  }
  num_hard_ = clauses_.size();
  for (auto& [lits, w] : soft) {
    check_literals(lits, num_vars);
    if (w == 0) throw std::invalid_argument("soft clause weight must be positive");
    if (!normalize(lits, normalization_)) continue;
    if (w > std::numeric_limits<Weight>::max() - total_soft_weight_) {
      throw std::overflow_error("total soft weight overflows 64 bits");
    }
    total_soft_weight_ += w;
    clauses_.push_back({std::move(lits), ClauseKind::soft, w});
  }
  index();
}

void Instance::index() {
  const std::size_t lit_slots = 2 * (std::size_t{num_vars_} + 1);
  hard_occ_.assign(lit_slots, {});
  soft_occ_.assign(lit_slots, {});
  var_occ_.assign(std::size_t{num_vars_} + 1, {});
  for (ClauseId id = 0; id < clauses_.size(); ++id) {
    const auto& lits = clauses_[id].literals;
    auto& table = is_hard(id) ? hard_occ_ : soft_occ_;
    for (std::uint32_t pos = 0; pos < lits.size(); ++pos) {
      table[lits[pos].index()].push_back({id, pos});
      var_occ_[lits[pos].var].push_back({id, pos});
    }
  }
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [&](Literal l) { return a.satisfies(l); });
}

Weight evaluate_cost(const Instance& inst, const Assignment& a) {
  Weight cost = 0;
  for (const Clause& c : inst.soft_clauses()) {
    if (!clause_satisfied(c, a)) cost += c.weight;
  }
  return cost;
}

std::size_t falsified_hard_count(const Instance& inst, const Assignment& a) {
  return static_cast<std::size_t>(
      std::count_if(inst.hard_clauses().begin(), inst.hard_clauses().end(),
                    [&](const Clause& c) { return !clause_satisfied(c, a); }));
}

}  // namespace bandhs
