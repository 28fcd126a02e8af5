#include "bandhs/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandhs {

namespace {

// Bit v-1 of `pos` (resp. `neg`) is set when v occurs positively (resp.
// negatively). The clause holds under mask m iff (m & pos) | (~m & neg) != 0.
struct BitClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  Weight weight = 0;

  bool satisfied(std::uint64_t m) const { return ((m & pos) | (~m & neg)) != 0; }
};

BitClause to_bits(const Clause& c) {
  BitClause b;
  b.weight = c.weight;
  for (const Literal l : c.literals) {
    const std::uint64_t bit = std::uint64_t{1} << (l.var - 1);
    (l.negated ? b.neg : b.pos) |= bit;
  }
  return b;
}

}  // namespace

ExactResult exact_solve(const Instance& inst, Var var_limit) {
  constexpr Var kHardCap = 40;
  if (var_limit > kHardCap) var_limit = kHardCap;
  if (inst.num_vars() > var_limit) {
    throw std::invalid_argument("exact solver limited to " + std::to_string(var_limit) + " variables, instance has " +
                                std::to_string(inst.num_vars()));
  }

  std::vector<BitClause> hard;
  std::vector<BitClause> soft;
  for (const Clause& c : inst.hard_clauses()) hard.push_back(to_bits(c));
  for (const Clause& c : inst.soft_clauses()) soft.push_back(to_bits(c));

  const std::uint64_t total = std::uint64_t{1} << inst.num_vars();
  bool found = false;
  Weight best = std::numeric_limits<Weight>::max();
  std::uint64_t best_mask = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool ok = true;
    for (const BitClause& c : hard) {
      if (!c.satisfied(m)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Weight cost = 0;
    for (const BitClause& c : soft) {
      if (!c.satisfied(m)) {
        cost += c.weight;
        if (found && cost >= best) break;
      }
    }
    if (!found || cost < best) {
      found = true;
      best = cost;
      best_mask = m;
      if (best == 0) break;
    }
  }

  ExactResult res;
  if (!found) return res;
  res.status = ExactStatus::optimal;
  res.opt_cost = best;
  res.assignment = Assignment(inst.num_vars());
  for (Var v = 1; v <= inst.num_vars(); ++v) res.assignment.set(v, ((best_mask >> (v - 1)) & 1) != 0);
  return res;
}

}  // namespace bandhs
