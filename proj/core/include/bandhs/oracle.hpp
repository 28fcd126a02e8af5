#pragma once

#include <cstdint>

#include "bandhs/formula.hpp"

namespace bandhs {

enum class ExactStatus : std::uint8_t { optimal, hard_unsat };

struct ExactResult {
  ExactStatus status = ExactStatus::hard_unsat;
  Weight opt_cost = 0;
  Assignment assignment;  // one optimum, when status is optimal
};

inline constexpr Var kDefaultOracleVarLimit = 25;

// Exhaustive enumeration of all 2^n assignments. Throws std::invalid_argument
// if num_vars exceeds var_limit (itself capped at 40).
ExactResult exact_solve(const Instance& inst, Var var_limit = kDefaultOracleVarLimit);

}  // namespace bandhs
