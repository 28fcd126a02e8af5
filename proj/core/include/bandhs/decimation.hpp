#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bandhs/formula.hpp"
#include "bandhs/indexed_set.hpp"
#include "bandhs/rng.hpp"

namespace bandhs {

enum class ClauseStatus : std::uint8_t { open, satisfied, empty };

enum class Pool : std::uint8_t { hard_unit = 0, soft_unit = 1, hard_binary = 2, soft_binary = 3 };
inline constexpr std::size_t kNumPools = 4;

// A formula under a partial assignment. Every open clause of live length 1
// or 2 sits in exactly one of the four pools matching its kind and length.
class ResidualFormula {
 public:
  explicit ResidualFormula(const Instance& inst);

  const Instance& instance() const { return *inst_; }

  // Assign an unassigned variable and simplify.
  void assign(Var v, bool value);

  bool is_assigned(Var v) const { return value_[v] != kUnassigned; }
  std::optional<bool> value(Var v) const {
    if (!is_assigned(v)) return std::nullopt;
    return value_[v] == 1;
  }

  ClauseStatus status(ClauseId c) const { return status_[c]; }
  std::uint32_t live_count(ClauseId c) const { return live_[c]; }
  std::vector<Literal> live_literals(ClauseId c) const;

  const IndexedSet& pool(Pool p) const { return pools_[static_cast<std::size_t>(p)]; }
  const IndexedSet& unassigned() const { return unassigned_; }

  // Total original weight of open soft clauses containing l.
  Weight open_soft_weight(Literal l) const;

  // Requires every variable to be assigned.
  Assignment to_assignment() const;

 private:
  static constexpr std::uint8_t kUnassigned = 2;

  void update_pool(ClauseId c);
  void leave_pool(ClauseId c);

  const Instance* inst_;
  std::vector<std::uint8_t> value_;
  std::vector<ClauseStatus> status_;
  std::vector<std::uint32_t> live_;
  std::vector<std::int8_t> pool_of_;
  std::array<IndexedSet, kNumPools> pools_;
  IndexedSet unassigned_;
};

// Pick the literal of an open binary clause whose satisfaction satisfies the
// most open soft weight; ties are broken uniformly at random.
Literal greedy_binary_literal(ClauseId c, const ResidualFormula& residual, Rng& rng);

struct DecimationOptions {
  bool prioritize_binary = true;
};

enum class DecisionKind : std::uint8_t { hard_unit, soft_unit, hard_binary, soft_binary, random_var };

struct Decision {
  DecisionKind kind;
  Var var;
  bool value;
  std::optional<ClauseId> clause;
  std::array<std::size_t, kNumPools> pool_sizes;  // before the decision
};

// Builds a complete assignment one variable at a time: open hard unit, then
// soft unit, then hard binary, then soft binary (greedy literal), else a
// random variable with a random value. Conflicting hard clauses do not stop
// the construction.
Assignment hydeci(const Instance& inst, Rng& rng, const DecimationOptions& options = {},
                  std::vector<Decision>* trace = nullptr);

}  // namespace bandhs
