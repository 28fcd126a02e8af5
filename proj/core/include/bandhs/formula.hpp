#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bandhs {

using Var = std::uint32_t;
using ClauseId = std::uint32_t;
using Weight = std::uint64_t;

struct Literal {
  Var var = 0;
  bool negated = false;

  constexpr bool satisfied_by(bool value) const { return value != negated; }
  constexpr Literal operator~() const { return {var, !negated}; }
  // Dense index used for occurrence tables: 2*var + negated.
  constexpr std::size_t index() const { return 2 * std::size_t{var} + (negated ? 1 : 0); }

  static constexpr Literal from_dimacs(std::int64_t lit) {
    return {static_cast<Var>(lit < 0 ? -lit : lit), lit < 0};
  }
  constexpr std::int64_t to_dimacs() const {
    return negated ? -static_cast<std::int64_t>(var) : static_cast<std::int64_t>(var);
  }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

enum class ClauseKind : std::uint8_t { hard, soft };

struct Clause {
  std::vector<Literal> literals;
  ClauseKind kind = ClauseKind::soft;
  Weight weight = 0;  // 0 for hard clauses

  bool is_hard() const { return kind == ClauseKind::hard; }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Occurrence {
  ClauseId clause;
  std::uint32_t position;
};

// What clause normalization removed while building an instance.
struct NormalizationReport {
  std::size_t tautologies_dropped = 0;
  std::size_t duplicate_literals_removed = 0;
};

// Complete truth assignment over variables 1..size().
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var num_vars, bool value = false) : values_(num_vars, value ? 1 : 0) {}

  Var size() const { return static_cast<Var>(values_.size()); }
  bool operator[](Var v) const { return values_[v - 1] != 0; }
  void set(Var v, bool value) { values_[v - 1] = value ? 1 : 0; }
  void flip(Var v) { values_[v - 1] ^= 1; }
  bool satisfies(Literal l) const { return l.satisfied_by((*this)[l.var]); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

// An immutable (weighted) partial MaxSAT formula.
//
// Clause ids are unified: hard clauses occupy [0, num_hard()) and soft
// clauses [num_hard(), num_clauses()). Construction normalizes every clause:
// duplicate literals are merged and tautologies dropped.
class Instance {
 public:
  Instance() = default;
  Instance(Var num_vars, std::vector<std::vector<Literal>> hard,
           std::vector<std::pair<std::vector<Literal>, Weight>> soft,
           std::optional<Weight> top_weight = std::nullopt);

  Var num_vars() const { return num_vars_; }
  std::size_t num_hard() const { return num_hard_; }
  std::size_t num_soft() const { return clauses_.size() - num_hard_; }
  std::size_t num_clauses() const { return clauses_.size(); }

  const Clause& clause(ClauseId id) const { return clauses_[id]; }
  bool is_hard(ClauseId id) const { return id < num_hard_; }
  std::span<const Clause> clauses() const { return clauses_; }
  std::span<const Clause> hard_clauses() const { return {clauses_.data(), num_hard_}; }
  std::span<const Clause> soft_clauses() const {
    return std::span<const Clause>(clauses_).subspan(num_hard_);
  }
  ClauseId soft_id(std::size_t soft_index) const { return static_cast<ClauseId>(num_hard_ + soft_index); }

  std::optional<Weight> top_weight() const { return top_weight_; }
  Weight total_soft_weight() const { return total_soft_weight_; }
  const NormalizationReport& normalization() const { return normalization_; }

  // Occurrences of a literal in hard (resp. soft) clauses.
  std::span<const Occurrence> hard_occurrences(Literal l) const { return hard_occ_[l.index()]; }
  std::span<const Occurrence> soft_occurrences(Literal l) const { return soft_occ_[l.index()]; }
  // All clauses mentioning the variable, in either polarity.
  std::span<const Occurrence> var_occurrences(Var v) const { return var_occ_[v]; }

  // Structural equality: variables, clause order, literals, kinds, weights.
  // The top weight is a serialization detail and does not participate.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.num_vars_ == b.num_vars_ && a.num_hard_ == b.num_hard_ && a.clauses_ == b.clauses_;
  }

 private:
  void index();

  Var num_vars_ = 0;
  std::size_t num_hard_ = 0;
  std::vector<Clause> clauses_;
  std::optional<Weight> top_weight_;
  Weight total_soft_weight_ = 0;
  NormalizationReport normalization_;
  std::vector<std::vector<Occurrence>> hard_occ_;
  std::vector<std::vector<Occurrence>> soft_occ_;
  std::vector<std::vector<Occurrence>> var_occ_;
};

bool clause_satisfied(const Clause& c, const Assignment& a);

// Total original weight of soft clauses with no satisfied literal.
Weight evaluate_cost(const Instance& inst, const Assignment& a);

std::size_t falsified_hard_count(const Instance& inst, const Assignment& a);

inline bool is_feasible(const Instance& inst, const Assignment& a) {
  return falsified_hard_count(inst, a) == 0;
}

}  // namespace bandhs
