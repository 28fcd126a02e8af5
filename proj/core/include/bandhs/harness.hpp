#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandhs/formula.hpp"
#include "bandhs/rng.hpp"
#include "bandhs/solver.hpp"

namespace bandhs {

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorSpec {
  Var num_vars = 10;
  std::size_t num_hard = 10;
  std::size_t num_soft = 10;
  std::uint32_t min_len = 1;
  std::uint32_t max_len = 3;
  Weight min_weight = 1;
  Weight max_weight = 1;
  bool force_hard_sat = true;
};

struct GeneratedInstance {
  Instance instance;
  Assignment hidden;  // satisfies every hard clause when force_hard_sat
};

// Clauses use distinct variables. With force_hard_sat a hidden assignment is
// drawn first and every hard clause gets a literal true under it. Throws
// std::invalid_argument for inconsistent bounds.
GeneratedInstance generate_instance(const GeneratorSpec& spec, Rng& rng);

// ---------------------------------------------------------------------------
// Scoring

// (min(best known, feasible costs) + 1) / (cost + 1) per solver, 0 when
// infeasible (nullopt).
std::vector<double> mse_score(std::optional<Weight> best_known, std::span<const std::optional<Weight>> costs);

struct Outcome {
  std::optional<Weight> cost;  // nullopt: infeasible
  double time = 0.0;           // time to best
};

// Indices of the winners on one instance: strictly lowest cost, ties broken
// by the smallest time; exact ties in both credit every tied solver. No
// winner when every outcome is infeasible.
std::vector<std::size_t> winners(std::span<const Outcome> outcomes);

struct WinStat {
  std::size_t wins = 0;
  std::optional<double> mean_time;  // over winning instances
};

// outcomes[i][j]: instance i, solver j.
std::vector<WinStat> wins_and_times(const std::vector<std::vector<Outcome>>& outcomes);

// ---------------------------------------------------------------------------
// Suites

struct NamedConfig {
  std::string name;
  Params params;
};

// Wall-clock seconds, or step counts for reproducible reports.
enum class TimeBasis : std::uint8_t { seconds, steps };

struct SuiteOptions {
  unsigned parallelism = 1;
  std::uint64_t seed = 1;
  TimeBasis time_basis = TimeBasis::seconds;
  std::map<std::string, Weight> best_known;  // by instance name
};

struct SuiteInstance {
  std::string name;
  std::optional<Instance> instance;  // nullopt when it failed to load
  std::string error;
};

struct RunRow {
  std::string instance;
  std::string config;
  bool feasible = false;
  std::optional<Weight> cost;
  std::optional<double> seconds_first_feasible;
  std::optional<double> seconds_best;
  std::optional<std::uint64_t> step_first_feasible;
  std::optional<std::uint64_t> step_best;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;

  std::optional<double> time_first_feasible(TimeBasis basis) const;
  std::optional<double> time_best(TimeBasis basis) const;
};

struct ConfigSummary {
  std::string config;
  std::size_t wins = 0;
  std::optional<double> mean_time;
  double mean_mse = 0.0;
  std::size_t feasible = 0;
};

struct BenchReport {
  TimeBasis time_basis = TimeBasis::seconds;
  std::vector<std::string> instances;               // solved instances, in order
  std::vector<std::pair<std::string, std::string>> skipped;  // name, reason
  std::vector<RunRow> rows;                         // instance-major, config-minor
  std::vector<ConfigSummary> summary;
};

// Per-run seed: base seed xor a stable hash of (instance name, config name).
std::uint64_t derive_seed(std::uint64_t base, const std::string& instance, const std::string& config);

BenchReport run_suite(std::span<const SuiteInstance> instances, std::span<const NamedConfig> configs,
                      const SuiteOptions& options);
// Loads every *.wcnf file in dir (sorted by name); unparseable files are
// recorded as skipped.
BenchReport run_suite(const std::filesystem::path& dir, std::span<const NamedConfig> configs,
                      const SuiteOptions& options);

// Equality over everything except wall-clock measurements.
bool same_outcomes(const BenchReport& a, const BenchReport& b);

// CSV columns: path,config,cost,feasible,t_first_feasible,t_best,steps
void write_csv(std::ostream& out, const BenchReport& report);
void write_json(std::ostream& out, const BenchReport& report);

// Lines `<instance-name> <cost>`; blank lines and `#`/`c` comments ignored.
std::map<std::string, Weight> read_best_known(std::istream& in);

}  // namespace bandhs
