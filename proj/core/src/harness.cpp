#include "bandhs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bandhs/wcnf.hpp"

namespace bandhs {

GeneratedInstance generate_instance(const GeneratorSpec& spec, Rng& rng) {
  if (spec.num_vars == 0) throw std::invalid_argument("generator needs at least one variable");
  if (spec.min_len == 0 || spec.min_len > spec.max_len) throw std::invalid_argument("bad clause length range");
  if (spec.max_len > spec.num_vars) throw std::invalid_argument("clause length exceeds variable count");
  if (spec.min_weight == 0 || spec.min_weight > spec.max_weight) throw std::invalid_argument("bad weight range");

  Assignment hidden(spec.num_vars);
  for (Var v = 1; v <= spec.num_vars; ++v) hidden.set(v, rng.coin());

  std::vector<Var> vars(spec.num_vars);
  for (Var v = 0; v < spec.num_vars; ++v) vars[v] = v + 1;

  auto random_clause = [&] {
    const auto len = static_cast<std::uint32_t>(rng.between(spec.min_len, spec.max_len));
    // Partial Fisher-Yates for distinct variables.
    std::vector<Literal> lits;
    lits.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) {
      const auto j = i + rng.below(vars.size() - i);
      std::swap(vars[i], vars[j]);
      lits.push_back({vars[i], rng.coin()});
    }
    return lits;
  };

  std::vector<std::vector<Literal>> hard;
  hard.reserve(spec.num_hard);
  for (std::size_t i = 0; i < spec.num_hard; ++i) {
    auto lits = random_clause();
    if (spec.force_hard_sat &&
        std::none_of(lits.begin(), lits.end(), [&](Literal l) { return hidden.satisfies(l); })) {
      auto& l = lits[rng.below(lits.size())];
      l = ~l;
    }
    hard.push_back(std::move(lits));
  }
  std::vector<std::pair<std::vector<Literal>, Weight>> soft;
  soft.reserve(spec.num_soft);
  for (std::size_t i = 0; i < spec.num_soft; ++i) {
    auto lits = random_clause();
    soft.emplace_back(std::move(lits), rng.between(spec.min_weight, spec.max_weight));
  }
  return {Instance(spec.num_vars, std::move(hard), std::move(soft)), std::move(hidden)};
}

std::vector<double> mse_score(std::optional<Weight> best_known, std::span<const std::optional<Weight>> costs) {
  std::optional<Weight> best = best_known;
  for (const auto& c : costs) {
    if (c && (!best || *c < *best)) best = *c;
  }
  std::vector<double> scores;
  scores.reserve(costs.size());
  for (const auto& c : costs) {
    if (!c) {
      scores.push_back(0.0);
    } else {
      scores.push_back((static_cast<double>(*best) + 1.0) / (static_cast<double>(*c) + 1.0));
    }
  }
  return scores;
}

std::vector<std::size_t> winners(std::span<const Outcome> outcomes) {
  std::optional<Weight> best_cost;
  for (const auto& o : outcomes) {
    if (o.cost && (!best_cost || *o.cost < *best_cost)) best_cost = o.cost;
  }
  if (!best_cost) return {};
  double best_time = 0.0;
  bool first = true;
  for (const auto& o : outcomes) {
    if (o.cost == best_cost && (first || o.time < best_time)) {
      best_time = o.time;
      first = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].cost == best_cost && outcomes[i].time == best_time) out.push_back(i);
  }
  return out;
}

std::vector<WinStat> wins_and_times(const std::vector<std::vector<Outcome>>& outcomes) {
  const std::size_t solvers = outcomes.empty() ? 0 : outcomes.front().size();
  std::vector<WinStat> stats(solvers);
  std::vector<double> time_sum(solvers, 0.0);
  for (const auto& row : outcomes) {
    for (const std::size_t w : winners(row)) {
      ++stats[w].wins;
      time_sum[w] += row[w].time;
    }
  }
  for (std::size_t j = 0; j < solvers; ++j) {
    if (stats[j].wins > 0) stats[j].mean_time = time_sum[j] / static_cast<double>(stats[j].wins);
  }
  return stats;
}

std::optional<double> RunRow::time_first_feasible(TimeBasis basis) const {
  if (basis == TimeBasis::seconds) return seconds_first_feasible;
  if (!step_first_feasible) return std::nullopt;
  return static_cast<double>(*step_first_feasible);
}

std::optional<double> RunRow::time_best(TimeBasis basis) const {
  if (basis == TimeBasis::seconds) return seconds_best;
  if (!step_best) return std::nullopt;
  return static_cast<double>(*step_best);
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& instance, const std::string& config) {
  // FNV-1a, stable across platforms and standard libraries.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](const std::string& s) {
    for (const unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  mix(instance);
  h ^= 0xff;
  h *= 0x100000001b3ULL;
  mix(config);
  return base ^ h;
}

namespace {

RunRow run_one(const Instance& inst, const std::string& name, const NamedConfig& config,
               const SuiteOptions& options) {
  Params p = config.params;
  p.seed = derive_seed(options.seed, name, config.name);
  const RunResult r = solve(inst, p);

  RunRow row;
  row.instance = name;
  row.config = config.name;
  row.seed = p.seed;
  row.steps = r.steps;
  row.feasible = r.feasible();
  if (r.feasible()) {
    row.cost = r.best_cost;
    row.seconds_first_feasible = r.time_to_first_feasible;
    row.step_first_feasible = r.step_of_first_feasible;
    row.seconds_best = r.trace.back().seconds;
    row.step_best = r.trace.back().step;
  }
  return row;
}

void summarize(BenchReport& report, std::span<const NamedConfig> configs, const SuiteOptions& options) {
  const std::size_t nc = configs.size();
  std::vector<std::vector<Outcome>> outcomes;
  std::vector<double> mse_sum(nc, 0.0);
  report.summary.assign(nc, {});
  for (std::size_t j = 0; j < nc; ++j) report.summary[j].config = configs[j].name;

  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    std::vector<Outcome> row(nc);
    std::vector<std::optional<Weight>> costs(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      const RunRow& r = report.rows[i * nc + j];
      costs[j] = r.cost;
      row[j] = {r.cost, r.time_best(options.time_basis).value_or(0.0)};
      if (r.feasible) ++report.summary[j].feasible;
    }
    std::optional<Weight> bks;
    if (auto it = options.best_known.find(report.instances[i]); it != options.best_known.end()) bks = it->second;
    const auto scores = mse_score(bks, costs);
    for (std::size_t j = 0; j < nc; ++j) mse_sum[j] += scores[j];
    outcomes.push_back(std::move(row));
  }

  const auto stats = wins_and_times(outcomes);
  for (std::size_t j = 0; j < nc; ++j) {
    if (!stats.empty()) {
      report.summary[j].wins = stats[j].wins;
      report.summary[j].mean_time = stats[j].mean_time;
    }
    if (!report.instances.empty()) {
      report.summary[j].mean_mse = mse_sum[j] / static_cast<double>(report.instances.size());
    }
  }
}

}  // namespace

BenchReport run_suite(std::span<const SuiteInstance> instances, std::span<const NamedConfig> configs,
                      const SuiteOptions& options) {
  BenchReport report;
  report.time_basis = options.time_basis;
  std::vector<const SuiteInstance*> loaded;
  for (const auto& si : instances) {
    if (si.instance) {
      loaded.push_back(&si);
      report.instances.push_back(si.name);
    } else {
      report.skipped.emplace_back(si.name, si.error);
    }
  }

  const std::size_t nc = configs.size();
  const std::size_t jobs = loaded.size() * nc;
  report.rows.resize(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const SuiteInstance& si = *loaded[job / nc];
      report.rows[job] = run_one(*si.instance, si.name, configs[job % nc], options);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.parallelism, static_cast<unsigned>(jobs)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  summarize(report, configs, options);
  return report;
}

BenchReport run_suite(const std::filesystem::path& dir, std::span<const NamedConfig> configs,
                      const SuiteOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wcnf") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<SuiteInstance> instances;
  for (const auto& f : files) {
    SuiteInstance si;
    si.name = f.filename().string();
    try {
      si.instance = read_wcnf_file(f.string());
    } catch (const std::exception& e) {
      si.error = e.what();
    }
    instances.push_back(std::move(si));
  }
  return run_suite(instances, configs, options);
}

bool same_outcomes(const BenchReport& a, const BenchReport& b) {
  if (a.time_basis != b.time_basis || a.instances != b.instances || a.skipped != b.skipped ||
      a.rows.size() != b.rows.size() || a.summary.size() != b.summary.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const RunRow& x = a.rows[i];
    const RunRow& y = b.rows[i];
    if (x.instance != y.instance || x.config != y.config || x.feasible != y.feasible || x.cost != y.cost ||
        x.step_first_feasible != y.step_first_feasible || x.step_best != y.step_best || x.steps != y.steps ||
        x.seed != y.seed) {
      return false;
    }
  }
  const bool timed = a.time_basis == TimeBasis::steps;
  for (std::size_t j = 0; j < a.summary.size(); ++j) {
    const ConfigSummary& x = a.summary[j];
    const ConfigSummary& y = b.summary[j];
    if (x.config != y.config || x.mean_mse != y.mean_mse || x.feasible != y.feasible) return false;
    if (timed && (x.wins != y.wins || x.mean_time != y.mean_time)) return false;
  }
  return true;
}

namespace {

std::string format_time(std::optional<double> t, TimeBasis basis) {
  if (!t) return "";
  std::ostringstream s;
  if (basis == TimeBasis::steps) {
    s << static_cast<std::uint64_t>(*t);
  } else {
    s << std::fixed << std::setprecision(6) << *t;
  }
  return s.str();
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "path,config,cost,feasible,t_first_feasible,t_best,steps\n";
  for (const RunRow& r : report.rows) {
    out << r.instance << ',' << r.config << ',';
    if (r.cost) out << *r.cost;
    out << ',' << (r.feasible ? 1 : 0) << ',' << format_time(r.time_first_feasible(report.time_basis), report.time_basis)
        << ',' << format_time(r.time_best(report.time_basis), report.time_basis) << ',' << r.steps << '\n';
  }
}

void write_json(std::ostream& out, const BenchReport& report) {
  nlohmann::json j;
  j["time_basis"] = report.time_basis == TimeBasis::steps ? "steps" : "seconds";
  j["instances"] = report.instances;
  j["skipped"] = nlohmann::json::array();
  for (const auto& [name, why] : report.skipped) j["skipped"].push_back({{"path", name}, {"error", why}});
  j["rows"] = nlohmann::json::array();
  for (const RunRow& r : report.rows) {
    j["rows"].push_back({{"path", r.instance},
                         {"config", r.config},
                         {"cost", r.cost ? nlohmann::json(*r.cost) : nlohmann::json(nullptr)},
                         {"feasible", r.feasible},
                         {"t_first_feasible", optional_json(r.time_first_feasible(report.time_basis))},
                         {"t_best", optional_json(r.time_best(report.time_basis))},
                         {"steps", r.steps},
                         {"seed", r.seed}});
  }
  j["summary"] = nlohmann::json::array();
  for (const ConfigSummary& s : report.summary) {
    j["summary"].push_back({{"config", s.config},
                            {"wins", s.wins},
                            {"mean_time", optional_json(s.mean_time)},
                            {"mean_mse", s.mean_mse},
                            {"feasible", s.feasible}});
  }
  out << j.dump(2) << '\n';
}

std::map<std::string, Weight> read_best_known(std::istream& in) {
  std::map<std::string, Weight> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream s(line);
    std::string name;
    if (!(s >> name) || name[0] == '#' || name == "c") continue;
    Weight cost = 0;
    if (!(s >> cost)) throw std::runtime_error("best-known file line " + std::to_string(line_no) + ": missing cost");
    out[name] = cost;
  }
  return out;
}

}  // namespace bandhs
