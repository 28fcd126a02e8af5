// bandhs: command-line front end.
//
//   bandhs [options] [file.wcnf]      solve (stdin when no file or "-")
//   bandhs oracle <file.wcnf>         exhaustive optimum for small instances
//   bandhs bench <dir> [options]      run variants over a directory of instances
//   bandhs gen [options]              write a random instance

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bandhs/bandhs.hpp"

namespace {

using namespace bandhs;

constexpr int kExitFeasible = 0;
constexpr int kExitError = 1;
constexpr int kExitNoFeasible = 20;

std::string normalize_name(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

void apply_ablation(Params& p, const std::string& raw) {
  const std::string name = normalize_name(raw);
  if (name == "default" || name.empty()) return;
  if (name == "no-delay") {
    p.no_delay = true;
  } else if (name == "mixed" || name == "mixed-training") {
    p.mixed_training = true;
  } else if (name == "no-binary") {
    p.no_binary = true;
  } else if (name == "no-sample") {
    p.no_sample = true;
  } else if (name == "sample-one" || name == "no-soft") {
    p.arm_num = 1;
  } else if (name == "fast" || name == "first-feasible") {
    p.first_feasible = true;
  } else {
    throw std::invalid_argument("unknown ablation '" + raw +
                                "' (expected no-delay, mixed, no-binary, no-sample, sample-one, fast)");
  }
}

std::string describe(const Params& p) {
  std::ostringstream s;
  s << "k=" << p.k << " d=" << p.history_length() << " gamma=" << p.gamma << " arm_num=" << p.arm_num
    << " lambda=" << p.lambda << " seed=" << p.seed;
  if (p.max_steps) s << " max_steps=" << *p.max_steps;
  s << " hard_reward=" << (p.hard_reward == HardReward::relative ? "eq3" : "eq3p1");
  std::vector<std::string> flags;
  if (p.no_delay) flags.emplace_back("no-delay");
  if (p.mixed_training) flags.emplace_back("mixed");
  if (p.no_binary) flags.emplace_back("no-binary");
  if (p.no_sample) flags.emplace_back("no-sample");
  if (p.first_feasible) flags.emplace_back("fast");
  if (!flags.empty()) {
    s << " ablations=";
    for (std::size_t i = 0; i < flags.size(); ++i) s << (i ? "," : "") << flags[i];
  }
  return s.str();
}

std::string format_model(const Assignment& a, bool lits) {
  std::string out;
  if (!lits) {
    out.reserve(a.size());
    for (Var v = 1; v <= a.size(); ++v) out.push_back(a[v] ? '1' : '0');
    return out;
  }
  std::ostringstream s;
  for (Var v = 1; v <= a.size(); ++v) s << (v > 1 ? " " : "") << (a[v] ? "" : "-") << v;
  return s.str();
}

Instance load(const std::string& path) {
  if (path.empty() || path == "-") return parse_wcnf(std::cin);
  return read_wcnf_file(path);
}

class CostPrinter : public SearchObserver {
 public:
  explicit CostPrinter(bool quiet) : quiet_(quiet) {}
  void on_improvement(const TracePoint& p) override {
    if (quiet_) return;
    std::cout << "o " << p.cost << '\n' << std::flush;
  }

 private:
  bool quiet_;
};

nlohmann::json bandit_json(const Bandit& b) {
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json pulls = nlohmann::json::array();
  for (ArmId a = 0; a < b.num_arms(); ++a) {
    values.push_back(b.value(a));
    pulls.push_back(b.pulls(a));
  }
  return {{"local_optima", b.local_optima()}, {"values", values}, {"pulls", pulls}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct SolveOptions {
  std::string input;
  Params params;
  std::string ablations;
  std::string hard_reward = "eq3";
  std::string model_format = "bits";
  std::string trace_path;
  std::string bandit_dump;
  bool quiet = false;
  bool verify_optimum = false;
};

int run_solve(SolveOptions& opt) {
  for (const auto& a : split(opt.ablations, ',')) apply_ablation(opt.params, a);
  if (opt.hard_reward == "eq3p1") opt.params.hard_reward = HardReward::relative_plus_one;
  opt.params.validate();

  const Instance inst = load(opt.input);
  if (!opt.quiet) {
    std::cout << "c bandhs " << "local search for (weighted) partial MaxSAT\n";
    std::cout << "c instance " << (opt.input.empty() ? "-" : opt.input) << " vars=" << inst.num_vars()
              << " hard=" << inst.num_hard() << " soft=" << inst.num_soft()
              << " soft_weight=" << inst.total_soft_weight() << '\n';
    const auto& norm = inst.normalization();
    if (norm.tautologies_dropped || norm.duplicate_literals_removed) {
      std::cout << "c normalized tautologies_dropped=" << norm.tautologies_dropped
                << " duplicate_literals_removed=" << norm.duplicate_literals_removed << '\n';
    }
    std::cout << "c params " << describe(opt.params) << '\n' << std::flush;
  }

  CostPrinter printer(opt.quiet);
  const RunResult res = solve(inst, opt.params, &printer);

  bool optimal = res.proven_optimal;
  if (res.feasible() && !optimal && opt.verify_optimum && inst.num_vars() <= kDefaultOracleVarLimit) {
    const ExactResult exact = exact_solve(inst);
    optimal = exact.status == ExactStatus::optimal && exact.opt_cost == res.best_cost;
  }
  if (!opt.quiet) {
    std::cout << "c steps=" << res.steps << " hard_optima=" << res.hard_local_optima()
              << " soft_optima=" << res.soft_local_optima() << '\n';
  }
  if (!res.feasible()) {
    std::cout << "s UNKNOWN\n";
  } else {
    std::cout << (optimal ? "s OPTIMUM FOUND\n" : "s SATISFIABLE\n");
    std::cout << "v " << format_model(*res.best_assignment, opt.model_format == "lits") << '\n';
  }
  std::cout << std::flush;

  if (!opt.trace_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : res.trace) j.push_back({{"t_seconds", p.seconds}, {"step", p.step}, {"cost", p.cost}});
    write_file(opt.trace_path, j.dump(2) + "\n");
  }
  if (!opt.bandit_dump.empty()) {
    const nlohmann::json j = {{"hard", bandit_json(res.hard_bandit)}, {"soft", bandit_json(res.soft_bandit)}};
    write_file(opt.bandit_dump, j.dump(2) + "\n");
  }
  return res.feasible() ? kExitFeasible : kExitNoFeasible;
}

int run_oracle(const std::string& path, Var var_limit, const std::string& model_format) {
  const Instance inst = load(path);
  const ExactResult r = exact_solve(inst, var_limit);
  if (r.status == ExactStatus::hard_unsat) {
    std::cout << "s UNSATISFIABLE\n";
    return kExitNoFeasible;
  }
  std::cout << "o " << r.opt_cost << "\ns OPTIMUM FOUND\nv " << format_model(r.assignment, model_format == "lits")
            << '\n';
  return kExitFeasible;
}

struct BenchOptions {
  std::string dir;
  std::string variants = "default";
  Params base;
  unsigned jobs = 1;
  std::string time_basis = "seconds";
  std::string bks_path;
  std::string csv_path;
  std::string json_path;
};

int run_bench(BenchOptions& opt) {
  std::vector<NamedConfig> configs;
  for (const auto& v : split(opt.variants, ',')) {
    NamedConfig c{v, opt.base};
    for (const auto& part : split(v, '+')) apply_ablation(c.params, part);
    c.params.validate();
    configs.push_back(std::move(c));
  }
  SuiteOptions so;
  so.parallelism = opt.jobs;
  so.seed = opt.base.seed;
  so.time_basis = opt.time_basis == "steps" ? TimeBasis::steps : TimeBasis::seconds;
  if (!opt.bks_path.empty()) {
    std::ifstream in(opt.bks_path);
    if (!in) throw std::runtime_error("cannot open '" + opt.bks_path + "'");
    so.best_known = read_best_known(in);
  }
  const BenchReport report = run_suite(std::filesystem::path(opt.dir), configs, so);

  for (const auto& [name, why] : report.skipped) std::cerr << "skipped " << name << ": " << why << '\n';
  std::cout << "c instances=" << report.instances.size() << " skipped=" << report.skipped.size() << '\n';
  for (const auto& s : report.summary) {
    std::cout << s.config << " wins=" << s.wins << " time=";
    if (s.mean_time) {
      std::cout << *s.mean_time;
    } else {
      std::cout << '-';
    }
    std::cout << " mse=" << s.mean_mse << " feasible=" << s.feasible << '\n';
  }
  if (!opt.csv_path.empty()) {
    std::ostringstream s;
    write_csv(s, report);
    write_file(opt.csv_path, s.str());
  }
  if (!opt.json_path.empty()) {
    std::ostringstream s;
    write_json(s, report);
    write_file(opt.json_path, s.str());
  }
  return 0;
}

struct GenOptions {
  GeneratorSpec spec;
  bool unsat_hard = false;
  std::uint64_t seed = 1;
  std::string format = "modern";
  std::string output;
};

int run_gen(GenOptions& opt) {
  Rng rng(opt.seed);
  opt.spec.force_hard_sat = !opt.unsat_hard;
  const GeneratedInstance g = generate_instance(opt.spec, rng);
  const std::string text = serialize_wcnf(g.instance, opt.format == "legacy" ? WcnfFormat::legacy : WcnfFormat::modern);
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
  } else {
    write_file(opt.output, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bandit-guided local search for (weighted) partial MaxSAT"};
  app.require_subcommand(0, 1);

  SolveOptions solve_opt;
  Params& p = solve_opt.params;
  std::uint64_t max_steps = 0;
  app.add_option("input", solve_opt.input, "WCNF file (stdin when omitted or '-')");
  app.add_option("--cutoff", p.cutoff_seconds, "Wall-clock limit in seconds")->capture_default_str();
  auto* max_steps_opt = app.add_option("--max-steps", max_steps, "Step limit");
  app.add_option("--seed", p.seed, "Random seed")->capture_default_str();
  app.add_option("-k", p.k, "BMS sample count")->capture_default_str();
  app.add_option("-d", p.d, "Delayed-reward history length")->capture_default_str();
  app.add_option("--gamma", p.gamma, "Reward discount factor")->capture_default_str();
  app.add_option("--arm-num", p.arm_num, "Soft arms sampled per pick")->capture_default_str();
  app.add_option("--lambda", p.lambda, "Exploration bias")->capture_default_str();
  app.add_option("--ablation", solve_opt.ablations, "Comma list of no-delay,mixed,no-binary,no-sample,sample-one,fast");
  app.add_flag("--first-feasible", p.first_feasible, "Stop at the first feasible solution");
  app.add_option("--hard-reward", solve_opt.hard_reward, "Hard reward variant")
      ->check(CLI::IsMember({"eq3", "eq3p1"}))
      ->capture_default_str();
  app.add_option("--model-format", solve_opt.model_format, "Model line format")
      ->check(CLI::IsMember({"bits", "lits"}))
      ->capture_default_str();
  app.add_option("--trace", solve_opt.trace_path, "Write improvements as JSON");
  app.add_option("--bandit-dump", solve_opt.bandit_dump, "Write final bandit state as JSON");
  app.add_flag("--quiet", solve_opt.quiet, "Only print the s and v lines");
  app.add_flag("--verify-optimum", solve_opt.verify_optimum,
               "Check the final cost with the exhaustive solver (up to 25 variables)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  std::string oracle_input;
  Var var_limit = kDefaultOracleVarLimit;
  std::string oracle_format = "bits";
  oracle->add_option("input", oracle_input, "WCNF file")->required();
  oracle->add_option("--var-limit", var_limit, "Refuse larger instances")->capture_default_str();
  oracle->add_option("--model-format", oracle_format)->check(CLI::IsMember({"bits", "lits"}));

  auto* bench = app.add_subcommand("bench", "Run variants over a directory of .wcnf files");
  BenchOptions bench_opt;
  std::uint64_t bench_steps = 0;
  bench->add_option("dir", bench_opt.dir, "Instance directory")->required();
  bench->add_option("--variants", bench_opt.variants, "Variants, e.g. default,sample-one,no-delay+no-binary")
      ->capture_default_str();
  bench->add_option("--cutoff", bench_opt.base.cutoff_seconds)->capture_default_str();
  auto* bench_steps_opt = bench->add_option("--max-steps", bench_steps);
  bench->add_option("--seed", bench_opt.base.seed)->capture_default_str();
  bench->add_option("-j,--jobs", bench_opt.jobs)->capture_default_str();
  bench->add_option("--time-basis", bench_opt.time_basis)->check(CLI::IsMember({"seconds", "steps"}));
  bench->add_option("--bks", bench_opt.bks_path, "Best-known costs: lines '<name> <cost>'");
  bench->add_option("--csv", bench_opt.csv_path);
  bench->add_option("--json", bench_opt.json_path);

  auto* gen = app.add_subcommand("gen", "Write a random instance");
  GenOptions gen_opt;
  gen->add_option("--vars", gen_opt.spec.num_vars)->capture_default_str();
  gen->add_option("--hard", gen_opt.spec.num_hard)->capture_default_str();
  gen->add_option("--soft", gen_opt.spec.num_soft)->capture_default_str();
  gen->add_option("--min-len", gen_opt.spec.min_len)->capture_default_str();
  gen->add_option("--max-len", gen_opt.spec.max_len)->capture_default_str();
  gen->add_option("--min-weight", gen_opt.spec.min_weight)->capture_default_str();
  gen->add_option("--max-weight", gen_opt.spec.max_weight)->capture_default_str();
  gen->add_flag("--unforced", gen_opt.unsat_hard, "Do not plant a hard-feasible assignment");
  gen->add_option("--seed", gen_opt.seed)->capture_default_str();
  gen->add_option("--format", gen_opt.format)->check(CLI::IsMember({"legacy", "modern"}));
  gen->add_option("-o,--output", gen_opt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*oracle) return run_oracle(oracle_input, var_limit, oracle_format);
    if (*bench) {
      if (*bench_steps_opt) bench_opt.base.max_steps = bench_steps;
      return run_bench(bench_opt);
    }
    if (*gen) return run_gen(gen_opt);
    if (*max_steps_opt) p.max_steps = max_steps;
    return run_solve(solve_opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
