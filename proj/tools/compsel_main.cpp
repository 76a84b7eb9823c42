// SPDX-License-Identifier: Apache-2.0
// compsel: CoMP / Non-CoMP mode-selection experiments.
#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "compsel/config.hpp"
#include "compsel/experiments.hpp"
#include "compsel/report.hpp"
#include "compsel/validation.hpp"

namespace fs = std::filesystem;
using namespace compsel;

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<int> threads;
  std::string out_dir = "out";
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

void emit(const Options& opt, const std::vector<const Report*>& reports) {
  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  for (const Report* r : reports) {
    write_file(dir / (r->id + ".csv"), to_csv(*r));
    std::cout << (dir / (r->id + ".csv")).string() << '\n';
  }
  write_file(dir / "columns.txt", columns_doc(report_catalog()));
}

int run(const std::string& cmd, const Options& opt) {
  ExperimentConfig cfg;
  if (!opt.config_path.empty()) cfg = load_config(opt.config_path);
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.threads) cfg.threads = *opt.threads;
  if (opt.trials) {
    if (cmd == "fig1")
      cfg.orthogonality_trials = *opt.trials;
    else
      cfg.drops = *opt.trials;
  }
  validate(cfg);
  const ExecPolicy policy = policy_for(cfg);

  if (cmd == "fig1") {
    const auto r = run_fig1(cfg, policy);
    emit(opt, {&r.report});
  } else if (cmd == "fig2") {
    const auto r = run_fig2(cfg);
    emit(opt, {&r.report});
  } else if (cmd == "fig3") {
    const auto r = run_fig3(cfg, policy);
    emit(opt, {&r.report});
  } else if (cmd == "fig4") {
    const auto r = run_fig4(cfg, policy);
    emit(opt, {&r.report});
  } else if (cmd == "fig5") {
    const auto r = run_fig5(cfg, policy);
    emit(opt, {&r.binned, &r.users});
  } else if (cmd == "table1") {
    const auto r = run_table1(cfg, policy);
    emit(opt, {&r.report});
  } else if (cmd == "validate") {
    const auto checks = run_property_checks(cfg, opt.trials.value_or(100000), policy);
    bool ok = true;
    for (const auto& c : checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
      ok = ok && c.passed;
    }
    if (!ok) {
      std::cerr << "compsel: validation failed\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CoMP / Non-CoMP transmission mode selection experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int threads = 0;
  app.add_option("--config", opt.config_path, "key = value file; keys are ExperimentConfig fields")
      ->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "master seed");
  app.add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  auto* trials_opt = app.add_option(
      "--trials", trials,
      "drops (fig3/4/5, table1), orthogonality trials (fig1) or Monte Carlo trials (validate)");
  auto* threads_opt = app.add_option("--threads", threads, "OpenMP threads; 0 = default");

  const std::pair<const char*, const char*> commands[] = {
      {"fig1", "decision variable and thresholds along the ray to the cluster center"},
      {"fig2", "switching-distance error with an estimated co-scheduled user count"},
      {"fig3", "percentage of CoMP users versus coherence block size"},
      {"fig4", "backhaul load per BS"},
      {"fig5", "average user throughput versus distance"},
      {"table1", "switching distance and dominating decision-variable terms"},
      {"validate", "run the property checks"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "compsel: " << e.what() << '\n';
    return 2;
  }
  if (*seed_opt) opt.seed = seed;
  if (*trials_opt) opt.trials = trials;
  if (*threads_opt) opt.threads = threads;

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const std::exception& e) {
    std::cerr << "compsel: " << e.what() << '\n';
    return 1;
  }
}
