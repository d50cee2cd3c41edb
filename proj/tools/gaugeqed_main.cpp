// Command-line front end: simulate | sweep | groundstate | oracle-compare.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gaugeqed/run.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string config_path;
  std::string preset_name;
  std::string out_path;
  double tol = -1.0;  // < 0: keep the config value
  int parallel = 1;
};

void add_common_options(CLI::App* cmd, CommonOptions* opts, bool with_parallel) {
  cmd->add_option("--config", opts->config_path, "Path to a JSON run configuration");
  cmd->add_option("--preset", opts->preset_name,
                  "Named preset (fig2, fig3, fig4, fig5, fig6, supp-fig7, supp-fig8)");
  cmd->add_option("--out", opts->out_path, "Output path (default: stdout)");
  cmd->add_option("--tol", opts->tol, "Override the integrator tolerance");
  if (with_parallel)
    cmd->add_option("--parallel", opts->parallel, "Worker threads for sweep points")
        ->check(CLI::PositiveNumber);
}

gaugeqed::RunConfig resolve_config(const CommonOptions& opts) {
  if (opts.config_path.empty() == opts.preset_name.empty())
    throw gaugeqed::ConfigError("give exactly one of --config or --preset");
  gaugeqed::RunConfig cfg = opts.config_path.empty()
                                ? gaugeqed::preset(opts.preset_name)
                                : gaugeqed::load_config_file(opts.config_path);
  if (opts.tol > 0.0) cfg.tol = opts.tol;
  if (!opts.out_path.empty()) cfg.out_path = opts.out_path;
  cfg.validate();
  return cfg;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << payload;
  if (!out) throw std::runtime_error("write failed: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge-parameterized two-mode cavity QED simulator"};
  app.require_subcommand(1);

  CommonOptions simulate_opts, sweep_opts, ground_opts, oracle_opts;
  CLI::App* simulate = app.add_subcommand("simulate", "Time series for each alpha");
  add_common_options(simulate, &simulate_opts, false);
  CLI::App* sweep = app.add_subcommand("sweep", "Final observables over an alpha grid");
  add_common_options(sweep, &sweep_opts, true);
  CLI::App* ground = app.add_subcommand("groundstate", "Closed-form ground-state curves");
  add_common_options(ground, &ground_opts, false);
  CLI::App* oracle =
      app.add_subcommand("oracle-compare", "Gaussian moments vs the truncated-Fock oracle");
  add_common_options(oracle, &oracle_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      const auto cfg = resolve_config(simulate_opts);
      emit(gaugeqed::run_simulate(cfg), cfg.out_path);
    } else if (sweep->parsed()) {
      const auto cfg = resolve_config(sweep_opts);
      emit(gaugeqed::run_sweep(cfg, sweep_opts.parallel), cfg.out_path);
    } else if (ground->parsed()) {
      const auto cfg = resolve_config(ground_opts);
      emit(gaugeqed::run_groundstate(cfg), cfg.out_path);
    } else if (oracle->parsed()) {
      const auto cfg = resolve_config(oracle_opts);
      const auto result = gaugeqed::run_oracle_compare(cfg);
      std::cout << result.text_report;
      if (!cfg.out_path.empty()) emit(result.json_report + "\n", cfg.out_path);
      if (!result.pass) return kExitNumerical;
    }
  } catch (const gaugeqed::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
