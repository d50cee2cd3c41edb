#ifndef GAUGEQED_RUN_HPP
#define GAUGEQED_RUN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gaugeqed/fixtures.hpp"
#include "gaugeqed/model.hpp"
#include "gaugeqed/transit.hpp"

// Run configurations, presets, and the deterministic CSV/report emitters
// behind the command-line front end. Output bytes depend only on the config
// and the build: no clocks, no randomness.

namespace gaugeqed {

inline constexpr const char* kVersion = "0.1.0";
// Version of the oracle reference fixture format this build reads and writes.
inline constexpr int kFixtureVersion = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { generic_envelope, transit, ground_state, oracle_compare };

struct ModelPoint {
  double delta = 1.0;
  double eta_max = 0.0;
};

struct VacuumInitSpec {};
struct ThermalInitSpec {
  double beta_omega_c = 1.0;
  double beta_omega_m = 1.0;
};
// Ground state of H(0) at the envelope's initial coupling level.
struct InteractingGroundInitSpec {};
using InitialStateSpec = std::variant<VacuumInitSpec, ThermalInitSpec, InteractingGroundInitSpec>;

struct GridSpec {
  double t_end = 20.0;
  int samples = 201;
};

struct OracleSpec {
  int dim_a = 30;
  int dim_b = 30;
  int steps_per_cycle = 200;
  int dim_doublings = 1;
  int max_step_doublings = 5;
};

struct RunConfig {
  ScenarioKind scenario = ScenarioKind::generic_envelope;
  std::vector<ModelPoint> models{{1.0, 0.0}};
  CouplingEnvelope envelope = ConstantEnvelope{0.0};
  TransitScenario transit;
  std::vector<double> alphas{0.0};
  std::vector<double> etas;  // ground-state scenario curves; empty = models[0].eta_max
  InitialStateSpec initial_state = VacuumInitSpec{};
  HamiltonianVariant variant = StandardVariant{};
  GridSpec grid;
  double tol = 1e-9;
  OracleSpec oracle;
  std::string out_path;
  std::string preset_name;  // provenance echo; empty for file-based configs

  // Envelope actually used by a run (builds the transit envelope on demand).
  CouplingEnvelope effective_envelope() const;
  void validate() const;  // throws ConfigError
};

// Strict JSON parsing: unknown keys are rejected at every nesting level.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Resolved one-line JSON echo with sorted keys, for provenance headers.
std::string canonical_config_json(const RunConfig& cfg);

std::vector<std::string> preset_names();
RunConfig preset(const std::string& name);  // throws ConfigError on unknown name

// CSV emitters. Columns:
//   simulate:    t, alpha, mu, n_a, n_b, I, E_c, E_m, work
//   sweep:       delta, eta, alpha, n_a_final, I_final, dE_c, dE_m, work, bound_residual
//   groundstate: eta, alpha, I_G, n_a, n_c, omega_alpha
std::string run_simulate(const RunConfig& cfg);
std::string run_sweep(const RunConfig& cfg, int parallelism = 1);
std::string run_groundstate(const RunConfig& cfg);

struct OracleCompareResult {
  std::string text_report;
  std::string json_report;
  bool pass = false;
  bool converged = false;
  double max_deviation = 0.0;
  double dim_drift = 0.0;
  double step_drift = 0.0;
};

// Gaussian moments against the convergence-gated Fock oracle on the same
// grid; passes when every observable deviation is below
// max(1e-6, reported truncation drift).
OracleCompareResult run_oracle_compare(const RunConfig& cfg);

// Converged oracle reference values for the smoothed-box preset (and,
// optionally, the transit preset), as consumed by the acceptance suite
// (fixture keys "<preset>.<alpha label>.n_a_final" etc.).
FixtureSet compute_reference_fixtures(bool include_transit = true);

}  // namespace gaugeqed

#endif
