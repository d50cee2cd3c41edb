#include "gaugeqed/run.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "gaugeqed/dynamics.hpp"
#include "gaugeqed/fock.hpp"
#include "gaugeqed/ground_state.hpp"
#include "gaugeqed/observables.hpp"

namespace gaugeqed {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Object wrapper that rejects unknown keys once finish() runs.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string context) : j_(j), context_(std::move(context)) {
    if (!j.is_object()) fail(context_ + ": expected a JSON object");
  }

  const json* optional(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) {
    const json* p = optional(key);
    if (p == nullptr) fail(context_ + ": missing required key '" + key + "'");
    return *p;
  }

  void finish() const {
    for (const auto& item : j_.items())
      if (!seen_.contains(item.key()))
        fail(context_ + ": unknown key '" + item.key() + "'");
  }

  const std::string& context() const { return context_; }

 private:
  const json& j_;
  std::string context_;
  std::set<std::string> seen_;
};

double as_number(const json& j, const std::string& context) {
  if (!j.is_number()) fail(context + ": expected a number");
  return j.get<double>();
}

int as_integer(const json& j, const std::string& context) {
  if (!j.is_number_integer()) fail(context + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& context) {
  if (!j.is_string()) fail(context + ": expected a string");
  return j.get<std::string>();
}

std::vector<double> parse_value_list(const json& j, const std::string& context) {
  std::vector<double> values;
  if (j.is_array()) {
    if (j.empty()) fail(context + ": list must not be empty");
    for (const auto& item : j) values.push_back(as_number(item, context));
    return values;
  }
  if (j.is_object()) {
    ObjectReader grid(j, context);
    const double lo = as_number(grid.require("min"), context + ".min");
    const double hi = as_number(grid.require("max"), context + ".max");
    const int count = as_integer(grid.require("count"), context + ".count");
    grid.finish();
    if (count < 1) fail(context + ".count: must be >= 1");
    if (count == 1) return {lo};
    for (int i = 0; i < count; ++i)
      values.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    return values;
  }
  fail(context + ": expected an array or a {min, max, count} object");
}

ModelPoint parse_model(const json& j, const std::string& context) {
  ObjectReader r(j, context);
  ModelPoint m;
  m.delta = as_number(r.require("delta"), context + ".delta");
  m.eta_max = as_number(r.require("eta_max"), context + ".eta_max");
  r.finish();
  return m;
}

CouplingEnvelope parse_envelope(const json& j, const std::string& context) {
  ObjectReader r(j, context);
  const std::string kind = as_string(r.require("kind"), context + ".kind");
  CouplingEnvelope env;
  if (kind == "constant") {
    ConstantEnvelope e;
    e.level = as_number(r.require("level"), context + ".level");
    env = e;
  } else if (kind == "smoothed-box") {
    SmoothedBoxEnvelope e;
    e.t0 = as_number(r.require("t0"), context + ".t0");
    e.tau = as_number(r.require("tau"), context + ".tau");
    e.s = as_number(r.require("s"), context + ".s");
    env = e;
  } else if (kind == "gaussian-transit") {
    GaussianTransitEnvelope e;
    e.h = as_number(r.require("h"), context + ".h");
    e.nu = as_number(r.require("nu"), context + ".nu");
    e.w_c = as_number(r.require("w_c"), context + ".w_c");
    env = e;
  } else {
    fail(context + ".kind: unknown envelope kind '" + kind + "'");
  }
  r.finish();
  return env;
}

InitialStateSpec parse_initial_state(const json& j, const std::string& context) {
  ObjectReader r(j, context);
  const std::string kind = as_string(r.require("kind"), context + ".kind");
  InitialStateSpec spec;
  if (kind == "vacuum") {
    spec = VacuumInitSpec{};
  } else if (kind == "thermal") {
    ThermalInitSpec t;
    t.beta_omega_c = as_number(r.require("beta_omega_c"), context + ".beta_omega_c");
    t.beta_omega_m = as_number(r.require("beta_omega_m"), context + ".beta_omega_m");
    spec = t;
  } else if (kind == "interacting-ground") {
    spec = InteractingGroundInitSpec{};
  } else {
    fail(context + ".kind: unknown initial state '" + kind + "'");
  }
  r.finish();
  return spec;
}

HamiltonianVariant parse_variant(const json& j, const std::string& context) {
  ObjectReader r(j, context);
  const std::string kind = as_string(r.require("kind"), context + ".kind");
  HamiltonianVariant variant;
  if (kind == "standard") {
    variant = StandardVariant{};
  } else if (kind == "tilde") {
    TildeVariant t;
    t.theta = as_number(r.require("theta"), context + ".theta");
    variant = t;
  } else if (kind == "tilde-averaged") {
    variant = TildeAveragedVariant{};
  } else {
    fail(context + ".kind: unknown variant '" + kind + "'");
  }
  r.finish();
  return variant;
}

ScenarioKind parse_scenario(const std::string& name) {
  if (name == "generic-envelope") return ScenarioKind::generic_envelope;
  if (name == "transit") return ScenarioKind::transit;
  if (name == "ground-state") return ScenarioKind::ground_state;
  if (name == "oracle-compare") return ScenarioKind::oracle_compare;
  fail("scenario: unknown kind '" + name + "'");
}

std::string scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::generic_envelope: return "generic-envelope";
    case ScenarioKind::transit: return "transit";
    case ScenarioKind::ground_state: return "ground-state";
    case ScenarioKind::oracle_compare: return "oracle-compare";
  }
  return "?";
}

}  // namespace

CouplingEnvelope RunConfig::effective_envelope() const {
  if (scenario == ScenarioKind::transit) return transit_envelope(transit);
  return envelope;
}

void RunConfig::validate() const {
  if (models.empty()) fail("config: at least one model point is required");
  for (const auto& m : models) {
    ModelParams p{m.delta, m.eta_max, 0.0};
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      fail(std::string("config.model: ") + e.what());
    }
  }
  if (alphas.empty()) fail("config.alphas: must not be empty");
  for (double a : alphas)
    if (!std::isfinite(a)) fail("config.alphas: entries must be finite");
  if (!etas.empty() && scenario != ScenarioKind::ground_state)
    fail("config.etas: only the ground-state scenario takes an eta list");
  for (double e : etas)
    if (!(e >= 0.0) || !std::isfinite(e)) fail("config.etas: entries must be finite and >= 0");
  if (!(grid.t_end > 0.0)) fail("config.grid.t_end: must be > 0");
  if (grid.samples < 2) fail("config.grid.samples: must be >= 2");
  if (!(tol > 1e-14 && tol < 1e-3)) fail("config.tol: must lie in (1e-14, 1e-3)");
  if (oracle.dim_a < 2 || oracle.dim_b < 2) fail("config.oracle: dims must be >= 2");
  if (oracle.steps_per_cycle < 2) fail("config.oracle.steps_per_cycle: must be >= 2");
  if (oracle.dim_doublings < 0 || oracle.max_step_doublings < 0)
    fail("config.oracle: doubling counts must be >= 0");

  if (scenario == ScenarioKind::transit) {
    try {
      (void)transit_envelope(transit);
    } catch (const std::invalid_argument& e) {
      fail(std::string("config.transit: ") + e.what());
    }
  } else {
    try {
      gaugeqed::validate(envelope);
    } catch (const std::invalid_argument& e) {
      fail(std::string("config.envelope: ") + e.what());
    }
  }
  if (const auto* thermal = std::get_if<ThermalInitSpec>(&initial_state)) {
    if (!(thermal->beta_omega_c > 0.0) || !(thermal->beta_omega_m > 0.0))
      fail("config.initial_state: thermal beta*omega products must be > 0");
  }
  if (const auto* tilde = std::get_if<TildeVariant>(&variant)) {
    if (!(tilde->theta >= 0.0 && tilde->theta <= std::numbers::pi))
      fail("config.variant.theta: must lie in [0, pi]");
  }
}

RunConfig parse_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config: invalid JSON: ") + e.what());
  }

  ObjectReader r(j, "config");
  RunConfig cfg;
  cfg.scenario = parse_scenario(as_string(r.require("scenario"), "config.scenario"));

  const json* model = r.optional("model");
  const json* models = r.optional("models");
  if (model && models) fail("config: give either 'model' or 'models', not both");
  if (models) {
    if (!models->is_array() || models->empty())
      fail("config.models: expected a non-empty array");
    cfg.models.clear();
    for (std::size_t i = 0; i < models->size(); ++i)
      cfg.models.push_back(
          parse_model((*models)[i], "config.models[" + std::to_string(i) + "]"));
  } else if (model) {
    cfg.models = {parse_model(*model, "config.model")};
  } else {
    fail("config: missing 'model' (or 'models')");
  }

  if (const json* envelope = r.optional("envelope"))
    cfg.envelope = parse_envelope(*envelope, "config.envelope");
  const json* transit = r.optional("transit");
  if (transit) {
    ObjectReader t(*transit, "config.transit");
    cfg.transit.ratio_wc = as_number(t.require("ratio_wc"), "config.transit.ratio_wc");
    if (const json* offset = t.optional("offset_h"))
      cfg.transit.offset_h = as_number(*offset, "config.transit.offset_h");
    t.finish();
  }
  if (cfg.scenario == ScenarioKind::transit) {
    if (!transit) fail("config: the transit scenario needs a 'transit' block");
    if (r.optional("envelope"))
      fail("config: the transit scenario derives its envelope; drop the 'envelope' block");
  }

  if (const json* alphas = r.optional("alphas"))
    cfg.alphas = parse_value_list(*alphas, "config.alphas");
  if (const json* etas = r.optional("etas"))
    cfg.etas = parse_value_list(*etas, "config.etas");
  if (const json* initial = r.optional("initial_state"))
    cfg.initial_state = parse_initial_state(*initial, "config.initial_state");
  if (const json* variant = r.optional("variant"))
    cfg.variant = parse_variant(*variant, "config.variant");
  if (const json* grid = r.optional("grid")) {
    ObjectReader g(*grid, "config.grid");
    cfg.grid.t_end = as_number(g.require("t_end"), "config.grid.t_end");
    cfg.grid.samples = as_integer(g.require("samples"), "config.grid.samples");
    g.finish();
  }
  if (const json* tol = r.optional("tol")) cfg.tol = as_number(*tol, "config.tol");
  if (const json* oracle = r.optional("oracle")) {
    ObjectReader o(*oracle, "config.oracle");
    if (const json* v = o.optional("dim_a")) cfg.oracle.dim_a = as_integer(*v, "config.oracle.dim_a");
    if (const json* v = o.optional("dim_b")) cfg.oracle.dim_b = as_integer(*v, "config.oracle.dim_b");
    if (const json* v = o.optional("steps_per_cycle"))
      cfg.oracle.steps_per_cycle = as_integer(*v, "config.oracle.steps_per_cycle");
    if (const json* v = o.optional("dim_doublings"))
      cfg.oracle.dim_doublings = as_integer(*v, "config.oracle.dim_doublings");
    if (const json* v = o.optional("max_step_doublings"))
      cfg.oracle.max_step_doublings = as_integer(*v, "config.oracle.max_step_doublings");
    o.finish();
  }
  if (const json* out = r.optional("out")) cfg.out_path = as_string(*out, "config.out");
  r.finish();

  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("config: cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::string canonical_config_json(const RunConfig& cfg) {
  json j;
  j["scenario"] = scenario_name(cfg.scenario);
  json models = json::array();
  for (const auto& m : cfg.models)
    models.push_back(json{{"delta", m.delta}, {"eta_max", m.eta_max}});
  j["models"] = models;
  if (cfg.scenario == ScenarioKind::transit) {
    j["transit"] = {{"ratio_wc", cfg.transit.ratio_wc}, {"offset_h", cfg.transit.offset_h}};
  } else {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, ConstantEnvelope>)
            j["envelope"] = {{"kind", "constant"}, {"level", e.level}};
          else if constexpr (std::is_same_v<T, SmoothedBoxEnvelope>)
            j["envelope"] = {{"kind", "smoothed-box"}, {"t0", e.t0}, {"tau", e.tau}, {"s", e.s}};
          else
            j["envelope"] = {
                {"kind", "gaussian-transit"}, {"h", e.h}, {"nu", e.nu}, {"w_c", e.w_c}};
        },
        cfg.envelope);
  }
  j["alphas"] = cfg.alphas;
  if (cfg.scenario == ScenarioKind::ground_state) j["etas"] = cfg.etas;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VacuumInitSpec>)
          j["initial_state"] = {{"kind", "vacuum"}};
        else if constexpr (std::is_same_v<T, ThermalInitSpec>)
          j["initial_state"] = {{"kind", "thermal"},
                                {"beta_omega_c", s.beta_omega_c},
                                {"beta_omega_m", s.beta_omega_m}};
        else
          j["initial_state"] = {{"kind", "interacting-ground"}};
      },
      cfg.initial_state);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, StandardVariant>)
          j["variant"] = {{"kind", "standard"}};
        else if constexpr (std::is_same_v<T, TildeVariant>)
          j["variant"] = {{"kind", "tilde"}, {"theta", v.theta}};
        else
          j["variant"] = {{"kind", "tilde-averaged"}};
      },
      cfg.variant);
  j["grid"] = {{"t_end", cfg.grid.t_end}, {"samples", cfg.grid.samples}};
  j["tol"] = cfg.tol;
  if (cfg.scenario == ScenarioKind::oracle_compare)
    j["oracle"] = {{"dim_a", cfg.oracle.dim_a},
                   {"dim_b", cfg.oracle.dim_b},
                   {"steps_per_cycle", cfg.oracle.steps_per_cycle},
                   {"dim_doublings", cfg.oracle.dim_doublings},
                   {"max_step_doublings", cfg.oracle.max_step_doublings}};
  if (!cfg.preset_name.empty()) j["preset"] = cfg.preset_name;
  return j.dump();
}

// --- presets ------------------------------------------------------------------

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v;
  v.reserve(count);
  for (int i = 0; i < count; ++i)
    v.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  return v;
}

SmoothedBoxEnvelope preset_box() {
  // Interaction window 10/omega_m starting near t0 = tau/2; the full
  // (1%-99%) switch-on takes about 9.2/s ~ 4/omega_m.
  return {5.0, 10.0, 2.3};
}

RunConfig preset_fig2() {
  RunConfig cfg;
  cfg.scenario = ScenarioKind::transit;
  cfg.models = {{0.5, 1.0}};
  cfg.transit = {1.0, 5.0};
  cfg.alphas = {0.0, jc_gauge(0.5), 1.0};
  cfg.grid = {12.0, 241};
  cfg.preset_name = "fig2";
  return cfg;
}

RunConfig preset_fig3() {
  RunConfig cfg = preset_fig2();
  cfg.variant = TildeVariant{std::numbers::pi / 2.0};
  cfg.preset_name = "fig3";
  return cfg;
}

RunConfig preset_fig4() {
  RunConfig cfg;
  cfg.scenario = ScenarioKind::generic_envelope;
  cfg.models = {{0.5, 1.0}};
  cfg.envelope = preset_box();
  cfg.alphas = {0.0, jc_gauge(0.5), 1.0};
  cfg.grid = {24.0, 241};
  cfg.preset_name = "fig4";
  return cfg;
}

RunConfig preset_fig5() {
  RunConfig cfg;
  cfg.scenario = ScenarioKind::generic_envelope;
  cfg.models = {{0.5, 1.0}, {0.5, 0.5}, {1.0, 1.0}, {2.0, 1.0}};
  cfg.envelope = preset_box();
  cfg.alphas = linspace(0.0, 1.0, 41);
  cfg.grid = {24.0, 241};
  cfg.preset_name = "fig5";
  return cfg;
}

RunConfig preset_fig6() {
  RunConfig cfg;
  cfg.scenario = ScenarioKind::generic_envelope;
  cfg.models = {{3.0, 1.0}};
  cfg.envelope = preset_box();
  cfg.alphas = linspace(0.0, 1.0, 41);
  // beta_m = 2 beta_c with beta_c = 0.5/omega_m, kept in the visible-thermal
  // regime; the captioned room-temperature values are numerically vacuum.
  cfg.initial_state = ThermalInitSpec{1.5, 1.0};
  cfg.grid = {24.0, 241};
  cfg.preset_name = "fig6";
  return cfg;
}

RunConfig preset_supp_fig(double delta, const char* name) {
  RunConfig cfg;
  cfg.scenario = ScenarioKind::ground_state;
  cfg.models = {{delta, 1.0}};
  cfg.etas = {0.1, 0.5, 1.0};
  cfg.alphas = linspace(0.0, 1.0, 101);
  cfg.preset_name = name;
  return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "supp-fig7", "supp-fig8"};
}

RunConfig preset(const std::string& name) {
  if (name == "fig2") return preset_fig2();
  if (name == "fig3") return preset_fig3();
  if (name == "fig4") return preset_fig4();
  if (name == "fig5") return preset_fig5();
  if (name == "fig6") return preset_fig6();
  if (name == "supp-fig7") return preset_supp_fig(0.5, "supp-fig7");
  if (name == "supp-fig8") return preset_supp_fig(2.0, "supp-fig8");
  fail("unknown preset '" + name + "'");
}

// --- runs ---------------------------------------------------------------------

namespace {

std::string provenance_header(const char* command, const RunConfig& cfg) {
  std::ostringstream out;
  out << "# gaugeqed " << kVersion << " " << command << "\n";
  out << "# units: omega_m = 1; times in 1/omega_m, energies in omega_m, entropies in nats\n";
  out << "# tol: " << fmt(cfg.tol) << "\n";
  out << "# fixture_version: " << kFixtureVersion << "\n";
  out << "# config: " << canonical_config_json(cfg) << "\n";
  return out.str();
}

std::vector<double> time_grid(const GridSpec& grid) {
  return linspace(0.0, grid.t_end, grid.samples);
}

GaussianState build_initial_state(const RunConfig& cfg, const ModelParams& params,
                                  const CouplingEnvelope& env) {
  return std::visit(
      [&](const auto& s) -> GaussianState {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VacuumInitSpec>)
          return vacuum_state();
        else if constexpr (std::is_same_v<T, ThermalInitSpec>)
          return thermal_product_state(s.beta_omega_c, s.beta_omega_m);
        else
          return interacting_ground_state(params, envelope_value(env, 0.0));
      },
      cfg.initial_state);
}

void require_dynamic_scenario(const RunConfig& cfg, const char* command) {
  if (cfg.scenario == ScenarioKind::ground_state)
    fail(std::string(command) + ": the ground-state scenario only supports `groundstate`");
}

}  // namespace

std::string run_simulate(const RunConfig& cfg) {
  cfg.validate();
  require_dynamic_scenario(cfg, "simulate");
  if (cfg.models.size() != 1)
    fail("simulate: exactly one model point is required (use `sweep` for families)");

  const CouplingEnvelope env = cfg.effective_envelope();
  const std::vector<double> times = time_grid(cfg.grid);

  std::ostringstream out;
  out << provenance_header("simulate", cfg);
  out << "t,alpha,mu,n_a,n_b,I,E_c,E_m,work\n";
  for (const double alpha : cfg.alphas) {
    ModelParams params{cfg.models[0].delta, cfg.models[0].eta_max, alpha};
    const GaussianState initial = build_initial_state(cfg, params, env);
    const TrajectoryRecord traj =
        evolve(initial, params, env, cfg.variant, times, {.tol = cfg.tol});
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const GaussianState& st = traj.states[i];
      const EnergyReport er = energy_report(st, traj.states[0], params);
      out << fmt(traj.times[i]) << ',' << fmt(alpha) << ','
          << fmt(envelope_value(env, traj.times[i])) << ','
          << fmt(photon_number(st, Mode::cavity)) << ','
          << fmt(photon_number(st, Mode::matter)) << ',' << fmt(mutual_information(st)) << ','
          << fmt(er.E_c) << ',' << fmt(er.E_m) << ',' << fmt(er.work) << "\n";
    }
  }
  return out.str();
}

namespace {

struct SweepRow {
  double delta = 0.0;
  double eta = 0.0;
  double alpha = 0.0;
  double n_a_final = 0.0;
  double i_final = 0.0;
  double de_c = 0.0;
  double de_m = 0.0;
  double work = 0.0;
  double bound_residual = std::numeric_limits<double>::quiet_NaN();
};

SweepRow sweep_point(const RunConfig& cfg, const ModelPoint& model, double alpha) {
  ModelParams params{model.delta, model.eta_max, alpha};
  const CouplingEnvelope env = cfg.effective_envelope();
  const GaussianState initial = build_initial_state(cfg, params, env);
  const std::array<double, 2> endpoints{0.0, cfg.grid.t_end};
  const TrajectoryRecord traj =
      evolve(initial, params, env, cfg.variant, endpoints, {.tol = cfg.tol});

  const GaussianState& final_state = traj.states.back();
  const EnergyReport er = energy_report(final_state, initial, params);
  SweepRow row;
  row.delta = model.delta;
  row.eta = model.eta_max;
  row.alpha = alpha;
  row.n_a_final = photon_number(final_state, Mode::cavity);
  row.i_final = mutual_information(final_state);
  row.de_c = er.dE_c;
  row.de_m = er.dE_m;
  row.work = er.work;
  if (const auto* thermal = std::get_if<ThermalInitSpec>(&cfg.initial_state)) {
    const double beta_c = thermal->beta_omega_c / params.omega();
    const double beta_m = thermal->beta_omega_m / ModelParams::omega_m;
    row.bound_residual = thermo_bound_residual(er, beta_m, beta_c, row.i_final);
  }
  return row;
}

}  // namespace

std::string run_sweep(const RunConfig& cfg, int parallelism) {
  cfg.validate();
  require_dynamic_scenario(cfg, "sweep");

  struct Task {
    ModelPoint model;
    double alpha;
  };
  std::vector<Task> tasks;
  for (const auto& model : cfg.models)
    for (const double alpha : cfg.alphas) tasks.push_back({model, alpha});

  std::vector<SweepRow> rows(tasks.size());
  const int workers =
      std::clamp(parallelism, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = sweep_point(cfg, tasks[i].model, tasks[i].alpha);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  // Rows come out in task order (model-major, then alpha) regardless of
  // worker scheduling.
  std::ostringstream out;
  out << provenance_header("sweep", cfg);
  out << "delta,eta,alpha,n_a_final,I_final,dE_c,dE_m,work,bound_residual\n";
  for (const SweepRow& r : rows) {
    out << fmt(r.delta) << ',' << fmt(r.eta) << ',' << fmt(r.alpha) << ',' << fmt(r.n_a_final)
        << ',' << fmt(r.i_final) << ',' << fmt(r.de_c) << ',' << fmt(r.de_m) << ','
        << fmt(r.work) << ',' << fmt(r.bound_residual) << "\n";
  }
  return out.str();
}

std::string run_groundstate(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.scenario != ScenarioKind::ground_state)
    fail("groundstate: config scenario must be 'ground-state'");

  // Resolve the curve list before the header so the echo matches the rows.
  RunConfig resolved = cfg;
  if (resolved.etas.empty()) resolved.etas = {cfg.models[0].eta_max};
  const std::vector<double>& etas = resolved.etas;

  std::ostringstream out;
  out << provenance_header("groundstate", resolved);
  out << "eta,alpha,I_G,n_a,n_c,omega_alpha\n";
  for (const double eta : etas) {
    for (const double alpha : cfg.alphas) {
      ModelParams params{cfg.models[0].delta, eta, alpha};
      const DerivedFrequencies freq = derived_frequencies(params, alpha);
      out << fmt(eta) << ',' << fmt(alpha) << ','
          << fmt(ground_state_mutual_information(params, alpha)) << ','
          << fmt(ground_state_photon_number(params, alpha)) << ','
          << fmt(ground_state_renormalized_number(params, alpha)) << ','
          << fmt(freq.omega_alpha) << "\n";
    }
  }
  return out.str();
}

OracleCompareResult run_oracle_compare(const RunConfig& cfg) {
  cfg.validate();
  require_dynamic_scenario(cfg, "oracle-compare");
  if (cfg.models.size() != 1) fail("oracle-compare: exactly one model point is required");
  if (std::holds_alternative<InteractingGroundInitSpec>(cfg.initial_state))
    fail("oracle-compare: supported initial states are vacuum and thermal");
  // Thermal runs propagate a dim^2 density matrix; keep memory and runtime sane.
  if (std::holds_alternative<ThermalInitSpec>(cfg.initial_state) &&
      (cfg.oracle.dim_a > 25 || cfg.oracle.dim_b > 25))
    fail("oracle-compare: thermal runs cap the oracle dimensions at 25 per mode");

  const CouplingEnvelope env = cfg.effective_envelope();
  const std::vector<double> times = time_grid(cfg.grid);

  ConvergenceOptions copts;
  copts.dim_a = cfg.oracle.dim_a;
  copts.dim_b = cfg.oracle.dim_b;
  copts.steps_per_cycle = cfg.oracle.steps_per_cycle;
  copts.dim_doublings = cfg.oracle.dim_doublings;
  copts.max_step_doublings = cfg.oracle.max_step_doublings;

  OracleCompareResult result;
  result.converged = true;
  std::ostringstream report;
  json jreport;
  jreport["command"] = "oracle-compare";
  jreport["version"] = kVersion;
  jreport["fixture_version"] = kFixtureVersion;
  jreport["config"] = json::parse(canonical_config_json(cfg));
  json jalphas = json::array();

  for (const double alpha : cfg.alphas) {
    ModelParams params{cfg.models[0].delta, cfg.models[0].eta_max, alpha};

    OracleInitialState oracle_init = VacuumInit{};
    GaussianState gauss_init = vacuum_state();
    if (const auto* thermal = std::get_if<ThermalInitSpec>(&cfg.initial_state)) {
      oracle_init = ThermalInit{thermal->beta_omega_c, thermal->beta_omega_m};
      gauss_init = thermal_product_state(thermal->beta_omega_c, thermal->beta_omega_m);
    }

    const ConvergedOracleRun oracle =
        propagate_converged(params, env, cfg.variant, oracle_init, times, copts);
    const TrajectoryRecord traj =
        evolve(gauss_init, params, env, cfg.variant, times, {.tol = cfg.tol});

    double dev_n_a = 0.0, dev_n_b = 0.0, dev_i = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const GaussianState& st = traj.states[i];
      dev_n_a = std::max(dev_n_a,
                         std::fabs(photon_number(st, Mode::cavity) - oracle.series.n_a[i]));
      dev_n_b = std::max(dev_n_b,
                         std::fabs(photon_number(st, Mode::matter) - oracle.series.n_b[i]));
      dev_i = std::max(dev_i, std::fabs(mutual_information(st) -
                                        oracle.series.mutual_information[i]));
    }
    const double dev = std::max({dev_n_a, dev_n_b, dev_i});
    const double pass_tol = std::max(1e-6, oracle.dim_drift);
    const bool alpha_pass = oracle.converged && dev <= pass_tol;

    result.max_deviation = std::max(result.max_deviation, dev);
    result.dim_drift = std::max(result.dim_drift, oracle.dim_drift);
    result.step_drift = std::max(result.step_drift, oracle.step_drift);
    result.converged = result.converged && oracle.converged;

    report << "alpha=" << fmt(alpha) << " max|dev| n_a=" << fmt(dev_n_a)
           << " n_b=" << fmt(dev_n_b) << " I=" << fmt(dev_i)
           << " dims=" << oracle.dim_a_used << "x" << oracle.dim_b_used
           << " steps_per_cycle=" << oracle.steps_per_cycle_used
           << " step_drift=" << fmt(oracle.step_drift) << " dim_drift=" << fmt(oracle.dim_drift)
           << " norm_drift=" << fmt(oracle.norm_drift)
           << (oracle.converged ? "" : " CONVERGENCE-NOT-REACHED")
           << (alpha_pass ? " PASS" : " FAIL") << "\n";

    jalphas.push_back({{"alpha", alpha},
                       {"dev_n_a", dev_n_a},
                       {"dev_n_b", dev_n_b},
                       {"dev_I", dev_i},
                       {"dim_a", oracle.dim_a_used},
                       {"dim_b", oracle.dim_b_used},
                       {"steps_per_cycle", oracle.steps_per_cycle_used},
                       {"step_drift", oracle.step_drift},
                       {"dim_drift", oracle.dim_drift},
                       {"norm_drift", oracle.norm_drift},
                       {"converged", oracle.converged},
                       {"pass", alpha_pass}});
  }

  result.pass = result.converged && result.max_deviation <= std::max(1e-6, result.dim_drift);
  report << (result.pass ? "RESULT: PASS" : "RESULT: FAIL") << " max_deviation="
         << fmt(result.max_deviation) << " tolerance=" << fmt(std::max(1e-6, result.dim_drift))
         << "\n";
  jreport["alphas"] = jalphas;
  jreport["max_deviation"] = result.max_deviation;
  jreport["pass"] = result.pass;
  jreport["converged"] = result.converged;

  result.text_report = report.str();
  result.json_report = jreport.dump();
  return result;
}

FixtureSet compute_reference_fixtures(bool include_transit) {
  FixtureSet fixtures;
  fixtures.version = 1;
  const char* labels[3] = {"alpha0", "alphag", "alpha1"};

  std::vector<const char*> presets{"fig4"};
  if (include_transit) presets.push_back("fig2");
  for (const char* name : presets) {
    const RunConfig cfg = preset(name);
    const CouplingEnvelope env = cfg.effective_envelope();
    const std::vector<double> times = time_grid(cfg.grid);
    ConvergenceOptions copts;  // defaults: 30x30 doubled to 60x60
    for (int i = 0; i < 3; ++i) {
      ModelParams params{cfg.models[0].delta, cfg.models[0].eta_max, cfg.alphas[i]};
      const ConvergedOracleRun run =
          propagate_converged(params, env, cfg.variant, VacuumInit{}, times, copts);
      if (!run.converged)
        throw std::runtime_error(std::string("reference fixtures: oracle run for ") + name +
                                 "/" + labels[i] + " did not converge");
      const std::string prefix = std::string(name) + "." + labels[i];
      fixtures.values[prefix + ".n_a_final"] = run.series.n_a.back();
      fixtures.values[prefix + ".n_b_final"] = run.series.n_b.back();
      fixtures.values[prefix + ".mi_final"] = run.series.mutual_information.back();
      fixtures.values[prefix + ".dim_drift"] = run.dim_drift;
      fixtures.values[prefix + ".step_drift"] = run.step_drift;
    }
  }
  return fixtures;
}

}  // namespace gaugeqed
