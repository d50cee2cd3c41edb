#include "gaugeqed/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "gaugeqed/symplectic.hpp"
#include "gaugeqed/transit.hpp"

namespace gaugeqed {

QuadraticGenerator build_generator(const ModelParams& params, const CouplingEnvelope& env,
                                   double t, const HamiltonianVariant& variant) {
  params.validate();
  const double omega = params.omega();
  const InteractionCoefficients c = interaction_coefficients(params, env, t);

  QuadraticGenerator gen;
  Eigen::Matrix4d& g = gen.G;
  g(0, 0) = omega + 4.0 * c.c_quad_a;
  g(1, 1) = omega;
  g(2, 2) = ModelParams::omega_m + 4.0 * c.c_quad_b;
  g(3, 3) = ModelParams::omega_m;
  g(0, 3) = g(3, 0) = c.u_minus + c.u_plus;
  g(1, 2) = g(2, 1) = c.u_plus - c.u_minus;

  // kappa (a'+a)(b'+b) = 2 kappa x_c x_m
  const double kappa = variant_tilde_coefficient(params, env, t, variant);
  g(0, 2) = g(2, 0) = 2.0 * kappa;
  return gen;
}

GaussianState vacuum_state() { return {}; }

GaussianState thermal_product_state(double beta_omega_c, double beta_omega_m) {
  if (!(beta_omega_c > 0.0) || !(beta_omega_m > 0.0))
    throw std::invalid_argument("thermal_product_state: beta*omega products must be > 0");
  const auto occupation = [](double bw) { return 1.0 / std::expm1(bw); };
  GaussianState st;
  const double nu_c = occupation(beta_omega_c) + 0.5;
  const double nu_m = occupation(beta_omega_m) + 0.5;
  st.cov = Eigen::Vector4d(nu_c, nu_c, nu_m, nu_m).asDiagonal();
  return st;
}

GaussianState interacting_ground_state(const ModelParams& params, double coupling_level) {
  params.validate();
  const CouplingEnvelope env = ConstantEnvelope{coupling_level};
  validate(env);
  const QuadraticGenerator gen = build_generator(params, env, 0.0, StandardVariant{});
  GaussianState st;
  st.cov = ground_state_covariance(gen.G);
  return st;
}

namespace {

using MomentVector = std::array<double, 20>;  // mean (4) then covariance (16, row-major)

void pack(const GaussianState& st, MomentVector& y) {
  Eigen::Map<Eigen::Vector4d>(y.data()) = st.mean;
  Eigen::Map<Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(y.data() + 4) = st.cov;
}

GaussianState unpack(const MomentVector& y) {
  GaussianState st;
  st.mean = Eigen::Map<const Eigen::Vector4d>(y.data());
  st.cov = Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(y.data() + 4);
  return st;
}

void symmetrize(MomentVector& y) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double v = 0.5 * (y[4 + 4 * i + j] + y[4 + 4 * j + i]);
      y[4 + 4 * i + j] = v;
      y[4 + 4 * j + i] = v;
    }
  }
}

struct MomentEquations {
  const ModelParams* params;
  const CouplingEnvelope* env;
  const HamiltonianVariant* variant;

  void operator()(const MomentVector& y, MomentVector& dydt, double t) const {
    const Eigen::Matrix4d g = build_generator(*params, *env, t, *variant).G;
    const Eigen::Matrix4d drift = symplectic_form() * g;
    const Eigen::Map<const Eigen::Vector4d> mean(y.data());
    const Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>> cov(y.data() + 4);
    Eigen::Map<Eigen::Vector4d>(dydt.data()) = drift * mean;
    Eigen::Map<Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(dydt.data() + 4) =
        drift * cov + cov * drift.transpose();
  }
};

}  // namespace

TrajectoryRecord evolve(const GaussianState& state0, const ModelParams& params,
                        const CouplingEnvelope& env, const HamiltonianVariant& variant,
                        std::span<const double> t_grid, const EvolveOptions& opts) {
  params.validate();
  validate(env);
  if (t_grid.empty()) throw std::invalid_argument("evolve: empty time grid");
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
    if (!(t_grid[i] < t_grid[i + 1]))
      throw std::invalid_argument("evolve: time grid must be strictly increasing");
  if (!(opts.tol > 1e-14 && opts.tol < 1e-3))
    throw std::invalid_argument("evolve: tol must lie in (1e-14, 1e-3)");
  if ((state0.cov - state0.cov.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("evolve: initial covariance is not symmetric");
  if (heisenberg_min_eigenvalue(state0.cov) < -1e-9)
    throw std::invalid_argument("evolve: initial covariance violates Heisenberg positivity");

  const double max_step =
      opts.max_step > 0.0 ? opts.max_step
                          : 1.0 / (50.0 * std::max(params.omega(), ModelParams::omega_m));

  TrajectoryRecord rec;
  rec.params = params;
  rec.envelope = env;
  rec.variant = variant;
  rec.times.assign(t_grid.begin(), t_grid.end());
  rec.states.reserve(t_grid.size());

  MomentVector y;
  pack(state0, y);
  symmetrize(y);

  const MomentEquations rhs{&params, &env, &variant};
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(opts.tol, opts.tol,
                                      ode::runge_kutta_cash_karp54<MomentVector>());

  const auto record_point = [&rec](const MomentVector& v) {
    GaussianState st = unpack(v);
    if (heisenberg_min_eigenvalue(st.cov) < -1e-6)
      throw std::runtime_error(
          "evolve: covariance positivity violated beyond 1e-6 (integrator breakdown)");
    rec.states.push_back(std::move(st));
  };

  record_point(y);
  double dt = max_step;
  double t = t_grid[0];
  for (std::size_t seg = 0; seg + 1 < t_grid.size(); ++seg) {
    const double t_target = t_grid[seg + 1];
    const double close = 1e-13 * std::max(1.0, std::fabs(t_target));
    while (t_target - t > close) {
      dt = std::min({dt, max_step, t_target - t});
      if (dt < 1e-16 * std::max(1.0, std::fabs(t)))
        throw std::runtime_error("evolve: step size underflow");
      if (stepper.try_step(rhs, y, t, dt) == ode::success) symmetrize(y);
    }
    t = t_target;
    record_point(y);
  }
  return rec;
}

}  // namespace gaugeqed
