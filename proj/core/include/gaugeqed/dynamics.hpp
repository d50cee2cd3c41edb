#ifndef GAUGEQED_DYNAMICS_HPP
#define GAUGEQED_DYNAMICS_HPP

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gaugeqed/model.hpp"

// Gaussian-state moment dynamics for the quadratic two-mode Hamiltonians
// H(t) = r' G(t) r / 2 with r = (x_c, p_c, x_m, p_m):
//   d<r>/dt = Omega G <r>,   d sigma/dt = (Omega G) sigma + sigma (Omega G)'.

namespace gaugeqed {

struct GaussianState {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = 0.5 * Eigen::Matrix4d::Identity();
};

struct QuadraticGenerator {
  Eigen::Matrix4d G = Eigen::Matrix4d::Zero();
  double offset = 0.0;  // scalar energy; irrelevant to the dynamics
};

QuadraticGenerator build_generator(const ModelParams& params, const CouplingEnvelope& env,
                                   double t, const HamiltonianVariant& variant);

GaussianState vacuum_state();

// Product of two Gibbs states given the dimensionless products beta*omega for
// each mode; both must be > 0 (throws std::invalid_argument otherwise).
GaussianState thermal_product_state(double beta_omega_c, double beta_omega_m);

// Ground state of the static Hamiltonian at constant coupling
// eta = eta_max * coupling_level, via symplectic diagonalization.
// Throws std::runtime_error when the static generator is not positive
// definite (dynamical instability).
GaussianState interacting_ground_state(const ModelParams& params, double coupling_level);

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<GaussianState> states;
  ModelParams params;
  CouplingEnvelope envelope;
  HamiltonianVariant variant;
};

struct EvolveOptions {
  double tol = 1e-9;     // relative tolerance, in (1e-14, 1e-3)
  double max_step = 0.0; // 0 selects the default 1/(50 max(omega, omega_m))
};

// Integrates the moment equations through the given strictly increasing time
// grid. Deterministic for fixed inputs. Throws std::invalid_argument on bad
// inputs and std::runtime_error if the Heisenberg positivity of the
// covariance is violated beyond 1e-6 (integrator breakdown).
TrajectoryRecord evolve(const GaussianState& state0, const ModelParams& params,
                        const CouplingEnvelope& env, const HamiltonianVariant& variant,
                        std::span<const double> t_grid, const EvolveOptions& opts = {});

}  // namespace gaugeqed

#endif
