#ifndef GAUGEQED_FOCK_HPP
#define GAUGEQED_FOCK_HPP

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gaugeqed/model.hpp"

// Exact reference on a truncated two-mode Fock space |n, k>, n < dim_a,
// k < dim_b, flat index n * dim_b + k. Everything here is brute force on
// purpose: it validates the Gaussian moment path.

namespace gaugeqed {

using Complex = std::complex<double>;

// Scalar coefficients of H(t) = sum of fixed operator terms.
struct FockCoefficients {
  double omega = 0.0;
  double c_quad_a = 0.0;  // (a'+a)^2
  double c_quad_b = 0.0;  // (b'+b)^2
  double u_minus = 0.0;   // i(ab'-a'b)
  double u_plus = 0.0;    // i(a'b'-ab)
  double kappa = 0.0;     // (a'+a)(b'+b)
};

FockCoefficients fock_coefficients(const ModelParams& params, const CouplingEnvelope& env,
                                   double t, const HamiltonianVariant& variant);

class FockSystem {
 public:
  FockSystem(int dim_a, int dim_b);  // both >= 2

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }

  // out = H(coeffs) in. Banded application, O(dim) per call.
  void apply_hamiltonian(const FockCoefficients& c, std::span<const Complex> in,
                         std::span<Complex> out) const;

  // Dense Hermitian matrix; memory is dim^2, intended for small systems.
  Eigen::MatrixXcd build_hamiltonian(const ModelParams& params, const CouplingEnvelope& env,
                                     double t, const HamiltonianVariant& variant) const;

  // Upper bound on the spectral norm of H (Gershgorin-style).
  double hamiltonian_norm_bound(const FockCoefficients& c) const;

  // Basis states and expectations.
  Eigen::VectorXcd vacuum() const;
  Eigen::VectorXcd coherent_state(Complex amp_a, Complex amp_b) const;
  // Truncated Gibbs product state, renormalized to unit trace.
  Eigen::MatrixXcd thermal_density(double beta_omega_c, double beta_omega_m) const;

  double number_expectation(const Eigen::VectorXcd& psi, int mode) const;  // 0 = a, 1 = b
  double number_expectation(const Eigen::MatrixXcd& rho, int mode) const;
  Complex lowering_expectation(const Eigen::VectorXcd& psi, int mode) const;   // <a> or <b>
  Complex squared_lowering_expectation(const Eigen::VectorXcd& psi, int mode) const;  // <a^2>

  // <c'c> in the renormalized cavity basis at frequency ratio
  // omega_alpha / omega = sqrt(1 + eta^2 (1-alpha)^2).
  double renormalized_number_expectation(const Eigen::VectorXcd& psi, double eta,
                                         double alpha) const;

  // Entanglement entropy of either reduction of a pure state (they coincide).
  double subsystem_entropy(const Eigen::VectorXcd& psi) const;
  double mutual_information(const Eigen::VectorXcd& psi) const;
  double mutual_information(const Eigen::MatrixXcd& rho) const;

 private:
  int dim_a_;
  int dim_b_;
  std::vector<double> sqrt_table_;  // sqrt(i) for i <= max(dim_a, dim_b) + 2
};

// --- propagation -------------------------------------------------------------

struct VacuumInit {};
struct CoherentInit {
  Complex amp_a{0.0, 0.0};
  Complex amp_b{0.0, 0.0};
};
struct ThermalInit {
  double beta_omega_c = 1.0;
  double beta_omega_m = 1.0;
};
using OracleInitialState = std::variant<VacuumInit, CoherentInit, ThermalInit>;

struct OracleSeries {
  std::vector<double> times;
  std::vector<double> n_a;
  std::vector<double> n_b;
  std::vector<double> mutual_information;
  std::vector<Complex> mean_a;  // <a>(t), pure-state runs only
  std::vector<Complex> mean_b;
  double norm_drift = 0.0;  // max |norm - 1| (trace for density runs)
  double step_size = 0.0;
};

// Fixed-step RK4 Schrodinger propagation of a state vector through t_grid.
// The step is 2 pi / (steps_per_cycle * max(omega, omega_m)) capped by the
// RK4 stability limit for the truncated spectral radius.
OracleSeries propagate_state(const FockSystem& sys, const Eigen::VectorXcd& psi0,
                             const ModelParams& params, const CouplingEnvelope& env,
                             const HamiltonianVariant& variant, std::span<const double> t_grid,
                             int steps_per_cycle);

// Von Neumann propagation of a density matrix (dim^2 storage).
OracleSeries propagate_density(const FockSystem& sys, const Eigen::MatrixXcd& rho0,
                               const ModelParams& params, const CouplingEnvelope& env,
                               const HamiltonianVariant& variant, std::span<const double> t_grid,
                               int steps_per_cycle);

struct ConvergenceOptions {
  int dim_a = 30;
  int dim_b = 30;
  int dim_doublings = 1;        // compare dims against 2x dims this many times
  int steps_per_cycle = 200;
  int max_step_doublings = 5;
  double step_tol = 1e-7;       // observable drift gate between step refinements
  double dim_tol = 1e-7;        // observable drift gate between dimension levels
  double norm_tol = 1e-9;
};

struct ConvergedOracleRun {
  OracleSeries series;          // finest dimension level, converged steps
  int dim_a_used = 0;
  int dim_b_used = 0;
  int steps_per_cycle_used = 0;
  double step_drift = 0.0;
  double dim_drift = 0.0;
  double norm_drift = 0.0;
  bool step_converged = false;
  bool dim_converged = false;
  bool converged = false;       // all gates passed
};

// Runs the propagation with the built-in convergence gate: steps per cycle
// are doubled until the observable drift and norm drift pass their gates,
// then the dimensions are doubled and the truncation drift is reported.
ConvergedOracleRun propagate_converged(const ModelParams& params, const CouplingEnvelope& env,
                                       const HamiltonianVariant& variant,
                                       const OracleInitialState& initial,
                                       std::span<const double> t_grid,
                                       const ConvergenceOptions& opts);

// --- static ground state -----------------------------------------------------

struct FockGroundState {
  Eigen::VectorXcd psi;
  double energy = 0.0;
  int iterations = 0;
  double residual = 0.0;  // ||H psi - E psi||
};

// Lowest eigenpair of the constant-coupling Hamiltonian (coupling level
// `coupling_level`, gauge `alpha`), by Lanczos iteration with full
// reorthogonalization. Throws std::runtime_error when not converged.
FockGroundState exact_ground_state(const FockSystem& sys, const ModelParams& params,
                                   double alpha, double coupling_level = 1.0,
                                   int max_iterations = 600, double tol = 1e-12);

}  // namespace gaugeqed

#endif
