#ifndef GAUGEQED_OBSERVABLES_HPP
#define GAUGEQED_OBSERVABLES_HPP

#include "gaugeqed/dynamics.hpp"
#include "gaugeqed/model.hpp"

// Physical quantities extracted from Gaussian states. Entropies are in nats.

namespace gaugeqed {

enum class Mode { cavity, matter };
enum class Subset { cavity, matter, both };

// <a'a> (or <b'b>) from the quadrature block; tiny negatives clipped to 0.
double photon_number(const GaussianState& state, Mode mode);

// <c'c> in the renormalized cavity basis at frequency
// omega_alpha = omega sqrt(1 + eta^2 (1-alpha)^2), eta = eta_max * coupling_level;
// c is the one-mode squeeze of a given by x_c -> sqrt(omega_alpha/omega) x_c.
double renormalized_photon_number(const GaussianState& state, const ModelParams& params,
                                  double alpha, double coupling_level);

// Von Neumann entropy of the selected reduction via symplectic eigenvalues:
// S = sum f(nu), f(nu) = (nu+1/2)ln(nu+1/2) - (nu-1/2)ln(nu-1/2).
// Throws std::runtime_error if a symplectic eigenvalue is below 1/2 - 1e-7.
double entropy(const GaussianState& state, Subset subset);

// I = S(cavity) + S(matter) - S(both), clipped to >= 0.
double mutual_information(const GaussianState& state);

struct EnergyReport {
  double E_c = 0.0;   // omega (<a'a> + 1/2)
  double E_m = 0.0;   // omega_m (<b'b> + 1/2)
  double dE_c = 0.0;  // change relative to the reference state
  double dE_m = 0.0;
  double work = 0.0;  // dE_c + dE_m
};

EnergyReport energy_report(const GaussianState& state, const GaussianState& reference,
                           const ModelParams& params);

// beta_m dE_m + beta_c dE_c - I; non-negative (up to -1e-7) for every unitary
// trajectory that starts from a Gibbs product state.
// Throws std::invalid_argument for non-positive betas.
double thermo_bound_residual(const EnergyReport& report, double beta_m, double beta_c,
                             double I_final);

}  // namespace gaugeqed

#endif
