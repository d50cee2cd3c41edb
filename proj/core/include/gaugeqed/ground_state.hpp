#ifndef GAUGEQED_GROUND_STATE_HPP
#define GAUGEQED_GROUND_STATE_HPP

#include "gaugeqed/model.hpp"

// Closed forms for the ground state of the constant-coupling Hamiltonian
// (coupling level 1, eta = eta_max). All expressions are reduced to the
// dimensionless pair (eta, delta) with omega_m = 1.

namespace gaugeqed {

struct DerivedFrequencies {
  double omega_alpha = 0.0;  // omega sqrt(1 + eta^2 (1-alpha)^2)
  double alpha_g = 0.0;      // 1 / (1 + delta)
  double omega_g = 0.0;      // omega_{alpha_g}
  double omega_mg = 0.0;     // sqrt(omega_m^2 + eta^2 omega^2 alpha_g^2)
};

DerivedFrequencies derived_frequencies(const ModelParams& params, double alpha);

// Ground-state mutual information between the cavity and matter modes.
double ground_state_mutual_information(const ModelParams& params, double alpha);

// Ground-state <a'a> in the bare cavity basis.
double ground_state_photon_number(const ModelParams& params, double alpha);

// Ground-state <c'c> in the renormalized cavity basis; zero at alpha_g.
double ground_state_renormalized_number(const ModelParams& params, double alpha);

}  // namespace gaugeqed

#endif
