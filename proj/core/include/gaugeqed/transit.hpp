#ifndef GAUGEQED_TRANSIT_HPP
#define GAUGEQED_TRANSIT_HPP

#include "gaugeqed/model.hpp"

// Moving-dipole scenario: uniform transit through a Gaussian cavity mode,
// expressed through dimensionless ratios only. The dipole starts at h x^ and
// moves along -x^, so mu(t) peaks when it crosses the beam axis.

namespace gaugeqed {

struct TransitScenario {
  double ratio_wc = 1.0;  // w_c * omega_m / nu, > 0: beam transit time in 1/omega_m
  double offset_h = 5.0;  // h / w_c: initial offset in waists; must give mu(0) < 1e-10
  double theta = 1.5707963267948966;  // angle between mode polarization and motion
};

// Gaussian envelope for the scenario (time unit 1/omega_m, peak value 1 at
// t = offset_h * ratio_wc). Throws std::invalid_argument when the dipole does
// not start effectively outside the beam (mu(0) >= 1e-10) or ratio_wc <= 0.
CouplingEnvelope transit_envelope(const TransitScenario& sc);

// Gauge for which the time-dependent-coupling Hamiltonian equals the
// gauge-invariant one for a collinear dipole: alpha* = cos^2 theta.
// Throws std::invalid_argument for theta outside [0, pi].
double equality_gauge(double theta);

// Coefficient kappa(t) of (a'+a)(b'+b) in the gauge-invariant correction:
// kappa = -(eta_max mudot(t) sqrt(delta)/2)(alpha - cos^2 theta).
double tilde_correction_coefficient(const ModelParams& params, const CouplingEnvelope& env,
                                    double t, double alpha, double theta);

// kappa(t) for a Hamiltonian variant: 0 for standard, the above for tilde
// (with alpha = params.alpha), and the orientation-averaged form
// -(eta_max mudot(t) sqrt(delta)/2)(alpha - 1/2) for tilde_averaged.
double variant_tilde_coefficient(const ModelParams& params, const CouplingEnvelope& env,
                                 double t, const HamiltonianVariant& variant);

}  // namespace gaugeqed

#endif
