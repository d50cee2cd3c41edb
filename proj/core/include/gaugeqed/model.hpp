#ifndef GAUGEQED_MODEL_HPP
#define GAUGEQED_MODEL_HPP

#include <variant>

// Two-mode bosonic model of a harmonically bound dipole coupled to a single
// cavity mode through a gauge-parameterized, time-dependent interaction.
// Units: hbar = 1 and omega_m = 1, so times are in 1/omega_m and energies in
// omega_m. The only physical inputs are the frequency ratio delta = omega/omega_m,
// the peak dimensionless coupling eta_max, and the gauge parameter alpha.

namespace gaugeqed {

struct ModelParams {
  double delta = 1.0;    // cavity frequency over matter frequency, > 0
  double eta_max = 0.0;  // peak dimensionless coupling, >= 0
  double alpha = 0.0;    // gauge parameter, any real

  static constexpr double omega_m = 1.0;

  double omega() const { return delta * omega_m; }

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

// Gauge in which the linear interaction is number conserving (no a'b' term).
// Throws std::invalid_argument for delta <= 0.
double jc_gauge(double delta);

// Coupling envelope mu(t) in [0, 1].

struct ConstantEnvelope {
  double level = 1.0;  // in [0, 1]
};

// Smooth switch on/off: rises to 1 at t0 + tau/2, with mu(t0) ~ 1/2 and
// tau roughly the full width at half maximum; s sets the switching rate
// (10-90% rise takes about 4/s).
struct SmoothedBoxEnvelope {
  double t0 = 0.0;   // switch-on time, > 0
  double tau = 0.0;  // interaction window, > 0
  double s = 1.0;    // inverse switching timescale, > 0
};

// Uniform dipole motion through a Gaussian beam waist: mu(t) = exp(-((h - nu t)/w_c)^2).
struct GaussianTransitEnvelope {
  double h = 0.0;    // initial distance from the beam axis
  double nu = 1.0;   // speed, > 0
  double w_c = 1.0;  // beam waist, > 0
};

using CouplingEnvelope =
    std::variant<ConstantEnvelope, SmoothedBoxEnvelope, GaussianTransitEnvelope>;

// Throws std::invalid_argument on violated invariants.
void validate(const CouplingEnvelope& env);

double envelope_value(const CouplingEnvelope& env, double t);
double envelope_derivative(const CouplingEnvelope& env, double t);

// Coefficients of the interaction V at time t:
//   c_quad_a (a'+a)^2 + c_quad_b (b'+b)^2 + u_minus i(ab'-a'b) + u_plus i(a'b'-ab)
struct InteractionCoefficients {
  double c_quad_a = 0.0;  // eta(t)^2 omega (1-alpha)^2 / 4
  double c_quad_b = 0.0;  // eta(t)^2 omega delta alpha^2 / 4
  double u_minus = 0.0;   // eta(t) omega_m sqrt(delta) [(1-alpha) + delta alpha] / 2
  double u_plus = 0.0;    // eta(t) omega_m sqrt(delta) [(1-alpha) - delta alpha] / 2
};

InteractionCoefficients interaction_coefficients(const ModelParams& params,
                                                 const CouplingEnvelope& env,
                                                 double t);

// Hamiltonian family selector. `standard` is the time-dependent-coupling
// Hamiltonian; `tilde` adds the gauge-invariant correction
//   -(eta_max mudot(t) sqrt(delta)/2)(alpha - cos^2 theta)(a'+a)(b'+b)
// for a dipole moving at angle theta to the mode polarization;
// `tilde_averaged` replaces cos^2 theta by its orientation average 1/2.
struct StandardVariant {};
struct TildeVariant {
  double theta = 0.0;  // in [0, pi]
};
struct TildeAveragedVariant {};
using HamiltonianVariant = std::variant<StandardVariant, TildeVariant, TildeAveragedVariant>;

}  // namespace gaugeqed

#endif
