#include "gaugeqed/transit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaugeqed {

CouplingEnvelope transit_envelope(const TransitScenario& sc) {
  if (!(sc.ratio_wc > 0.0))
    throw std::invalid_argument("transit_envelope: ratio_wc must be > 0");
  // Only the ratios matter; fix nu = 1 so that w_c = ratio_wc in 1/omega_m units.
  GaussianTransitEnvelope env;
  env.nu = 1.0;
  env.w_c = sc.ratio_wc;
  env.h = sc.offset_h * sc.ratio_wc;
  const CouplingEnvelope result = env;
  if (envelope_value(result, 0.0) >= 1e-10)
    throw std::invalid_argument(
        "transit_envelope: dipole starts inside the beam, mu(0) >= 1e-10; increase offset_h");
  return result;
}

double equality_gauge(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("equality_gauge: theta must lie in [0, pi]");
  const double c = std::cos(theta);
  return c * c;
}

double tilde_correction_coefficient(const ModelParams& params, const CouplingEnvelope& env,
                                    double t, double alpha, double theta) {
  params.validate();
  return -0.5 * params.eta_max * envelope_derivative(env, t) * std::sqrt(params.delta) *
         (alpha - equality_gauge(theta));
}

double variant_tilde_coefficient(const ModelParams& params, const CouplingEnvelope& env,
                                 double t, const HamiltonianVariant& variant) {
  if (const auto* tilde = std::get_if<TildeVariant>(&variant))
    return tilde_correction_coefficient(params, env, t, params.alpha, tilde->theta);
  if (std::holds_alternative<TildeAveragedVariant>(variant))
    return -0.5 * params.eta_max * envelope_derivative(env, t) * std::sqrt(params.delta) *
           (params.alpha - 0.5);
  return 0.0;
}

}  // namespace gaugeqed
