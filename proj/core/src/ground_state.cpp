#include "gaugeqed/ground_state.hpp"

#include <cmath>

namespace gaugeqed {

DerivedFrequencies derived_frequencies(const ModelParams& params, double alpha) {
  params.validate();
  const double omega = params.omega();
  const double eta = params.eta_max;
  const auto omega_of = [&](double a) {
    return omega * std::sqrt(1.0 + eta * eta * (1.0 - a) * (1.0 - a));
  };
  DerivedFrequencies f;
  f.alpha_g = jc_gauge(params.delta);
  f.omega_alpha = omega_of(alpha);
  f.omega_g = omega_of(f.alpha_g);
  const double ew = eta * omega * f.alpha_g;
  f.omega_mg = std::sqrt(ModelParams::omega_m * ModelParams::omega_m + ew * ew);
  return f;
}

namespace {

// (mu+1)ln((mu+1)/2) - (mu-1)ln((mu-1)/2) with the x ln x -> 0 limit at mu = 1.
double pair_entropy(double mu) {
  const double hi = 0.5 * (mu + 1.0);
  const double lo = 0.5 * (mu - 1.0);
  double s = 2.0 * hi * std::log(hi);
  if (lo > 0.0) s -= 2.0 * lo * std::log(lo);
  return s;
}

// Shared bracket of the photon-number formulas:
// omega_g + eta^2 omega^2 (alpha - alpha_g)^2 / omega_mg + w^2 / omega_g.
double number_bracket(const ModelParams& params, const DerivedFrequencies& f, double alpha,
                      double w) {
  const double eo = params.eta_max * params.omega() * (alpha - f.alpha_g);
  return f.omega_g + eo * eo / f.omega_mg + w * w / f.omega_g;
}

}  // namespace

double ground_state_mutual_information(const ModelParams& params, double alpha) {
  const DerivedFrequencies f = derived_frequencies(params, alpha);
  const double omega = params.omega();
  const double x = (omega / f.omega_g) * params.eta_max * std::sqrt(params.delta) *
                   (alpha - f.alpha_g);
  const double mu = std::sqrt(1.0 + x * x);
  return pair_entropy(mu);
}

double ground_state_photon_number(const ModelParams& params, double alpha) {
  const DerivedFrequencies f = derived_frequencies(params, alpha);
  const double omega = params.omega();
  const double n = number_bracket(params, f, alpha, omega) / (4.0 * omega) - 0.5;
  return n > 0.0 ? n : 0.0;
}

double ground_state_renormalized_number(const ModelParams& params, double alpha) {
  const DerivedFrequencies f = derived_frequencies(params, alpha);
  const double n = number_bracket(params, f, alpha, f.omega_alpha) / (4.0 * f.omega_alpha) - 0.5;
  return n > 0.0 ? n : 0.0;
}

}  // namespace gaugeqed
