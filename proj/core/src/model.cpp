#include "gaugeqed/model.hpp"

#include <cmath>
#include <stdexcept>

namespace gaugeqed {

void ModelParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("ModelParams: delta must be finite and > 0");
  if (!(eta_max >= 0.0) || !std::isfinite(eta_max))
    throw std::invalid_argument("ModelParams: eta_max must be finite and >= 0");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("ModelParams: alpha must be finite");
}

double jc_gauge(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("jc_gauge: delta must be finite and > 0");
  return 1.0 / (1.0 + delta);
}

void validate(const CouplingEnvelope& env) {
  std::visit(
      [](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ConstantEnvelope>) {
          if (!(e.level >= 0.0 && e.level <= 1.0))
            throw std::invalid_argument("ConstantEnvelope: level must lie in [0, 1]");
        } else if constexpr (std::is_same_v<T, SmoothedBoxEnvelope>) {
          if (!(e.t0 > 0.0) || !(e.tau > 0.0) || !(e.s > 0.0))
            throw std::invalid_argument("SmoothedBoxEnvelope: t0, tau, s must all be > 0");
        } else {
          if (!(e.nu > 0.0) || !(e.w_c > 0.0))
            throw std::invalid_argument("GaussianTransitEnvelope: nu and w_c must be > 0");
        }
      },
      env);
}

namespace {

// cosh(x) and sinh(x) scaled by exp(-m), valid for any m >= |x|; keeps the
// smoothed-box evaluation finite for arguments far beyond cosh overflow.
double cosh_scaled(double x, double m) {
  return 0.5 * (std::exp(x - m) + std::exp(-x - m));
}
double sinh_scaled(double x, double m) {
  return 0.5 * (std::exp(x - m) - std::exp(-x - m));
}

double smoothed_box_value(const SmoothedBoxEnvelope& e, double t) {
  const double u = t - e.t0 - 0.5 * e.tau;  // time from the envelope peak
  const double a = e.s * u;
  const double b = 0.5 * e.s * e.tau;
  const double m = std::max(std::fabs(a), b);
  const double num = cosh_scaled(a, m) - std::exp(-m);
  const double den = cosh_scaled(b, m) + cosh_scaled(a, m);
  return 1.0 - std::tanh(0.5 * e.s * e.t0) * (num / den);
}

double smoothed_box_derivative(const SmoothedBoxEnvelope& e, double t) {
  const double u = t - e.t0 - 0.5 * e.tau;
  const double a = e.s * u;
  const double b = 0.5 * e.s * e.tau;
  const double m = std::max(std::fabs(a), b);
  const double den = cosh_scaled(b, m) + cosh_scaled(a, m);
  const double num = sinh_scaled(a, m) * (cosh_scaled(b, m) + std::exp(-m));
  return -e.s * std::tanh(0.5 * e.s * e.t0) * num / (den * den);
}

double transit_value(const GaussianTransitEnvelope& e, double t) {
  const double x = (e.h - e.nu * t) / e.w_c;
  return std::exp(-x * x);
}

double transit_derivative(const GaussianTransitEnvelope& e, double t) {
  const double x = (e.h - e.nu * t) / e.w_c;
  return transit_value(e, t) * 2.0 * x * e.nu / e.w_c;
}

}  // namespace

double envelope_value(const CouplingEnvelope& env, double t) {
  return std::visit(
      [t](const auto& e) -> double {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ConstantEnvelope>)
          return e.level;
        else if constexpr (std::is_same_v<T, SmoothedBoxEnvelope>)
          return smoothed_box_value(e, t);
        else
          return transit_value(e, t);
      },
      env);
}

double envelope_derivative(const CouplingEnvelope& env, double t) {
  return std::visit(
      [t](const auto& e) -> double {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ConstantEnvelope>)
          return 0.0;
        else if constexpr (std::is_same_v<T, SmoothedBoxEnvelope>)
          return smoothed_box_derivative(e, t);
        else
          return transit_derivative(e, t);
      },
      env);
}

InteractionCoefficients interaction_coefficients(const ModelParams& params,
                                                 const CouplingEnvelope& env,
                                                 double t) {
  const double omega = params.omega();
  const double eta = params.eta_max * envelope_value(env, t);
  const double quad = 0.25 * eta * eta * omega;
  const double lin = 0.5 * eta * ModelParams::omega_m * std::sqrt(params.delta);
  InteractionCoefficients c;
  c.c_quad_a = quad * (1.0 - params.alpha) * (1.0 - params.alpha);
  c.c_quad_b = quad * params.delta * params.alpha * params.alpha;
  c.u_minus = lin * ((1.0 - params.alpha) + params.delta * params.alpha);
  c.u_plus = lin * ((1.0 - params.alpha) - params.delta * params.alpha);
  return c;
}

}  // namespace gaugeqed
