#include "gaugeqed/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "gaugeqed/symplectic.hpp"

namespace gaugeqed {

namespace {

double mode_number(const GaussianState& st, int offset) {
  const double sxx = st.cov(offset, offset);
  const double spp = st.cov(offset + 1, offset + 1);
  const double mx = st.mean(offset);
  const double mp = st.mean(offset + 1);
  const double n = 0.5 * (sxx + spp + mx * mx + mp * mp - 1.0);
  return n > 0.0 ? n : 0.0;
}

// f(1/2) = 0 through the x ln x -> 0 limit.
double thermal_entropy_function(double nu) {
  const double hi = nu + 0.5;
  const double lo = nu - 0.5;
  double s = hi * std::log(hi);
  if (lo > 0.0) s -= lo * std::log(lo);
  return s;
}

constexpr double kSymplecticSlack = 1e-7;

double entropy_from_eigenvalue(double nu) {
  if (nu < 0.5 - kSymplecticSlack)
    throw std::runtime_error("entropy: symplectic eigenvalue below 1/2 (invalid state)");
  return thermal_entropy_function(std::max(nu, 0.5));
}

}  // namespace

double photon_number(const GaussianState& state, Mode mode) {
  return mode_number(state, mode == Mode::cavity ? 0 : 2);
}

double renormalized_photon_number(const GaussianState& state, const ModelParams& params,
                                  double alpha, double coupling_level) {
  if (!(coupling_level >= 0.0))
    throw std::invalid_argument("renormalized_photon_number: coupling_level must be >= 0");
  const double eta = params.eta_max * coupling_level;
  const double ratio = std::sqrt(1.0 + eta * eta * (1.0 - alpha) * (1.0 - alpha));
  const double lam = std::sqrt(ratio);  // x_c -> lam x_c, p_c -> p_c / lam
  GaussianState scaled = state;
  const Eigen::Vector4d d(lam, 1.0 / lam, 1.0, 1.0);
  scaled.mean = d.asDiagonal() * state.mean;
  scaled.cov = d.asDiagonal() * state.cov * d.asDiagonal();
  return photon_number(scaled, Mode::cavity);
}

double entropy(const GaussianState& state, Subset subset) {
  switch (subset) {
    case Subset::cavity:
      return entropy_from_eigenvalue(symplectic_eigenvalue(state.cov.block<2, 2>(0, 0)));
    case Subset::matter:
      return entropy_from_eigenvalue(symplectic_eigenvalue(state.cov.block<2, 2>(2, 2)));
    case Subset::both: {
      const Eigen::Vector2d nus = symplectic_eigenvalues(state.cov);
      return entropy_from_eigenvalue(nus(0)) + entropy_from_eigenvalue(nus(1));
    }
  }
  throw std::invalid_argument("entropy: unknown subset");
}

double mutual_information(const GaussianState& state) {
  const double i = entropy(state, Subset::cavity) + entropy(state, Subset::matter) -
                   entropy(state, Subset::both);
  return i > 0.0 ? i : 0.0;
}

EnergyReport energy_report(const GaussianState& state, const GaussianState& reference,
                           const ModelParams& params) {
  const double omega = params.omega();
  EnergyReport r;
  r.E_c = omega * (photon_number(state, Mode::cavity) + 0.5);
  r.E_m = ModelParams::omega_m * (photon_number(state, Mode::matter) + 0.5);
  r.dE_c = omega * (photon_number(state, Mode::cavity) - photon_number(reference, Mode::cavity));
  r.dE_m = ModelParams::omega_m *
           (photon_number(state, Mode::matter) - photon_number(reference, Mode::matter));
  r.work = r.dE_c + r.dE_m;
  return r;
}

double thermo_bound_residual(const EnergyReport& report, double beta_m, double beta_c,
                             double I_final) {
  if (!(beta_m > 0.0) || !(beta_c > 0.0))
    throw std::invalid_argument("thermo_bound_residual: betas must be > 0");
  return beta_m * report.dE_m + beta_c * report.dE_c - I_final;
}

}  // namespace gaugeqed
