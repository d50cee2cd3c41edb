#include "gaugeqed/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gaugeqed/transit.hpp"

namespace gaugeqed {

FockCoefficients fock_coefficients(const ModelParams& params, const CouplingEnvelope& env,
                                   double t, const HamiltonianVariant& variant) {
  const InteractionCoefficients c = interaction_coefficients(params, env, t);
  FockCoefficients f;
  f.omega = params.omega();
  f.c_quad_a = c.c_quad_a;
  f.c_quad_b = c.c_quad_b;
  f.u_minus = c.u_minus;
  f.u_plus = c.u_plus;
  f.kappa = variant_tilde_coefficient(params, env, t, variant);
  return f;
}

FockSystem::FockSystem(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("FockSystem: truncation dimensions must be >= 2");
  sqrt_table_.resize(static_cast<std::size_t>(std::max(dim_a, dim_b)) + 3);
  for (std::size_t i = 0; i < sqrt_table_.size(); ++i)
    sqrt_table_[i] = std::sqrt(static_cast<double>(i));
}

void FockSystem::apply_hamiltonian(const FockCoefficients& c, std::span<const Complex> in,
                                   std::span<Complex> out) const {
  const int nb = dim_b_;
  const double* sq = sqrt_table_.data();
  // Couplings of |n,k> to its diagonal neighbours |n+-1, k-+1> and |n+-1, k+-1>.
  const Complex exch_up(c.kappa, c.u_minus);    // psi[n+1, k-1]
  const Complex exch_dn(c.kappa, -c.u_minus);   // psi[n-1, k+1]
  const Complex pair_dn(c.kappa, c.u_plus);     // psi[n-1, k-1]
  const Complex pair_up(c.kappa, -c.u_plus);    // psi[n+1, k+1]

  for (int n = 0; n < dim_a_; ++n) {
    const int row = n * nb;
    for (int k = 0; k < nb; ++k) {
      const int i = row + k;
      const double diag = c.omega * (n + 0.5) + ModelParams::omega_m * (k + 0.5) +
                          c.c_quad_a * (2.0 * n + 1.0) + c.c_quad_b * (2.0 * k + 1.0);
      Complex acc = diag * in[i];
      if (n >= 2) acc += c.c_quad_a * sq[n] * sq[n - 1] * in[i - 2 * nb];
      if (n + 2 < dim_a_) acc += c.c_quad_a * sq[n + 1] * sq[n + 2] * in[i + 2 * nb];
      if (k >= 2) acc += c.c_quad_b * sq[k] * sq[k - 1] * in[i - 2];
      if (k + 2 < nb) acc += c.c_quad_b * sq[k + 1] * sq[k + 2] * in[i + 2];
      if (n + 1 < dim_a_ && k >= 1) acc += exch_up * (sq[n + 1] * sq[k] * in[i + nb - 1]);
      if (n >= 1 && k + 1 < nb) acc += exch_dn * (sq[n] * sq[k + 1] * in[i - nb + 1]);
      if (n >= 1 && k >= 1) acc += pair_dn * (sq[n] * sq[k] * in[i - nb - 1]);
      if (n + 1 < dim_a_ && k + 1 < nb)
        acc += pair_up * (sq[n + 1] * sq[k + 1] * in[i + nb + 1]);
      out[i] = acc;
    }
  }
}

Eigen::MatrixXcd FockSystem::build_hamiltonian(const ModelParams& params,
                                               const CouplingEnvelope& env, double t,
                                               const HamiltonianVariant& variant) const {
  const FockCoefficients c = fock_coefficients(params, env, t, variant);
  Eigen::MatrixXcd h(dim(), dim());
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim());
  Eigen::VectorXcd column(dim());
  for (int j = 0; j < dim(); ++j) {
    basis(j) = 1.0;
    apply_hamiltonian(c, {basis.data(), static_cast<std::size_t>(dim())},
                      {column.data(), static_cast<std::size_t>(dim())});
    h.col(j) = column;
    basis(j) = 0.0;
  }
  return h;
}

double FockSystem::hamiltonian_norm_bound(const FockCoefficients& c) const {
  const double na = dim_a_;
  const double nb = dim_b_;
  double bound = c.omega * (na - 0.5) + ModelParams::omega_m * (nb - 0.5);
  bound += std::fabs(c.c_quad_a) * (4.0 * na + 1.0);
  bound += std::fabs(c.c_quad_b) * (4.0 * nb + 1.0);
  const double cross = std::sqrt(na * nb);
  bound += 2.0 * cross *
           (std::fabs(c.u_minus) + std::fabs(c.u_plus) + 2.0 * std::fabs(c.kappa));
  return bound;
}

Eigen::VectorXcd FockSystem::vacuum() const {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim());
  psi(0) = 1.0;
  return psi;
}

Eigen::VectorXcd FockSystem::coherent_state(Complex amp_a, Complex amp_b) const {
  Eigen::VectorXcd ca(dim_a_), cb(dim_b_);
  ca(0) = 1.0;
  for (int n = 1; n < dim_a_; ++n) ca(n) = ca(n - 1) * amp_a / sqrt_table_[n];
  cb(0) = 1.0;
  for (int k = 1; k < dim_b_; ++k) cb(k) = cb(k - 1) * amp_b / sqrt_table_[k];
  Eigen::VectorXcd psi(dim());
  for (int n = 0; n < dim_a_; ++n)
    for (int k = 0; k < dim_b_; ++k) psi(n * dim_b_ + k) = ca(n) * cb(k);
  psi.normalize();
  return psi;
}

Eigen::MatrixXcd FockSystem::thermal_density(double beta_omega_c, double beta_omega_m) const {
  if (!(beta_omega_c > 0.0) || !(beta_omega_m > 0.0))
    throw std::invalid_argument("thermal_density: beta*omega products must be > 0");
  Eigen::VectorXd pa(dim_a_), pb(dim_b_);
  for (int n = 0; n < dim_a_; ++n) pa(n) = std::exp(-beta_omega_c * n);
  for (int k = 0; k < dim_b_; ++k) pb(k) = std::exp(-beta_omega_m * k);
  pa /= pa.sum();
  pb /= pb.sum();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int n = 0; n < dim_a_; ++n)
    for (int k = 0; k < dim_b_; ++k) rho(n * dim_b_ + k, n * dim_b_ + k) = pa(n) * pb(k);
  return rho;
}

double FockSystem::number_expectation(const Eigen::VectorXcd& psi, int mode) const {
  double acc = 0.0;
  for (int n = 0; n < dim_a_; ++n)
    for (int k = 0; k < dim_b_; ++k)
      acc += (mode == 0 ? n : k) * std::norm(psi(n * dim_b_ + k));
  return acc;
}

double FockSystem::number_expectation(const Eigen::MatrixXcd& rho, int mode) const {
  double acc = 0.0;
  for (int n = 0; n < dim_a_; ++n)
    for (int k = 0; k < dim_b_; ++k) {
      const int i = n * dim_b_ + k;
      acc += (mode == 0 ? n : k) * rho(i, i).real();
    }
  return acc;
}

Complex FockSystem::lowering_expectation(const Eigen::VectorXcd& psi, int mode) const {
  Complex acc(0.0, 0.0);
  if (mode == 0) {
    for (int n = 0; n + 1 < dim_a_; ++n)
      for (int k = 0; k < dim_b_; ++k)
        acc += std::conj(psi(n * dim_b_ + k)) * sqrt_table_[n + 1] * psi((n + 1) * dim_b_ + k);
  } else {
    for (int n = 0; n < dim_a_; ++n)
      for (int k = 0; k + 1 < dim_b_; ++k)
        acc += std::conj(psi(n * dim_b_ + k)) * sqrt_table_[k + 1] * psi(n * dim_b_ + k + 1);
  }
  return acc;
}

Complex FockSystem::squared_lowering_expectation(const Eigen::VectorXcd& psi, int mode) const {
  Complex acc(0.0, 0.0);
  if (mode == 0) {
    for (int n = 0; n + 2 < dim_a_; ++n)
      for (int k = 0; k < dim_b_; ++k)
        acc += std::conj(psi(n * dim_b_ + k)) * sqrt_table_[n + 1] * sqrt_table_[n + 2] *
               psi((n + 2) * dim_b_ + k);
  } else {
    for (int n = 0; n < dim_a_; ++n)
      for (int k = 0; k + 2 < dim_b_; ++k)
        acc += std::conj(psi(n * dim_b_ + k)) * sqrt_table_[k + 1] * sqrt_table_[k + 2] *
               psi(n * dim_b_ + k + 2);
  }
  return acc;
}

double FockSystem::renormalized_number_expectation(const Eigen::VectorXcd& psi, double eta,
                                                   double alpha) const {
  const double ratio = std::sqrt(1.0 + eta * eta * (1.0 - alpha) * (1.0 - alpha));
  const double lam = std::sqrt(ratio);
  const double u = 0.5 * (lam + 1.0 / lam);
  const double v = 0.5 * (lam - 1.0 / lam);
  const double n_a = number_expectation(psi, 0);
  const double re_sq = squared_lowering_expectation(psi, 0).real();
  const double n_c = (u * u + v * v) * n_a + v * v + 2.0 * u * v * re_sq;
  return n_c > 0.0 ? n_c : 0.0;
}

namespace {

// Entropy of the normalized spectrum; renormalizing removes the spurious
// entropy a slightly non-unit norm would otherwise inject.
double spectrum_entropy(const Eigen::VectorXd& probabilities) {
  double total = 0.0;
  for (int i = 0; i < probabilities.size(); ++i)
    if (probabilities(i) > 0.0) total += probabilities(i);
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (int i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities(i) / total;
    if (p > 1e-16) s -= p * std::log(p);
  }
  return s;
}

}  // namespace

double FockSystem::subsystem_entropy(const Eigen::VectorXcd& psi) const {
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(psi.data(), dim_a_, dim_b_);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd schmidt = svd.singularValues().array().square();
  return spectrum_entropy(schmidt);
}

double FockSystem::mutual_information(const Eigen::VectorXcd& psi) const {
  return 2.0 * subsystem_entropy(psi);
}

double FockSystem::mutual_information(const Eigen::MatrixXcd& rho) const {
  Eigen::MatrixXcd rho_a = Eigen::MatrixXcd::Zero(dim_a_, dim_a_);
  Eigen::MatrixXcd rho_b = Eigen::MatrixXcd::Zero(dim_b_, dim_b_);
  for (int n = 0; n < dim_a_; ++n)
    for (int m = 0; m < dim_a_; ++m)
      for (int k = 0; k < dim_b_; ++k) rho_a(n, m) += rho(n * dim_b_ + k, m * dim_b_ + k);
  for (int k = 0; k < dim_b_; ++k)
    for (int l = 0; l < dim_b_; ++l)
      for (int n = 0; n < dim_a_; ++n) rho_b(k, l) += rho(n * dim_b_ + k, n * dim_b_ + l);
  const auto entropy_of = [](const Eigen::MatrixXcd& r) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r, Eigen::EigenvaluesOnly);
    return spectrum_entropy(es.eigenvalues());
  };
  const double i = entropy_of(rho_a) + entropy_of(rho_b) - entropy_of(rho);
  return i > 0.0 ? i : 0.0;
}

// --- propagation -------------------------------------------------------------

namespace {

struct StepPlan {
  double step = 0.0;
};

// Fixed step from the cycle resolution, capped by RK4 stability on the
// truncated spectral radius (imaginary-axis limit 2*sqrt(2), margin applied).
StepPlan plan_step(const FockSystem& sys, const ModelParams& params,
                   const CouplingEnvelope& env, const HamiltonianVariant& variant,
                   std::span<const double> t_grid, int steps_per_cycle) {
  if (steps_per_cycle < 2)
    throw std::invalid_argument("propagate: steps_per_cycle must be >= 2");
  const double f_max = std::max(params.omega(), ModelParams::omega_m);
  const double h_cycle = 2.0 * std::numbers::pi / f_max / steps_per_cycle;
  double bound = 0.0;
  const double t0 = t_grid.front();
  const double t1 = t_grid.back();
  constexpr int samples = 129;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    bound = std::max(bound,
                     sys.hamiltonian_norm_bound(fock_coefficients(params, env, t, variant)));
  }
  return {std::min(h_cycle, 2.0 / bound)};
}

void validate_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("propagate: empty time grid");
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
    if (!(t_grid[i] < t_grid[i + 1]))
      throw std::invalid_argument("propagate: time grid must be strictly increasing");
}

}  // namespace

OracleSeries propagate_state(const FockSystem& sys, const Eigen::VectorXcd& psi0,
                             const ModelParams& params, const CouplingEnvelope& env,
                             const HamiltonianVariant& variant, std::span<const double> t_grid,
                             int steps_per_cycle) {
  params.validate();
  validate(env);
  validate_grid(t_grid);
  if (psi0.size() != sys.dim())
    throw std::invalid_argument("propagate_state: state dimension mismatch");
  if (std::fabs(psi0.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("propagate_state: initial state is not normalized");

  const auto plan = plan_step(sys, params, env, variant, t_grid, steps_per_cycle);
  const int dim = sys.dim();
  const auto span_of = [dim](Eigen::VectorXcd& v) {
    return std::span<Complex>(v.data(), static_cast<std::size_t>(dim));
  };
  const auto cspan_of = [dim](const Eigen::VectorXcd& v) {
    return std::span<const Complex>(v.data(), static_cast<std::size_t>(dim));
  };

  Eigen::VectorXcd psi = psi0;
  Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  const Complex minus_i(0.0, -1.0);

  const auto derivative = [&](double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
    sys.apply_hamiltonian(fock_coefficients(params, env, t, variant), cspan_of(y), span_of(dy));
    dy *= minus_i;
  };

  OracleSeries out;
  out.step_size = plan.step;
  out.times.assign(t_grid.begin(), t_grid.end());
  const auto record = [&](const Eigen::VectorXcd& y) {
    out.n_a.push_back(sys.number_expectation(y, 0));
    out.n_b.push_back(sys.number_expectation(y, 1));
    out.mutual_information.push_back(sys.mutual_information(y));
    out.mean_a.push_back(sys.lowering_expectation(y, 0));
    out.mean_b.push_back(sys.lowering_expectation(y, 1));
    out.norm_drift = std::max(out.norm_drift, std::fabs(y.norm() - 1.0));
  };

  record(psi);
  for (std::size_t seg = 0; seg + 1 < t_grid.size(); ++seg) {
    const double span = t_grid[seg + 1] - t_grid[seg];
    const int steps = std::max(1, static_cast<int>(std::ceil(span / plan.step)));
    const double h = span / steps;
    double t = t_grid[seg];
    for (int s = 0; s < steps; ++s) {
      derivative(t, psi, k1);
      tmp = psi + (0.5 * h) * k1;
      derivative(t + 0.5 * h, tmp, k2);
      tmp = psi + (0.5 * h) * k2;
      derivative(t + 0.5 * h, tmp, k3);
      tmp = psi + h * k3;
      derivative(t + h, tmp, k4);
      psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t += h;
    }
    record(psi);
  }
  return out;
}

OracleSeries propagate_density(const FockSystem& sys, const Eigen::MatrixXcd& rho0,
                               const ModelParams& params, const CouplingEnvelope& env,
                               const HamiltonianVariant& variant, std::span<const double> t_grid,
                               int steps_per_cycle) {
  params.validate();
  validate(env);
  validate_grid(t_grid);
  if (rho0.rows() != sys.dim() || rho0.cols() != sys.dim())
    throw std::invalid_argument("propagate_density: density dimension mismatch");
  if (std::fabs(rho0.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("propagate_density: initial density has non-unit trace");

  const auto plan = plan_step(sys, params, env, variant, t_grid, steps_per_cycle);
  const int dim = sys.dim();

  Eigen::MatrixXcd rho = 0.5 * (rho0 + rho0.adjoint());
  Eigen::MatrixXcd k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
  Eigen::MatrixXcd h_rho(dim, dim);

  // d rho/dt = -i (H rho - (H rho)'), valid while rho stays Hermitian.
  const auto derivative = [&](double t, const Eigen::MatrixXcd& r, Eigen::MatrixXcd& dr) {
    const FockCoefficients c = fock_coefficients(params, env, t, variant);
    for (int j = 0; j < dim; ++j) {
      sys.apply_hamiltonian(c, {r.col(j).data(), static_cast<std::size_t>(dim)},
                            {h_rho.col(j).data(), static_cast<std::size_t>(dim)});
    }
    dr = Complex(0.0, -1.0) * (h_rho - h_rho.adjoint());
  };

  OracleSeries out;
  out.step_size = plan.step;
  out.times.assign(t_grid.begin(), t_grid.end());
  const auto record = [&](const Eigen::MatrixXcd& r) {
    out.n_a.push_back(sys.number_expectation(r, 0));
    out.n_b.push_back(sys.number_expectation(r, 1));
    out.mutual_information.push_back(sys.mutual_information(r));
    out.norm_drift = std::max(out.norm_drift, std::fabs(r.trace().real() - 1.0));
  };

  record(rho);
  for (std::size_t seg = 0; seg + 1 < t_grid.size(); ++seg) {
    const double span = t_grid[seg + 1] - t_grid[seg];
    const int steps = std::max(1, static_cast<int>(std::ceil(span / plan.step)));
    const double h = span / steps;
    double t = t_grid[seg];
    for (int s = 0; s < steps; ++s) {
      derivative(t, rho, k1);
      tmp = rho + (0.5 * h) * k1;
      derivative(t + 0.5 * h, tmp, k2);
      tmp = rho + (0.5 * h) * k2;
      derivative(t + 0.5 * h, tmp, k3);
      tmp = rho + h * k3;
      derivative(t + h, tmp, k4);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      rho = 0.5 * (rho + rho.adjoint()).eval();
      t += h;
    }
    record(rho);
  }
  return out;
}

namespace {

double series_drift(const OracleSeries& a, const OracleSeries& b) {
  double drift = 0.0;
  for (std::size_t i = 0; i < a.n_a.size(); ++i) {
    drift = std::max(drift, std::fabs(a.n_a[i] - b.n_a[i]));
    drift = std::max(drift, std::fabs(a.n_b[i] - b.n_b[i]));
    drift = std::max(drift, std::fabs(a.mutual_information[i] - b.mutual_information[i]));
  }
  return drift;
}

OracleSeries run_once(const ModelParams& params, const CouplingEnvelope& env,
                      const HamiltonianVariant& variant, const OracleInitialState& initial,
                      std::span<const double> t_grid, int dim_a, int dim_b,
                      int steps_per_cycle) {
  FockSystem sys(dim_a, dim_b);
  return std::visit(
      [&](const auto& init) -> OracleSeries {
        using T = std::decay_t<decltype(init)>;
        if constexpr (std::is_same_v<T, VacuumInit>) {
          return propagate_state(sys, sys.vacuum(), params, env, variant, t_grid,
                                 steps_per_cycle);
        } else if constexpr (std::is_same_v<T, CoherentInit>) {
          return propagate_state(sys, sys.coherent_state(init.amp_a, init.amp_b), params, env,
                                 variant, t_grid, steps_per_cycle);
        } else {
          return propagate_density(sys, sys.thermal_density(init.beta_omega_c,
                                                            init.beta_omega_m),
                                   params, env, variant, t_grid, steps_per_cycle);
        }
      },
      initial);
}

}  // namespace

ConvergedOracleRun propagate_converged(const ModelParams& params, const CouplingEnvelope& env,
                                       const HamiltonianVariant& variant,
                                       const OracleInitialState& initial,
                                       std::span<const double> t_grid,
                                       const ConvergenceOptions& opts) {
  ConvergedOracleRun run;
  int dim_a = opts.dim_a;
  int dim_b = opts.dim_b;

  // Settle the step refinement at the base dimensions.
  int spc = opts.steps_per_cycle;
  OracleSeries prev = run_once(params, env, variant, initial, t_grid, dim_a, dim_b, spc);
  for (int i = 0; i < opts.max_step_doublings; ++i) {
    OracleSeries next =
        run_once(params, env, variant, initial, t_grid, dim_a, dim_b, 2 * spc);
    run.step_drift = series_drift(prev, next);
    prev = std::move(next);
    spc *= 2;
    if (run.step_drift < opts.step_tol && prev.norm_drift < opts.norm_tol) {
      run.step_converged = true;
      break;
    }
  }

  // Truncation gate: double the dimensions at the settled step resolution.
  OracleSeries finer = prev;
  run.dim_converged = true;
  for (int i = 0; i < opts.dim_doublings; ++i) {
    OracleSeries doubled =
        run_once(params, env, variant, initial, t_grid, 2 * dim_a, 2 * dim_b, spc);
    run.dim_drift = series_drift(finer, doubled);
    finer = std::move(doubled);
    dim_a *= 2;
    dim_b *= 2;
    run.dim_converged = run.dim_drift < opts.dim_tol;
  }

  run.series = std::move(finer);
  run.dim_a_used = dim_a;
  run.dim_b_used = dim_b;
  run.steps_per_cycle_used = spc;
  run.norm_drift = run.series.norm_drift;
  run.converged =
      run.step_converged && run.dim_converged && run.norm_drift < opts.norm_tol;
  return run;
}

// --- ground state -------------------------------------------------------------

FockGroundState exact_ground_state(const FockSystem& sys, const ModelParams& params,
                                   double alpha, double coupling_level, int max_iterations,
                                   double tol) {
  ModelParams p = params;
  p.alpha = alpha;
  p.validate();
  const CouplingEnvelope env = ConstantEnvelope{coupling_level};
  validate(env);
  const FockCoefficients coeffs = fock_coefficients(p, env, 0.0, StandardVariant{});

  const int dim = sys.dim();
  const int m_max = std::min(max_iterations, dim);
  const auto apply = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    sys.apply_hamiltonian(coeffs, {x.data(), static_cast<std::size_t>(dim)},
                          {y.data(), static_cast<std::size_t>(dim)});
  };

  // Deterministic start: vacuum-dominated (large overlap with the ground
  // state of these quadratic Hamiltonians) plus a pseudo-random component
  // that overlaps every sector.
  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v *= 0.01 / v.norm();
  v(0) += 1.0;
  v.normalize();

  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(m_max);
  std::vector<double> diag, offdiag;
  Eigen::VectorXcd w(dim);

  double theta = 0.0;
  Eigen::VectorXd ritz;
  const auto solve_tridiagonal = [&]() {
    const int m = static_cast<int>(diag.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = diag[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    theta = es.eigenvalues()(0);
    ritz = es.eigenvectors().col(0);
  };

  basis.push_back(v);
  for (int j = 0; j < m_max; ++j) {
    apply(basis[j], w);
    if (j > 0) w -= offdiag[j - 1] * basis[j - 1];
    const double a = w.dot(basis[j]).real();
    diag.push_back(a);
    w -= a * basis[j];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) w -= u.dot(w) * u;
    const double b = w.norm();
    if (b < 1e-13 || j + 1 == m_max) break;  // invariant subspace or iteration cap
    offdiag.push_back(b);
    basis.push_back(w / b);
    if ((j + 1) % 10 == 0) {
      solve_tridiagonal();
      // Residual bound from the last Ritz component.
      if (std::fabs(offdiag.back() * ritz(ritz.size() - 1)) <
          tol * std::max(1.0, std::fabs(theta)))
        break;
    }
  }
  solve_tridiagonal();

  FockGroundState gs;
  gs.iterations = static_cast<int>(diag.size());
  gs.psi = Eigen::VectorXcd::Zero(dim);
  for (int i = 0; i < ritz.size(); ++i) gs.psi += ritz(i) * basis[i];
  gs.psi.normalize();
  apply(gs.psi, w);
  gs.energy = w.dot(gs.psi).real();
  gs.residual = (w - gs.energy * gs.psi).norm();
  if (gs.residual > std::max(1e-9, 1e3 * tol))
    throw std::runtime_error("exact_ground_state: Lanczos iteration did not converge");
  return gs;
}

}  // namespace gaugeqed
