#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "gaugeqed/dynamics.hpp"
#include "gaugeqed/fock.hpp"
#include "gaugeqed/observables.hpp"

using namespace gaugeqed;

namespace {

Eigen::MatrixXcd dense_from_coefficients(const FockSystem& sys, const FockCoefficients& c) {
  const int dim = sys.dim();
  Eigen::MatrixXcd h(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd col(dim);
  for (int j = 0; j < dim; ++j) {
    basis(j) = 1.0;
    sys.apply_hamiltonian(c, {basis.data(), static_cast<std::size_t>(dim)},
                          {col.data(), static_cast<std::size_t>(dim)});
    h.col(j) = col;
    basis(j) = 0.0;
  }
  return h;
}

std::vector<double> grid(double t_end, int samples) {
  std::vector<double> t(samples);
  for (int i = 0; i < samples; ++i) t[i] = t_end * i / (samples - 1);
  return t;
}

}  // namespace

TEST_CASE("banded application matches an explicit ladder-operator construction") {
  // Independent route: build single-mode ladder matrices on a padded space,
  // form every interaction term by matrix products and Kronecker indexing,
  // then cut back to the target truncation. Inside the cut the products
  // reproduce the projected infinite-space matrix elements exactly.
  const int na = 5, nb = 4, pad = 3;
  const int big_a = na + pad, big_b = nb + pad;
  const auto ladder = [](int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
  };
  const Eigen::MatrixXcd a1 = ladder(big_a), b1 = ladder(big_b);
  const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(big_a, big_a);
  const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(big_b, big_b);
  const auto kron = [&](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out(big_a * big_b, big_a * big_b);
    for (int i = 0; i < big_a; ++i)
      for (int j = 0; j < big_a; ++j)
        out.block(i * big_b, j * big_b, big_b, big_b) = x(i, j) * y;
    return out;
  };
  const Eigen::MatrixXcd A = kron(a1, ib), B = kron(ia, b1);
  const Eigen::MatrixXcd id = kron(ia, ib);
  const Complex im(0.0, 1.0);

  FockCoefficients c;
  c.omega = 0.63;
  c.c_quad_a = 0.21;
  c.c_quad_b = 0.13;
  c.u_minus = -0.37;
  c.u_plus = 0.29;
  c.kappa = 0.17;
  const Eigen::MatrixXcd xa = A.adjoint() + A;
  const Eigen::MatrixXcd xb = B.adjoint() + B;
  const Eigen::MatrixXcd big =
      c.omega * (A.adjoint() * A + 0.5 * id) + (B.adjoint() * B + 0.5 * id) +
      c.c_quad_a * xa * xa + c.c_quad_b * xb * xb +
      im * c.u_minus * (A * B.adjoint() - A.adjoint() * B) +
      im * c.u_plus * (A.adjoint() * B.adjoint() - A * B) + c.kappa * xa * xb;

  const FockSystem sys(na, nb);
  const Eigen::MatrixXcd banded = dense_from_coefficients(sys, c);
  for (int n = 0; n < na; ++n)
    for (int k = 0; k < nb; ++k)
      for (int m = 0; m < na; ++m)
        for (int l = 0; l < nb; ++l)
          CHECK(std::abs(banded(n * nb + k, m * nb + l) -
                         big(n * big_b + k, m * big_b + l)) < 1e-13);
}

TEST_CASE("free Hamiltonian has the exact oscillator spectrum") {
  const FockSystem sys(6, 5);
  const ModelParams p{0.5, 0.0, 0.3};
  const Eigen::MatrixXcd h = sys.build_hamiltonian(p, ConstantEnvelope{0.0}, 0.0,
                                                   StandardVariant{});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> expected;
  for (int n = 0; n < 6; ++n)
    for (int k = 0; k < 5; ++k) expected.push_back(0.5 * (n + 0.5) + (k + 0.5));
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < sys.dim(); ++i)
    CHECK(es.eigenvalues()(i) == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("built Hamiltonians are Hermitian for every variant") {
  const FockSystem sys(8, 7);
  const CouplingEnvelope box{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
  for (const HamiltonianVariant variant :
       {HamiltonianVariant{StandardVariant{}}, HamiltonianVariant{TildeVariant{0.9}},
        HamiltonianVariant{TildeAveragedVariant{}}}) {
    for (double t : {3.0, 5.5, 12.0}) {
      const Eigen::MatrixXcd h = sys.build_hamiltonian({0.5, 1.0, 0.3}, box, t, variant);
      CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("number-conserving exchange commutes with H0 at resonance") {
  const FockSystem sys(7, 7);
  FockCoefficients h0;
  h0.omega = 1.0;  // delta = 1
  FockCoefficients exchange;
  exchange.u_minus = 1.0;  // i(ab' - a'b)
  const Eigen::MatrixXcd h = dense_from_coefficients(sys, h0);
  const Eigen::MatrixXcd x = dense_from_coefficients(sys, exchange);
  CHECK((h * x - x * h).cwiseAbs().maxCoeff() < 1e-13);

  // Off resonance the commutator is nonzero.
  FockCoefficients h0_detuned;
  h0_detuned.omega = 0.5;
  const Eigen::MatrixXcd hd = dense_from_coefficients(sys, h0_detuned);
  CHECK((hd * x - x * hd).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("counter-rotating matrix elements vanish at the number-conserving gauge") {
  const FockSystem sys(6, 6);
  const double ag = jc_gauge(0.5);
  const Eigen::MatrixXcd h = sys.build_hamiltonian({0.5, 1.0, ag}, ConstantEnvelope{1.0}, 0.0,
                                                   StandardVariant{});
  for (int n = 0; n + 1 < 6; ++n)
    for (int k = 0; k + 1 < 6; ++k)
      CHECK(std::abs(h((n + 1) * 6 + (k + 1), n * 6 + k)) < 1e-15);
}

TEST_CASE("Lanczos ground state agrees with dense diagonalization at small dims") {
  const FockSystem sys(12, 12);
  const ModelParams p{1.7, 0.8, 0.3};
  const Eigen::MatrixXcd h = sys.build_hamiltonian(p, ConstantEnvelope{1.0}, 0.0,
                                                   StandardVariant{});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const FockGroundState gs = exact_ground_state(sys, p, 0.3);
  CHECK(gs.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-11));
  // Observables agree up to the eigenvector phase freedom.
  const Eigen::VectorXcd dense_gs = es.eigenvectors().col(0);
  CHECK(sys.number_expectation(gs.psi, 0) ==
        doctest::Approx(sys.number_expectation(dense_gs, 0)).epsilon(1e-9));
  CHECK(sys.mutual_information(gs.psi) ==
        doctest::Approx(sys.mutual_information(dense_gs)).epsilon(1e-8));
}

TEST_CASE("exact ground state limits") {
  const FockSystem sys(10, 10);
  SUBCASE("free limit is the bare vacuum") {
    const FockGroundState gs = exact_ground_state(sys, {0.5, 0.0, 0.0}, 0.0);
    CHECK(gs.energy == doctest::Approx(0.75).epsilon(1e-12));  // (omega + omega_m)/2
    CHECK(sys.number_expectation(gs.psi, 0) < 1e-12);
    CHECK(sys.number_expectation(gs.psi, 1) < 1e-12);
  }
  SUBCASE("renormalized photons vanish at alpha_g") {
    const FockSystem big(40, 40);
    const double ag = jc_gauge(0.5);
    const FockGroundState gs = exact_ground_state(big, {0.5, 1.0, ag}, ag);
    CHECK(big.renormalized_number_expectation(gs.psi, 1.0, ag) < 1e-9);
  }
}

TEST_CASE("free propagation holds the vacuum still") {
  const FockSystem sys(6, 6);
  const auto t = grid(10.0, 11);
  const OracleSeries series = propagate_state(sys, sys.vacuum(), {0.5, 0.0, 0.0},
                                              ConstantEnvelope{0.0}, StandardVariant{}, t, 200);
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    CHECK(series.n_a[i] < 1e-14);
    CHECK(series.n_b[i] < 1e-14);
    CHECK(series.mutual_information[i] < 1e-12);
  }
  CHECK(series.norm_drift < 1e-9);
}

TEST_CASE("strongly coupled propagation preserves the norm") {
  const FockSystem sys(20, 20);
  const CouplingEnvelope box{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
  const auto t = grid(24.0, 13);
  const OracleSeries series =
      propagate_state(sys, sys.vacuum(), {0.5, 1.0, 0.0}, box, StandardVariant{}, t, 800);
  CHECK(series.norm_drift < 1e-9);
  CHECK(series.n_a.back() > 0.01);  // photons survive the switch-off
}

TEST_CASE("coherent states and thermal densities") {
  const FockSystem sys(18, 14);
  SUBCASE("coherent state means") {
    const Complex amp(0.25, -0.1);
    const Eigen::VectorXcd psi = sys.coherent_state(amp, Complex(0.0, 0.0));
    CHECK(std::abs(sys.lowering_expectation(psi, 0) - amp) < 1e-12);
    CHECK(sys.number_expectation(psi, 0) == doctest::Approx(std::norm(amp)).epsilon(1e-10));
  }
  SUBCASE("truncated Gibbs product state") {
    const Eigen::MatrixXcd rho = sys.thermal_density(1.5, 1.0);
    CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) < 1e-14);
    CHECK(sys.number_expectation(rho, 0) ==
          doctest::Approx(1.0 / std::expm1(1.5)).epsilon(1e-6));
    CHECK(sys.mutual_information(rho) < 1e-12);
  }
}

TEST_CASE("density propagation: free thermal state is stationary") {
  const FockSystem sys(8, 8);
  const Eigen::MatrixXcd rho = sys.thermal_density(1.5, 1.0);
  const auto t = grid(6.0, 4);
  const OracleSeries series = propagate_density(sys, rho, {2.0, 0.0, 0.0},
                                                ConstantEnvelope{0.0}, StandardVariant{}, t, 200);
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    CHECK(series.n_a[i] == doctest::Approx(series.n_a[0]).epsilon(1e-10));
    CHECK(series.n_b[i] == doctest::Approx(series.n_b[0]).epsilon(1e-10));
  }
  CHECK(series.norm_drift < 1e-11);
}

TEST_CASE("oracle mean dynamics match the Gaussian moment path") {
  // Small coherent displacement: first moments obey the same linear flow.
  const ModelParams p{0.5, 1.0, 0.25};
  const CouplingEnvelope box{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
  const auto t = grid(16.0, 9);
  const Complex amp(0.1, 0.0);

  const FockSystem sys(24, 24);
  const OracleSeries oracle = propagate_state(sys, sys.coherent_state(amp, Complex(0.0, 0.0)),
                                              p, box, StandardVariant{}, t, 400);

  GaussianState init = vacuum_state();
  init.mean << std::sqrt(2.0) * amp.real(), std::sqrt(2.0) * amp.imag(), 0.0, 0.0;
  const TrajectoryRecord traj = evolve(init, p, box, StandardVariant{}, t, {});
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Complex gauss_a((traj.states[i].mean(0)) / std::sqrt(2.0),
                          (traj.states[i].mean(1)) / std::sqrt(2.0));
    CHECK(std::abs(gauss_a - oracle.mean_a[i]) < 1e-7);
  }
}

TEST_CASE("tilde-variant populations agree between oracle and moment paths") {
  // The motional correction enters the two paths through different operator
  // representations; their agreement pins the (a'+a)(b'+b) mapping.
  const ModelParams p{0.5, 1.0, 0.3};
  const CouplingEnvelope env{GaussianTransitEnvelope{5.0, 1.0, 1.0}};
  const HamiltonianVariant variant = TildeVariant{0.9};
  const auto t = grid(12.0, 13);

  const FockSystem sys(24, 24);
  const OracleSeries oracle =
      propagate_state(sys, sys.vacuum(), p, env, variant, t, 800);
  const TrajectoryRecord traj = evolve(vacuum_state(), p, env, variant, t, {});
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(photon_number(traj.states[i], Mode::cavity) ==
          doctest::Approx(oracle.n_a[i]).epsilon(1e-6));
    CHECK(photon_number(traj.states[i], Mode::matter) ==
          doctest::Approx(oracle.n_b[i]).epsilon(1e-6));
  }
}

TEST_CASE("randomized regimes: moment path tracks the oracle for every variant") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  for (int run = 0; run < 4; ++run) {
    const ModelParams p{uniform(1.0 / 3.0, 3.0), uniform(0.1, 1.0), uniform(0.0, 1.0)};
    CouplingEnvelope env = SmoothedBoxEnvelope{uniform(2.0, 5.0), uniform(4.0, 10.0),
                                               uniform(0.8, 2.5)};
    double t_end = 20.0;
    if (run % 2 == 1) {
      const double ratio = uniform(0.6, 2.0);
      env = GaussianTransitEnvelope{5.0 * ratio, 1.0, ratio};
      t_end = 7.0 * ratio + 2.0;
    }
    HamiltonianVariant variant = StandardVariant{};
    if (run == 2) variant = TildeVariant{uniform(0.0, 3.14159)};
    if (run == 3) variant = TildeAveragedVariant{};

    const std::vector<double> t{0.0, t_end / 3.0, 2.0 * t_end / 3.0, t_end};
    ConvergenceOptions opts;
    opts.dim_a = opts.dim_b = 16;
    opts.max_step_doublings = 4;
    const ConvergedOracleRun oracle = propagate_converged(p, env, variant, VacuumInit{}, t,
                                                          opts);
    REQUIRE(oracle.converged);
    const TrajectoryRecord traj = evolve(vacuum_state(), p, env, variant, t, {});
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(std::fabs(photon_number(traj.states[i], Mode::cavity) - oracle.series.n_a[i]) <
            1e-6);
      CHECK(std::fabs(photon_number(traj.states[i], Mode::matter) - oracle.series.n_b[i]) <
            1e-6);
      CHECK(std::fabs(mutual_information(traj.states[i]) -
                      oracle.series.mutual_information[i]) < 1e-6);
    }
  }
}

TEST_CASE("convergence gate reports failure for tiny truncations") {
  ConvergenceOptions opts;
  opts.dim_a = opts.dim_b = 4;
  opts.dim_doublings = 1;
  opts.steps_per_cycle = 200;
  opts.max_step_doublings = 1;
  const CouplingEnvelope box{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
  const std::vector<double> t{0.0, 12.0, 24.0};
  const ConvergedOracleRun run = propagate_converged({0.5, 1.0, 0.0}, box, StandardVariant{},
                                                     VacuumInit{}, t, opts);
  CHECK_FALSE(run.dim_converged);
  CHECK_FALSE(run.converged);
  CHECK(run.dim_drift > 1e-4);
}

TEST_CASE("convergence gate passes in an easy regime") {
  ConvergenceOptions opts;
  opts.dim_a = opts.dim_b = 12;
  const CouplingEnvelope box{SmoothedBoxEnvelope{5.0, 10.0, 2.3}};
  const std::vector<double> t{0.0, 6.0, 12.0, 18.0, 24.0};
  const ConvergedOracleRun run = propagate_converged({0.5, 0.3, 0.5}, box, StandardVariant{},
                                                     VacuumInit{}, t, opts);
  CHECK(run.converged);
  CHECK(run.norm_drift < 1e-9);
  CHECK(run.dim_drift < 1e-7);
}
