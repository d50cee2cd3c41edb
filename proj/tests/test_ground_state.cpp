#include <cmath>
#include <vector>

#include "doctest.h"

#include "gaugeqed/dynamics.hpp"
#include "gaugeqed/ground_state.hpp"
#include "gaugeqed/observables.hpp"

using namespace gaugeqed;

namespace {

// Evaluators in raw (e, m, v, omega_m) variables, used to check
// the (eta, delta) reduction against an independent parameterization.
struct RawParams {
  double e, m, v, omega, omega_m;
  double eta() const { return e / (omega * std::sqrt(m * v)); }
  double delta() const { return omega / omega_m; }
  double e2mv() const { return e * e / (m * v); }
};

double raw_alpha_g(const RawParams& r) { return r.omega_m / (r.omega_m + r.omega); }

double raw_omega_alpha(const RawParams& r, double alpha) {
  return std::sqrt(r.omega * r.omega + r.e2mv() * (1.0 - alpha) * (1.0 - alpha));
}

double raw_mutual_information(const RawParams& r, double alpha) {
  const double ag = raw_alpha_g(r);
  const double wg = raw_omega_alpha(r, ag);
  const double x2 = (r.omega / wg) * (r.omega / wg) * r.e2mv() / (r.omega * r.omega_m) *
                    (alpha - ag) * (alpha - ag);
  const double mu = std::sqrt(1.0 + x2);
  double s = (mu + 1.0) * std::log((mu + 1.0) / 2.0);
  if (mu > 1.0) s -= (mu - 1.0) * std::log((mu - 1.0) / 2.0);
  return s;
}

double raw_photon_number(const RawParams& r, double alpha) {
  const double ag = raw_alpha_g(r);
  const double wg = raw_omega_alpha(r, ag);
  const double wmg = std::sqrt(r.omega_m * r.omega_m + r.e2mv() * ag * ag);
  return (wg + r.e2mv() * (alpha - ag) * (alpha - ag) / wmg + r.omega * r.omega / wg) /
             (4.0 * r.omega) -
         0.5;
}

}  // namespace

TEST_CASE("derived frequencies") {
  SUBCASE("free limit") {
    const DerivedFrequencies f = derived_frequencies({0.5, 0.0, 0.2}, 0.2);
    CHECK(f.omega_alpha == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f.omega_mg == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("multipolar gauge leaves the cavity frequency bare") {
    const DerivedFrequencies f = derived_frequencies({0.5, 2.0, 1.0}, 1.0);
    CHECK(f.omega_alpha == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("resonant strong coupling") {
    const DerivedFrequencies f = derived_frequencies({1.0, 1.0, 0.0}, 0.0);
    CHECK(f.alpha_g == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f.omega_g == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-15));
  }
}

TEST_CASE("ground-state mutual information closed form") {
  SUBCASE("zero at the number-conserving gauge and at zero coupling") {
    CHECK(ground_state_mutual_information({0.5, 1.0, 0.0}, jc_gauge(0.5)) == 0.0);
    for (double alpha : {0.0, 0.3, 1.0})
      CHECK(ground_state_mutual_information({0.5, 0.0, alpha}, alpha) == 0.0);
  }
  SUBCASE("matches the Fock oracle and the symplectic route") {
    // Frozen 60x60 Lanczos value for delta=1/2, eta=1, alpha=0.
    const double i_fock = 0.38806471912195534;
    const ModelParams p{0.5, 1.0, 0.0};
    CHECK(ground_state_mutual_information(p, 0.0) == doctest::Approx(i_fock).epsilon(1e-9));
    CHECK(mutual_information(interacting_ground_state(p, 1.0)) ==
          doctest::Approx(i_fock).epsilon(1e-9));
  }
  SUBCASE("exactly symmetric about alpha_g") {
    const ModelParams p{0.5, 0.8, 0.0};
    const double ag = jc_gauge(0.5);
    for (double x : {0.05, 0.21, 0.33}) {
      const double plus = ground_state_mutual_information(p, ag + x);
      const double minus = ground_state_mutual_information(p, ag - x);
      CHECK(std::fabs(plus - minus) < 1e-12);
    }
  }
}

TEST_CASE("ground-state photon numbers") {
  SUBCASE("free limit vanishes") {
    CHECK(ground_state_photon_number({2.0, 0.0, 0.0}, 0.7) == 0.0);
    CHECK(ground_state_renormalized_number({2.0, 0.0, 0.0}, 0.7) == 0.0);
  }
  SUBCASE("bare number stays positive at alpha_g for strong coupling") {
    const ModelParams p{2.0, 1.0, 0.0};
    const double ag = jc_gauge(2.0);
    const DerivedFrequencies f = derived_frequencies(p, ag);
    const double expected =
        (f.omega_g + p.omega() * p.omega() / f.omega_g) / (4.0 * p.omega()) - 0.5;
    CHECK(ground_state_photon_number(p, ag) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected > 0.0);
  }
  SUBCASE("matches the exact Fock ground state at delta=2, eta=1") {
    // Frozen 60x60 Lanczos references.
    CHECK(ground_state_photon_number({2.0, 1.0, 0.0}, 0.0) ==
          doctest::Approx(0.054700196225228911).epsilon(1e-9));
    CHECK(ground_state_photon_number({2.0, 1.0, 0.0}, 1.0 / 3.0) ==
          doctest::Approx(0.0084751798731267786).epsilon(1e-9));
    CHECK(ground_state_photon_number({2.0, 1.0, 0.0}, 1.0) ==
          doctest::Approx(0.19337524528153607).epsilon(1e-9));
  }
  SUBCASE("renormalized number: zero at alpha_g, equal to bare at alpha=1") {
    const ModelParams p{0.5, 0.7, 0.0};
    CHECK(ground_state_renormalized_number(p, jc_gauge(0.5)) == 0.0);
    CHECK(ground_state_renormalized_number(p, 1.0) ==
          doctest::Approx(ground_state_photon_number(p, 1.0)).epsilon(1e-14));
    // Frozen Bogoliubov-transformed Fock reference for eta=0.1, delta=1/2.
    CHECK(ground_state_renormalized_number({0.5, 0.1, 0.0}, 0.0) ==
          doctest::Approx(0.00055737551181156073).epsilon(1e-8));
  }
}

TEST_CASE("both photon-number curves are minimized at alpha_g") {
  const ModelParams p{2.0, 1.0, 0.0};
  const double ag = jc_gauge(2.0);
  int argmin_a = -1, argmin_c = -1;
  double best_a = 1e300, best_c = 1e300;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double alpha = static_cast<double>(i) / n;
    const double na = ground_state_photon_number(p, alpha);
    const double nc = ground_state_renormalized_number(p, alpha);
    if (na < best_a) best_a = na, argmin_a = i;
    if (nc < best_c) best_c = nc, argmin_c = i;
  }
  CHECK(std::fabs(static_cast<double>(argmin_a) / n - ag) <= 1.0 / n);
  CHECK(std::fabs(static_cast<double>(argmin_c) / n - ag) <= 1.0 / n);
}

TEST_CASE("symplectic ground state reproduces all three closed forms") {
  for (double delta : {0.5, 1.0, 2.0}) {
    for (double eta : {0.3, 1.0}) {
      for (double alpha : {0.0, 0.4, 1.0}) {
        const ModelParams p{delta, eta, alpha};
        const GaussianState gs = interacting_ground_state(p, 1.0);
        CHECK(photon_number(gs, Mode::cavity) ==
              doctest::Approx(ground_state_photon_number(p, alpha)).epsilon(1e-9));
        CHECK(renormalized_photon_number(gs, p, alpha, 1.0) ==
              doctest::Approx(ground_state_renormalized_number(p, alpha)).epsilon(1e-9));
        // Mutual information of a nearly pure state carries ~1e-7 noise from
        // the symplectic-eigenvalue cancellation.
        CHECK(mutual_information(gs) ==
              doctest::Approx(ground_state_mutual_information(p, alpha)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("the (eta, delta) reduction matches raw (e, m, v) evaluation") {
  // Arbitrary consistent raw parameters, including omega_m != 1.
  const RawParams raw{0.9, 2.3, 1.7, 0.91, 1.3};
  const ModelParams p{raw.delta(), raw.eta(), 0.0};
  for (double alpha : {0.0, 0.25, 0.6, 1.0}) {
    CHECK(ground_state_mutual_information(p, alpha) ==
          doctest::Approx(raw_mutual_information(raw, alpha)).epsilon(1e-12));
    CHECK(ground_state_photon_number(p, alpha) ==
          doctest::Approx(raw_photon_number(raw, alpha)).epsilon(1e-12));
    // Frequencies scale with omega_m.
    CHECK(derived_frequencies(p, alpha).omega_alpha * raw.omega_m ==
          doctest::Approx(raw_omega_alpha(raw, alpha)).epsilon(1e-12));
  }
}
