#include "gaugeqed/symplectic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gaugeqed {

const Eigen::Matrix4d& symplectic_form() {
  static const Eigen::Matrix4d omega = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 2) = -1.0;
    return m;
  }();
  return omega;
}

Eigen::Vector2d symplectic_eigenvalues(const Eigen::Matrix4d& cov) {
  // Serafini closed form for two modes: nu^2 are the roots of
  // x^2 - Delta x + det(cov) with Delta = det A + det B + 2 det C.
  const Eigen::Matrix2d a = cov.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = cov.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = cov.block<2, 2>(0, 2);
  const double delta = a.determinant() + b.determinant() + 2.0 * c.determinant();
  const double det = cov.determinant();
  const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
  const double hi = 0.5 * (delta + disc);
  const double lo = 0.5 * (delta - disc);
  return {std::sqrt(std::max(0.0, hi)), std::sqrt(std::max(0.0, lo))};
}

double symplectic_eigenvalue(const Eigen::Matrix2d& block) {
  return std::sqrt(std::max(0.0, block.determinant()));
}

double heisenberg_min_eigenvalue(const Eigen::Matrix4d& cov) {
  Eigen::Matrix4cd m = cov.cast<std::complex<double>>();
  m += std::complex<double>(0.0, 0.5) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

namespace {

struct GeneratorSquareRoots {
  Eigen::Matrix4d half;      // G^{1/2}
  Eigen::Matrix4d inv_half;  // G^{-1/2}
};

GeneratorSquareRoots generator_square_roots(const Eigen::Matrix4d& G) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(G);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::runtime_error(
        "quadratic generator is not positive definite (dynamical instability)");
  const Eigen::Vector4d sq = es.eigenvalues().cwiseSqrt();
  GeneratorSquareRoots r;
  r.half = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
  r.inv_half =
      es.eigenvectors() * sq.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  return r;
}

}  // namespace

Eigen::Vector2d normal_mode_frequencies(const Eigen::Matrix4d& G) {
  const auto roots = generator_square_roots(G);
  // Eigenvalues of i G^{1/2} Omega G^{1/2} come in +/- d_k pairs.
  const Eigen::Matrix4d k = roots.half * symplectic_form() * roots.half;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(-k * k, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return {d(3), d(1)};  // eigenvalues ascend; pick one of each pair
}

Eigen::Matrix4d ground_state_covariance(const Eigen::Matrix4d& G) {
  // With G = S' D S (Williamson, S symplectic) the normal-mode vacuum has
  // covariance S^{-1} S^{-T} / 2 = G^{-1/2} sqrt(G^{1/2} (-Omega G Omega) G^{1/2}) G^{-1/2} / 2.
  const auto roots = generator_square_roots(G);
  const Eigen::Matrix4d& omega = symplectic_form();
  const Eigen::Matrix4d inner = roots.half * (-omega * G * omega) * roots.half;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(inner);
  const Eigen::Matrix4d inner_sqrt = es.eigenvectors() *
                                     es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                                     es.eigenvectors().transpose();
  Eigen::Matrix4d cov = 0.5 * roots.inv_half * inner_sqrt * roots.inv_half;
  return 0.5 * (cov + cov.transpose());
}

}  // namespace gaugeqed
