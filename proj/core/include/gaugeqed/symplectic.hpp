#ifndef GAUGEQED_SYMPLECTIC_HPP
#define GAUGEQED_SYMPLECTIC_HPP

#include <Eigen/Dense>

// Symplectic linear algebra for the two-mode quadrature ordering
// r = (x_c, p_c, x_m, p_m) with a = (x + i p)/sqrt(2), so the vacuum
// covariance is I/2 and symplectic eigenvalues of physical states are >= 1/2.

namespace gaugeqed {

// Mode-block symplectic form [[0,1],[-1,0]] (+) [[0,1],[-1,0]].
const Eigen::Matrix4d& symplectic_form();

// Symplectic eigenvalues of a two-mode covariance matrix, descending order.
Eigen::Vector2d symplectic_eigenvalues(const Eigen::Matrix4d& cov);

// Symplectic eigenvalue of a one-mode covariance block: sqrt(det).
double symplectic_eigenvalue(const Eigen::Matrix2d& block);

// Smallest eigenvalue of the Hermitian matrix cov + (i/2) Omega; physical
// states give values >= 0 up to numerical noise.
double heisenberg_min_eigenvalue(const Eigen::Matrix4d& cov);

// Normal-mode frequencies of the quadratic Hamiltonian H = r'Gr/2 for
// positive definite G (the symplectic eigenvalues of G), descending order.
// Throws std::runtime_error when G is not positive definite (dynamical
// instability: no normal-mode ground state exists).
Eigen::Vector2d normal_mode_frequencies(const Eigen::Matrix4d& G);

// Ground-state covariance of H = r'Gr/2 for positive definite G, via the
// Williamson normal-mode construction. Throws on non-positive-definite G.
Eigen::Matrix4d ground_state_covariance(const Eigen::Matrix4d& G);

}  // namespace gaugeqed

#endif
