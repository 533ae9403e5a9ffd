#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace implode::sun {

using Complex = std::complex<double>;

// Lexicographic p-element subsets of {0,...,n-1}; the basis order of
// Lambda^p C^n.  The highest vector e_0 ^ ... ^ e_{p-1} sits at index 0.
std::vector<std::vector<int>> combinations(int n, int p);

// Matrix of Lambda^p k on the lexicographic basis (entries are p x p minors).
Eigen::MatrixXcd exterior_power_matrix(const Eigen::MatrixXcd& k, int p);

// Derived action of xi in gl(n,C) on Lambda^p C^n.
Eigen::MatrixXcd exterior_power_derived(const Eigen::MatrixXcd& xi, int p);

// Matrix realization of the simple coroot alpha_j^vee (zero-based j) as an
// element of the exponential lattice of the diagonal torus of SU(n).
Eigen::MatrixXcd coroot_matrix(int n, int j);

// Xi = -(sum of simple coroots) as a matrix.
Eigen::MatrixXcd xi_matrix(int n);

// Diagonal t-component of an anti-Hermitian matrix, as the real vector theta
// with diag = i * theta.
Eigen::VectorXd t_component(const Eigen::MatrixXcd& xi);

// Evaluation of a weight on a Lie algebra element through its t-component.
// This is the one place that owns the 2 pi normalization: the weight lattice
// is dual to ker(exp|_t), so lambda(diag(i theta)) = sum_j a_j theta_j / 2 pi
// with a the coordinates of lambda over the coordinate weights eps_j.
// `pairings` holds the coroot pairings lambda(alpha_p^vee), p = 1..n-1.
double weight_eval(const Eigen::VectorXd& pairings, const Eigen::MatrixXcd& xi);

// Real basis of su(n): diagonal i(E_jj - E_{j+1,j+1}) and off-diagonal
// E_jk - E_kj, i(E_jk + E_kj).
std::vector<Eigen::MatrixXcd> su_basis(int n);

// Haar-ish random special unitary via Gaussian QR, and a random
// anti-Hermitian traceless matrix with Gaussian entries.
Eigen::MatrixXcd random_special_unitary(int n, std::mt19937_64& rng);
Eigen::MatrixXcd random_su_element(int n, std::mt19937_64& rng);

}  // namespace implode::sun
