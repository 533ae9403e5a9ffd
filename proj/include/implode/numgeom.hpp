#pragma once

#include <cstdint>

#include "implode/basicaffine.hpp"

namespace implode {

// A tangent sample on T*SU(n) in left trivialization.  The group direction
// xi generates the left-multiplication flow t -> exp(t xi) k and mu is a
// covector in the face's central directions, stored by coroot pairings.
struct TangentSample {
  Eigen::MatrixXcd k;
  Eigen::VectorXd lambda;  // coroot pairings, dominant
  Eigen::MatrixXcd xi;     // anti-Hermitian traceless
  Eigen::VectorXd mu;      // coroot pairings of the covector
};

// Canonical one-form at the sample: lambda(Ad(k^{-1}) xi) through the weight
// pairing (the t-projection of the transported generator).
double beta_eval(const TangentSample& s);

// Pushforward of the equivariant extension of the (lambda0-shifted) section:
// xi_E(F(k,lambda)) + k . sum_p mu_p / (2 sqrt(pi (lambda-lambda0)_p)) v_p.
EmbeddedPoint embedding_pushforward(const TangentSample& s,
                                    const Eigen::VectorXd& lambda0);
EmbeddedPoint embedding_pushforward(const TangentSample& s);

// beta_E and omega_E on the ambient module.
double beta_E(const EmbeddedPoint& at, const EmbeddedPoint& along);
double omega_E(const EmbeddedPoint& u, const EmbeddedPoint& w);

// Seeded residual checks; each returns the max residual over `count` samples.
double check_pullback_one_form(int n, std::uint64_t seed, int count);
double check_moment_compatibility(int n, std::uint64_t seed, int count);
double check_omega_product_form(int n, std::uint64_t seed, int count,
                                const Eigen::VectorXd& lambda0);

struct ContactResiduals {
  double dnu = 0.0;   // max |omega(Xi, level tangent)|
  double nu = 0.0;    // max |beta(-c^{-1} Xi) - 1|
  double reeb = 0.0;  // Reeb vector deviation from the circle fibre direction
};

// Contact form and Reeb field residuals on level sets of the cone
// Hamiltonian, for C^n with the standard Liouville structure and for the
// punctured cotangent bundle of SU(2) with Xi = -(sum of simple coroots).
ContactResiduals contact_reeb_check_cn(int n, double c, std::uint64_t seed,
                                       int count);
ContactResiduals contact_reeb_check_tsu2(double c, std::uint64_t seed,
                                         int count);

// Minimum speed of the circle action generated by Xi at embedded points
// sampled off the vertex.
double s1_locally_free_check(int n, std::uint64_t seed, int count);

// Matrix of the product-form two-form on the open-stratum tangent basis at
// (1, lambda): su(n) directions followed by the chamber directions.
Eigen::MatrixXd open_stratum_form_matrix(int n, const Eigen::VectorXd& lambda);

// |phi(A_t(k,lambda)) - t phi(k,lambda)| for the explicit Hamiltonian
// phi(k,lambda) = lambda(Xi).
double liouville_homogeneity_residual(int n, std::uint64_t seed, int count);

// Random sampling helpers shared by the checks and the test suites.
Eigen::VectorXd random_dominant_pairings(int rank, std::mt19937_64& rng);
std::mt19937_64 seeded_rng(std::uint64_t seed, const char* stream_name);

}  // namespace implode
