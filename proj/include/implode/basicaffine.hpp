#pragma once

#include "implode/chamber.hpp"
#include "implode/sun.hpp"

namespace implode {

// The module E = (+)_p V_p carrying the affine model of the universal
// imploded cross-section.  For simply connected semisimple data the
// generators are the fundamental weights; for a torus the paired characters
// +-kappa_i.
struct ModuleESpec {
  struct Generator {
    Weight weight;
    Int dim = 1;
  };
  std::vector<Generator> generators;
  bool torus = false;
};

ModuleESpec module_E_spec(const RootDatum& d);

// Coefficients of the highest-weight section s(lambda) on the vectors v_p:
// sqrt(lambda(alpha_p^vee) / pi).  `pairings` may be any nonnegative reals.
Eigen::VectorXd section_coefficients(const Eigen::VectorXd& pairings);
Eigen::VectorXd section_coefficients(const RootDatum& d, const Weight& lambda);

// Torus section coefficients: per character pair, (chi(t), 1/chi(t)) scaled
// by 1/sqrt(2 pi), with chi(t) = sqrt(t + sqrt(t^2 + 1)).
Eigen::VectorXd section_torus_coefficients(const Eigen::VectorXd& values);

// A point of E for K = SU(n): one coefficient vector per exterior power
// Lambda^p C^n, p = 1..n-1, in the lexicographic combination basis.
struct EmbeddedPoint {
  int n = 0;
  std::vector<Eigen::VectorXcd> components;

  double squared_norm() const;
  Eigen::VectorXcd flatten() const;
};

// k . s(lambda) via the exterior-power action on each summand.
EmbeddedPoint embed_su_n(const Eigen::MatrixXcd& k,
                         const Eigen::VectorXd& pairings);
EmbeddedPoint embed_su_n(const Eigen::MatrixXcd& k, const RootDatum& d,
                         const Weight& lambda);

// Group and Lie-algebra actions on embedded points.
EmbeddedPoint exterior_action(const Eigen::MatrixXcd& k,
                              const EmbeddedPoint& v);
EmbeddedPoint derived_action(const Eigen::MatrixXcd& xi,
                             const EmbeddedPoint& v);

std::complex<double> inner(const EmbeddedPoint& a, const EmbeddedPoint& b);

struct StabilizerDims {
  Int computed = 0;
  Int expected = 0;
  bool equal = false;
};

// Complex nullity of xi -> xi . v_sigma on sl(n,C) against the Levi formula
// for dim [P_sigma, P_sigma].
StabilizerDims v_sigma_stabilizer_dim(const RootDatum& d, const Face& sigma,
                                      int n);

// |sum_k w_k z_k| for a point of C^3 x Lambda^2 C^3, with z read through the
// signed-minor convention z_k = (-1)^{k+1} c_{ij}, {i,j,k} = {1,2,3}, i < j.
double su3_quadric_residual(const EmbeddedPoint& v);

// Quadratic moments of an ambient point: the K-moment paired with xi and the
// T-moment in fundamental-weight coordinates.
struct AmbientMoments {
  double k_moment = 0.0;
  Eigen::VectorXd t_moment;
};
AmbientMoments ambient_moments(const EmbeddedPoint& v,
                               const Eigen::MatrixXcd& xi);

struct HilbertCheck {
  Int hilbert = 0;
  Int weyl = 0;
  bool equal = false;
};

// Bigraded Hilbert function of C[w,z]/(sum w_k z_k) against the Weyl
// dimension of the SU(3) module V_{(a,b)}.
HilbertCheck hilbert_vs_weyl(Int a, Int b);

}  // namespace implode
