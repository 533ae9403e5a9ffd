#pragma once

#include <Eigen/Dense>
#include <complex>

#include "implode/chamber.hpp"

namespace implode {

enum class SmoothClass { Smooth, OrbifoldOnly, Singular };

struct Smoothness {
  SmoothClass cls = SmoothClass::Singular;
  int k = 0;       // number of SL(2) factors when class is Smooth/OrbifoldOnly
  Int order = 1;   // Levi fundamental group order when class is OrbifoldOnly
  bool operator==(const Smoothness& o) const {
    return cls == o.cls && k == o.k && order == o.order;
  }
};

// One stratum of the universal imploded cross-section, indexed by a chamber
// face.  real_dim = dim K - dim [K_sigma, K_sigma] + dim sigma; the orbit
// label records G/[P_sigma, P_sigma] with the complex dimension of the
// stabilizer [P_sigma, P_sigma].
struct Stratum {
  Face face;
  Int real_dim = 0;
  std::string orbit_type;
  Int stabilizer_complex_dim = 0;
  Smoothness smoothness;
  std::vector<Face> closure_preds;  // all faces <= this one
};

std::vector<Stratum> universal_strata(const RootDatum& d);

Smoothness classify_smoothness(const RootDatum& d, const Face& sigma);

// Complex dimension of [P_sigma, P_sigma] from the Levi decomposition:
// (|R_sigma| + |S_sigma|) + |R_+ \ R_{+,sigma}|.
Int parabolic_commutator_dim(const RootDatum& d, const Face& sigma);

// A point of T*SU(n) in left trivialization: a special unitary matrix and a
// dominant weight.
struct GroupPointSUn {
  Eigen::MatrixXcd k;
  Weight lambda;
};

// Membership test for the implosion equivalence on T*SU(n): lambda values
// agree and k2 k1^{-1} lies in the block-diagonal commutator subgroup
// [K_sigma, K_sigma] of the face of lambda.
bool implode_equivalent_su_n(const GroupPointSUn& m1, const GroupPointSUn& m2,
                             double tol = 1e-9);

// Maximal runs of consecutive indices in the vanishing set of an A-series
// face, returned as (first row, block size) pairs; a run {i,...,j} spans the
// unitary block of rows i..j+1.
std::vector<std::pair<int, int>> levi_blocks_su_n(const Face& sigma, int n);

// Open-stratum test for U(n) acting diagonally on C^{n x p}: rows pairwise
// orthogonal and row norms strictly decreasing.
bool principal_stratum_membership_unp(const Eigen::MatrixXcd& x,
                                      double tol = 1e-9,
                                      double margin = 1e-12);

// lambda(Xi) for Xi = -(sum of simple coroots); always <= 0 on the chamber,
// zero only at the vertex.  Requires a semisimple datum.
Rational cone_height(const RootDatum& d, const Weight& lambda);

}  // namespace implode
