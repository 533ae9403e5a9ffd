#pragma once

#include "implode/chamber.hpp"

namespace implode {

// Virtual K-representation: dominant highest weights with integer (possibly
// negative) multiplicities.  Zero entries are never stored.
using VirtualRep = std::map<Weight, Int>;

// Virtual T-character: arbitrary weights with integer multiplicities.
using TCharacter = std::map<Weight, Int>;

using Partition = std::vector<Int>;  // weakly decreasing, nonnegative

// Tensor product decomposition by the Klimyk rule over the full weight
// diagram of mu.
VirtualRep tensor_decompose(const RootDatum& d, const Weight& lambda,
                            const Weight& mu);

// Littlewood-Richardson coefficients for GL(n) partitions, by enumeration of
// lattice skew tableaux.  Independent oracle for the type A tensor rule.
std::map<Partition, Int> lr_coefficients_type_a(int n, const Partition& lambda,
                                                const Partition& mu);

// Dominant SU(n) weight of a partition with at most n rows.
Weight partition_to_weight(int n, const Partition& p);

// The space of N-invariants: V_lambda contributes its highest weight line.
TCharacter n_invariants(const VirtualRep& v);

// Holomorphic induction by the rho-shifted dot action: dominant lambda maps
// to +V_lambda, singular lambda + rho to zero, the rest to a signed V.
VirtualRep holomorphic_induct(const RootDatum& d, const TCharacter& t);

// T-character of the imploded quantization of a product of coadjoint orbits
// K.lambda_1 x ... x K.lambda_m.
TCharacter rr_implosion(const RootDatum& d,
                        const std::vector<Weight>& orbit_labels);

// Points of the list lying in the cut cone lambda0 + closure(tau).
std::vector<Weight> cut_polytope(const RootDatum& d,
                                 const std::vector<Weight>& points,
                                 const Weight& lambda0, const Face& tau);

}  // namespace implode
