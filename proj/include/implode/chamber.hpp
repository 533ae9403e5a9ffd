#pragma once

#include "implode/rootdata.hpp"

namespace implode {

// An open face of the fundamental Weyl chamber, identified with the set of
// simple roots vanishing on it.
struct Face {
  std::vector<int> vanishing;  // sorted, zero-based simple-root indices

  Face() = default;
  explicit Face(std::vector<int> v);
  Face(std::initializer_list<int> v) : Face(std::vector<int>(v)) {}

  bool contains_index(int i) const;
  bool operator==(const Face& o) const { return vanishing == o.vanishing; }
  bool operator<(const Face& o) const { return vanishing < o.vanishing; }
};

int face_dim(const RootDatum& d, const Face& f);

// All 2^rank_ss faces, ordered lexicographically by vanishing set.
std::vector<Face> enumerate_faces(const RootDatum& d);

// The unique face whose vanishing set is { i : <lambda, alpha_i^vee> = 0 }.
// Throws if lambda is not in the chamber.
Face face_of(const RootDatum& d, const Weight& lambda);

// sigma <= tau iff sigma lies in the closure of tau iff S_tau is a subset of
// S_sigma.
bool face_leq(const Face& sigma, const Face& tau);

// Open star of sigma: all faces tau >= sigma.
std::vector<Face> star(const RootDatum& d, const Face& sigma);

// Levi root subsystem R_sigma: the roots vanishing on sigma, i.e. those in
// the integer span of S_sigma.  Returned as signed simple-root coordinate
// vectors (both alpha and -alpha).
std::vector<Eigen::VectorXi> levi_roots(const RootDatum& d, const Face& sigma);

// Positive Levi roots only.
std::vector<const Root*> levi_positive_roots(const RootDatum& d,
                                             const Face& sigma);

enum class StarMembership { InStar, InSubchamberOnly, Outside };

// Sign classification of lambda against the subchamber of sigma:
//   in-star:            >= 0 on S_sigma and > 0 on S minus S_sigma
//   in-subchamber-only: >= 0 on S_sigma but not in the star
//   outside:            < 0 somewhere on S_sigma
StarMembership star_membership(const RootDatum& d, const Face& sigma,
                               const Weight& lambda);

std::string face_str(const Face& f);

}  // namespace implode
