#include "implode/chamber.hpp"

#include <algorithm>

namespace implode {

Face::Face(std::vector<int> v) : vanishing(std::move(v)) {
  std::sort(vanishing.begin(), vanishing.end());
  vanishing.erase(std::unique(vanishing.begin(), vanishing.end()),
                  vanishing.end());
}

bool Face::contains_index(int i) const {
  return std::binary_search(vanishing.begin(), vanishing.end(), i);
}

int face_dim(const RootDatum& d, const Face& f) {
  return d.rank_ss() - static_cast<int>(f.vanishing.size()) + d.central_rank();
}

std::vector<Face> enumerate_faces(const RootDatum& d) {
  const int r = d.rank_ss();
  std::vector<Face> faces;
  faces.reserve(std::size_t(1) << r);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) v.push_back(i);
    faces.emplace_back(std::move(v));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

Face face_of(const RootDatum& d, const Weight& lambda) {
  if (static_cast<int>(lambda.fund.size()) != d.rank_ss())
    throw std::invalid_argument("face_of: rank mismatch");
  std::vector<int> v;
  for (int i = 0; i < d.rank_ss(); ++i) {
    Int p = lambda.fund[i];
    if (p < 0)
      throw std::invalid_argument("face_of: weight is not in the chamber");
    if (p == 0) v.push_back(i);
  }
  return Face(std::move(v));
}

bool face_leq(const Face& sigma, const Face& tau) {
  return std::includes(sigma.vanishing.begin(), sigma.vanishing.end(),
                       tau.vanishing.begin(), tau.vanishing.end());
}

std::vector<Face> star(const RootDatum& d, const Face& sigma) {
  std::vector<Face> out;
  for (const Face& tau : enumerate_faces(d))
    if (face_leq(sigma, tau)) out.push_back(tau);
  return out;
}

std::vector<const Root*> levi_positive_roots(const RootDatum& d,
                                             const Face& sigma) {
  std::vector<const Root*> out;
  for (const Root& alpha : d.positive_roots()) {
    bool supported = true;
    for (int i = 0; i < d.rank_ss() && supported; ++i)
      if (alpha.simple_coords(i) != 0 && !sigma.contains_index(i))
        supported = false;
    if (supported) out.push_back(&alpha);
  }
  return out;
}

std::vector<Eigen::VectorXi> levi_roots(const RootDatum& d, const Face& sigma) {
  std::vector<Eigen::VectorXi> out;
  for (const Root* alpha : levi_positive_roots(d, sigma)) {
    out.push_back(alpha->simple_coords);
    out.push_back(-alpha->simple_coords);
  }
  return out;
}

StarMembership star_membership(const RootDatum& d, const Face& sigma,
                               const Weight& lambda) {
  if (static_cast<int>(lambda.fund.size()) != d.rank_ss())
    throw std::invalid_argument("star_membership: rank mismatch");
  bool in_star = true;
  for (int i = 0; i < d.rank_ss(); ++i) {
    Int p = lambda.fund[i];
    if (sigma.contains_index(i)) {
      if (p < 0) return StarMembership::Outside;
    } else if (p <= 0) {
      in_star = false;
    }
  }
  return in_star ? StarMembership::InStar : StarMembership::InSubchamberOnly;
}

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.vanishing.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.vanishing[i]);
  }
  return s + "}";
}

}  // namespace implode
