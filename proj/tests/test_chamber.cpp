#include <doctest.h>

#include <random>
#include <set>

#include "implode/chamber.hpp"

using namespace implode;

namespace {
Weight wt(std::vector<Int> coords) { return Weight(std::move(coords)); }
}

TEST_CASE("face enumeration") {
  RootDatum a1 = RootDatum::simple('A', 1, Isogeny::SimplyConnected);
  auto f1 = enumerate_faces(a1);
  REQUIRE(f1.size() == 2);
  CHECK(face_dim(a1, f1[0]) == 1);  // empty vanishing set first
  CHECK(face_dim(a1, f1[1]) == 0);

  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  auto f2 = enumerate_faces(a2);
  REQUIRE(f2.size() == 4);
  std::multiset<int> dims;
  for (const Face& f : f2) dims.insert(face_dim(a2, f));
  CHECK(dims == std::multiset<int>{0, 1, 1, 2});

  RootDatum t2 = RootDatum::torus(2);
  auto ft = enumerate_faces(t2);
  REQUIRE(ft.size() == 1);
  CHECK(face_dim(t2, ft[0]) == 2);
}

TEST_CASE("face membership") {
  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  CHECK(face_of(a2, wt({1, 1})).vanishing.empty());
  CHECK(face_of(a2, wt({0, 3})).vanishing == std::vector<int>{0});
  CHECK(face_of(a2, wt({0, 0})).vanishing == std::vector<int>{0, 1});
  CHECK_THROWS(face_of(a2, wt({-1, 2})));
}

TEST_CASE("face order and stars") {
  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  Face vertex({0, 1}), wall0({0}), wall1({1}), interior({});
  for (const Face& tau : enumerate_faces(a2)) CHECK(face_leq(vertex, tau));

  auto st = star(a2, wall0);
  REQUIRE(st.size() == 2);
  CHECK(st[0] == interior);
  CHECK(st[1] == wall0);

  RootDatum a1 = RootDatum::simple('A', 1, Isogeny::SimplyConnected);
  int pairs = 0;
  for (const Face& s : enumerate_faces(a1))
    for (const Face& t : enumerate_faces(a1))
      if (face_leq(s, t)) ++pairs;
  CHECK(pairs == 3);
}

TEST_CASE("order isomorphism with subset order, reversed") {
  RootDatum a3 = RootDatum::simple('A', 3, Isogeny::SimplyConnected);
  auto faces = enumerate_faces(a3);
  CHECK(faces.size() == 8);
  for (const Face& s : faces)
    for (const Face& t : faces) {
      bool subset = std::includes(s.vanishing.begin(), s.vanishing.end(),
                                  t.vanishing.begin(), t.vanishing.end());
      CHECK(face_leq(s, t) == subset);
      if (face_leq(s, t) && !(s == t))
        CHECK(face_dim(a3, s) < face_dim(a3, t));
    }
}

TEST_CASE("levi root subsystems") {
  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  auto r1 = levi_roots(a2, Face({0}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == -r1[1]);
  CHECK(levi_roots(a2, Face({0, 1})).size() == 6);
  CHECK(levi_roots(a2, Face({})).empty());

  // S_sigma = R_sigma intersect S.
  for (const Face& f : enumerate_faces(a2)) {
    auto pos = levi_positive_roots(a2, f);
    std::vector<int> simple;
    for (const Root* alpha : pos)
      if (alpha->simple_coords.sum() == 1)
        for (int i = 0; i < a2.rank_ss(); ++i)
          if (alpha->simple_coords(i) == 1) simple.push_back(i);
    std::sort(simple.begin(), simple.end());
    CHECK(simple == f.vanishing);
  }

  RootDatum b2 = RootDatum::simple('B', 2, Isogeny::SimplyConnected);
  REQUIRE(b2.symmetrizers()[0] == 2);  // alpha_1 is the long simple root
  auto rb = levi_roots(b2, Face({0}));
  REQUIRE(rb.size() == 2);
  Eigen::VectorXi alpha1(2);
  alpha1 << 1, 0;
  CHECK((rb[0] == alpha1 || rb[1] == alpha1));
}

TEST_CASE("star membership sign tests") {
  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  Face sigma({0});
  CHECK(star_membership(a2, sigma, wt({0, 1})) == StarMembership::InStar);
  CHECK(star_membership(a2, sigma, wt({1, 1})) == StarMembership::InStar);
  // (1,0) sits on the alpha_2 wall, which is not above sigma = {alpha_1}.
  CHECK(star_membership(a2, sigma, wt({1, 0})) ==
        StarMembership::InSubchamberOnly);
  CHECK(star_membership(a2, sigma, wt({-1, 2})) == StarMembership::Outside);
  CHECK(star_membership(a2, sigma, wt({1, -1})) ==
        StarMembership::InSubchamberOnly);
  CHECK(star_membership(a2, sigma, wt({0, 0})) ==
        StarMembership::InSubchamberOnly);
}

TEST_CASE("star membership matches the face order for dominant weights") {
  RootDatum b2 = RootDatum::simple('B', 2, Isogeny::SimplyConnected);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> dist(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Weight lambda;
    for (int i = 0; i < b2.rank_ss(); ++i) lambda.fund.push_back(dist(rng));
    Face flam = face_of(b2, lambda);
    for (const Face& sigma : enumerate_faces(b2)) {
      bool in_star = star_membership(b2, sigma, lambda) == StarMembership::InStar;
      CHECK(in_star == face_leq(sigma, flam));
    }
  }
}
