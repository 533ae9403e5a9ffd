#include <doctest.h>

#include <numbers>
#include <random>

#include "implode/basicaffine.hpp"
#include "implode/implosion.hpp"
#include "implode/numgeom.hpp"
#include "implode/report.hpp"

using namespace implode;

namespace {
Weight wt(std::vector<Int> coords) { return Weight(std::move(coords)); }
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("module E generators") {
  RootDatum su2 = parse_group_spec("SU(2)");
  auto e2 = module_E_spec(su2);
  REQUIRE(e2.generators.size() == 1);
  CHECK(e2.generators[0].weight == wt({1}));
  CHECK(e2.generators[0].dim == 2);

  RootDatum su3 = parse_group_spec("SU(3)");
  auto e3 = module_E_spec(su3);
  REQUIRE(e3.generators.size() == 2);
  CHECK(e3.generators[0].dim == 3);
  CHECK(e3.generators[1].dim == 3);

  RootDatum t1 = RootDatum::torus(1);
  auto et = module_E_spec(t1);
  REQUIRE(et.generators.size() == 2);
  CHECK(et.torus);
  CHECK(et.generators[0].dim == 1);
  CHECK(et.generators[0].weight.central[0] == Rational(1));
  CHECK(et.generators[1].weight.central[0] == Rational(-1));

  CHECK_THROWS(module_E_spec(parse_group_spec("SO(3)")));
  CHECK_THROWS(module_E_spec(parse_group_spec("U(2)")));
}

TEST_CASE("section coefficients") {
  RootDatum su3 = parse_group_spec("SU(3)");
  Eigen::VectorXd zero = section_coefficients(su3, wt({0, 0}));
  CHECK(zero.norm() == 0.0);

  Eigen::VectorXd pi_pairing(1);
  pi_pairing << kPi;
  Eigen::VectorXd c = section_coefficients(pi_pairing);
  CHECK(c(0) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS(section_coefficients(su3, wt({-1, 0})));

  Eigen::VectorXd vals(1);
  vals << 0.0;
  Eigen::VectorXd t = section_torus_coefficients(vals);
  CHECK(t(0) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
  CHECK(t(1) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));

  // The torus section is a section of minus the moment map: on the summand
  // pair for a character kappa the moment value is -pi(|c+|^2 - |c-|^2),
  // which must come out to -lambda(eta).
  auto rng = seeded_rng(12, "torus_section");
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd v(1);
    v << dist(rng);
    Eigen::VectorXd c = section_torus_coefficients(v);
    double moment = -kPi * (c(0) * c(0) - c(1) * c(1));
    CHECK(moment == doctest::Approx(-v(0)).epsilon(1e-12));
  }
}

TEST_CASE("embedding of T*SU(n)") {
  std::mt19937_64 rng(17);
  RootDatum su2 = parse_group_spec("SU(2)");

  SUBCASE("identity lands on the section") {
    EmbeddedPoint v = embed_su_n(Eigen::MatrixXcd::Identity(2, 2), su2, wt({2}));
    CHECK(std::abs(v.components[0](0) - std::sqrt(2.0 / kPi)) < 1e-14);
    CHECK(std::abs(v.components[0](1)) == 0.0);
  }

  SUBCASE("SU(2) embeds along the first column") {
    Eigen::MatrixXcd k = sun::random_special_unitary(2, rng);
    Weight lambda = wt({3});
    EmbeddedPoint v = embed_su_n(k, su2, lambda);
    Eigen::VectorXcd expect = std::sqrt(3.0 / kPi) * k.col(0);
    CHECK((v.components[0] - expect).norm() < 1e-13);
  }

  SUBCASE("SU(3) image satisfies the quadric") {
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXcd k = sun::random_special_unitary(3, rng);
      Eigen::VectorXd pairings(2);
      std::uniform_real_distribution<double> dist(0.0, 5.0);
      pairings << dist(rng), dist(rng);
      CHECK(su3_quadric_residual(embed_su_n(k, pairings)) < 1e-12);
    }
  }

  SUBCASE("norm identity over random dominant weights") {
    std::uniform_real_distribution<double> dist(0.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
      int n = trial % 2 == 0 ? 2 : 3;
      Eigen::VectorXd pairings(n - 1);
      for (int p = 0; p + 1 < n; ++p) pairings(p) = dist(rng);
      Eigen::MatrixXcd k = sun::random_special_unitary(n, rng);
      EmbeddedPoint v = embed_su_n(k, pairings);
      CHECK(std::abs(v.squared_norm() - pairings.sum() / kPi) < 1e-12);
    }
  }

  SUBCASE("equivariance") {
    for (int trial = 0; trial < 25; ++trial) {
      int n = trial % 2 == 0 ? 2 : 3;
      Eigen::MatrixXcd k1 = sun::random_special_unitary(n, rng);
      Eigen::MatrixXcd k2 = sun::random_special_unitary(n, rng);
      Eigen::VectorXd pairings = Eigen::VectorXd::Ones(n - 1) * 1.5;
      EmbeddedPoint lhs = embed_su_n(k1 * k2, pairings);
      EmbeddedPoint rhs = exterior_action(k1, embed_su_n(k2, pairings));
      for (std::size_t p = 0; p < lhs.components.size(); ++p)
        CHECK((lhs.components[p] - rhs.components[p]).norm() < 1e-10);
    }
  }

  SUBCASE("inequivalent points stay separated") {
    RootDatum su3 = parse_group_spec("SU(3)");
    std::uniform_int_distribution<Int> coeff(0, 3);
    int tried = 0;
    while (tried < 60) {
      int n = tried % 2 == 0 ? 2 : 3;
      const RootDatum& d = n == 2 ? su2 : su3;
      Weight lambda;
      for (int p = 0; p + 1 < n; ++p) lambda.fund.push_back(coeff(rng));
      GroupPointSUn m1{sun::random_special_unitary(n, rng), lambda};
      GroupPointSUn m2{sun::random_special_unitary(n, rng), lambda};
      if (implode_equivalent_su_n(m1, m2)) continue;
      ++tried;
      EmbeddedPoint p1 = embed_su_n(m1.k, d, lambda);
      EmbeddedPoint p2 = embed_su_n(m2.k, d, lambda);
      double gap = 0.0;
      for (std::size_t p = 0; p < p1.components.size(); ++p)
        gap += (p1.components[p] - p2.components[p]).squaredNorm();
      CHECK(std::sqrt(gap) >= 1e-6);
    }
  }

  SUBCASE("rejects non-dominant weights") {
    CHECK_THROWS(embed_su_n(Eigen::MatrixXcd::Identity(2, 2), su2, wt({-1})));
  }
}

TEST_CASE("stabilizer dimensions match the Levi formula") {
  RootDatum su3 = parse_group_spec("SU(3)");
  auto check_face = [&](const RootDatum& d, int n, std::vector<int> v,
                        Int expect) {
    StabilizerDims sd = v_sigma_stabilizer_dim(d, Face(std::move(v)), n);
    CHECK(sd.computed == expect);
    CHECK(sd.expected == expect);
    CHECK(sd.equal);
  };
  check_face(su3, 3, {}, 3);      // stabilizer of the generic section point is N
  check_face(su3, 3, {0}, 5);
  check_face(su3, 3, {1}, 5);
  check_face(su3, 3, {0, 1}, 8);  // v = 0

  RootDatum su2 = parse_group_spec("SU(2)");
  check_face(su2, 2, {}, 1);
  check_face(su2, 2, {0}, 3);

  RootDatum su4 = parse_group_spec("SU(4)");
  for (const Face& f : enumerate_faces(su4)) {
    StabilizerDims sd = v_sigma_stabilizer_dim(su4, f, 4);
    CHECK(sd.equal);
  }

  // B2 has no SU realization; the two routes to dim [P,P] must still agree:
  // Levi decomposition vs dim P minus the Levi central torus.
  RootDatum b2 = parse_group_spec("B2");
  for (const Face& f : enumerate_faces(b2)) {
    Int levi_pos = static_cast<Int>(levi_positive_roots(b2, f).size());
    Int total_pos = static_cast<Int>(b2.positive_roots().size());
    Int dim_p = b2.rank_ss() + levi_pos + (total_pos - levi_pos) + levi_pos;
    Int central = b2.rank_ss() - static_cast<Int>(f.vanishing.size());
    CHECK(parabolic_commutator_dim(b2, f) == dim_p - central);
  }
}

TEST_CASE("su3 quadric residual") {
  EmbeddedPoint v;
  v.n = 3;
  v.components.resize(2, Eigen::VectorXcd::Zero(3));

  SUBCASE("highest vectors have disjoint support") {
    v.components[0](0) = 2.0;   // w = (c, 0, 0)
    v.components[1](0) = 1.5;   // e1^e2 slot, i.e. z = (0, 0, c')
    CHECK(su3_quadric_residual(v) == 0.0);
  }

  SUBCASE("direct evaluation") {
    v.components[0](0) = 1.0;   // w = (1,0,0)
    v.components[1](2) = 1.0;   // e2^e3 slot, i.e. z = (1,0,0)
    CHECK(su3_quadric_residual(v) == doctest::Approx(1.0));
  }

  CHECK_THROWS(su3_quadric_residual(EmbeddedPoint{}));
}

TEST_CASE("ambient moments") {
  RootDatum su3 = parse_group_spec("SU(3)");

  SUBCASE("zero vector has zero moments") {
    EmbeddedPoint v;
    v.n = 3;
    v.components.resize(2, Eigen::VectorXcd::Zero(3));
    AmbientMoments m = ambient_moments(v, sun::coroot_matrix(3, 0));
    CHECK(m.k_moment == 0.0);
    CHECK(m.t_moment.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("section point has T-moment -lambda") {
    Weight lambda = wt({2, 5});
    EmbeddedPoint v = embed_su_n(Eigen::MatrixXcd::Identity(3, 3), su3, lambda);
    AmbientMoments m = ambient_moments(v, sun::coroot_matrix(3, 1));
    CHECK(std::abs(m.t_moment(0) + 2.0) < 1e-12);
    CHECK(std::abs(m.t_moment(1) + 5.0) < 1e-12);
    // K-moment along a torus direction equals -lambda(xi).
    CHECK(std::abs(m.k_moment + 5.0) < 1e-12);
  }

  SUBCASE("rejects non anti-Hermitian directions") {
    EmbeddedPoint v = embed_su_n(Eigen::MatrixXcd::Identity(3, 3), su3, wt({1, 0}));
    CHECK_THROWS(ambient_moments(v, Eigen::MatrixXcd::Identity(3, 3)));
  }
}

TEST_CASE("weight normalization of the module actions") {
  // The derived action on a highest vector v_p pairs as 2 pi i times the
  // fundamental weight: <xi . v_p, v_q> = 2 pi i varpi_p(xi) delta_pq.
  auto rng = seeded_rng(21, "weight_normalization");
  const int n = 3;
  Eigen::MatrixXcd xi = sun::random_su_element(n, rng);
  for (int p = 1; p < n; ++p) {
    EmbeddedPoint vp;
    vp.n = n;
    for (int q = 1; q < n; ++q) {
      Eigen::Index dim = static_cast<Eigen::Index>(sun::combinations(n, q).size());
      vp.components.push_back(Eigen::VectorXcd::Zero(dim));
    }
    vp.components[p - 1](0) = 1.0;
    EmbeddedPoint xv = derived_action(xi, vp);
    for (int q = 1; q < n; ++q) {
      std::complex<double> got = vp.components[q - 1].dot(xv.components[q - 1]);
      Eigen::VectorXd varpi = Eigen::VectorXd::Zero(n - 1);
      varpi(p - 1) = 1.0;
      std::complex<double> want =
          (p == q) ? std::complex<double>(0.0, 2.0 * kPi * sun::weight_eval(varpi, xi))
                   : std::complex<double>(0.0, 0.0);
      CHECK(std::abs(got - want) < 1e-12);
    }
  }
}

TEST_CASE("toric moment of highest-vector combinations") {
  // T-moment of sum_p c_p v_p is -pi sum_p |c_p|^2 varpi_p.
  auto rng = seeded_rng(22, "toric_moment");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = 3;
  for (int trial = 0; trial < 25; ++trial) {
    EmbeddedPoint v;
    v.n = n;
    Eigen::VectorXd sq(n - 1);
    for (int p = 1; p < n; ++p) {
      Eigen::Index dim = static_cast<Eigen::Index>(sun::combinations(n, p).size());
      Eigen::VectorXcd comp = Eigen::VectorXcd::Zero(dim);
      comp(0) = std::complex<double>(gauss(rng), gauss(rng));
      sq(p - 1) = std::norm(comp(0));
      v.components.push_back(comp);
    }
    AmbientMoments m = ambient_moments(v, sun::su_basis(n)[0]);
    CHECK((m.t_moment + kPi * sq).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hilbert function vs Weyl dimension") {
  auto h00 = hilbert_vs_weyl(0, 0);
  CHECK(h00.hilbert == 1);
  CHECK(h00.weyl == 1);
  CHECK(h00.equal);

  auto h11 = hilbert_vs_weyl(1, 1);
  CHECK(h11.hilbert == 8);
  CHECK(h11.equal);

  auto h21 = hilbert_vs_weyl(2, 1);
  CHECK(h21.hilbert == 15);
  CHECK(h21.weyl == 15);
  CHECK(h21.equal);

  for (Int a = 0; a <= 12; ++a)
    for (Int b = 0; b <= 12; ++b) CHECK(hilbert_vs_weyl(a, b).equal);

  CHECK_THROWS(hilbert_vs_weyl(-1, 0));
}
