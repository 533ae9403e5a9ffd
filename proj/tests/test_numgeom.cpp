#include <doctest.h>

#include <Eigen/Dense>
#include <numbers>

#include "implode/numgeom.hpp"

using namespace implode;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("beta evaluation") {
  Eigen::VectorXd lambda(2);
  lambda << 2.0, 3.0;

  SUBCASE("torus directions at the identity") {
    TangentSample s;
    s.k = Eigen::MatrixXcd::Identity(3, 3);
    s.lambda = lambda;
    s.mu = Eigen::VectorXd::Zero(2);
    s.xi = sun::coroot_matrix(3, 0) + 2.0 * sun::coroot_matrix(3, 1);
    CHECK(beta_eval(s) == doctest::Approx(2.0 + 2.0 * 3.0).epsilon(1e-13));
  }

  SUBCASE("off-torus directions vanish at the identity") {
    TangentSample s;
    s.k = Eigen::MatrixXcd::Identity(3, 3);
    s.lambda = lambda;
    s.mu = Eigen::VectorXd::Zero(2);
    s.xi = Eigen::MatrixXcd::Zero(3, 3);
    s.xi(0, 1) = 1.0;
    s.xi(1, 0) = -1.0;
    CHECK(beta_eval(s) == doctest::Approx(0.0));
  }

  SUBCASE("linear in lambda") {
    auto rng = seeded_rng(7, "beta_linear");
    TangentSample s;
    s.k = sun::random_special_unitary(3, rng);
    s.lambda = lambda;
    s.mu = Eigen::VectorXd::Zero(2);
    s.xi = sun::random_su_element(3, rng);
    double base = beta_eval(s);
    s.lambda = 2.5 * lambda;
    CHECK(beta_eval(s) == doctest::Approx(2.5 * base).epsilon(1e-12));
  }
}

TEST_CASE("pushforward edge cases") {
  TangentSample s;
  s.k = Eigen::MatrixXcd::Identity(2, 2);
  s.lambda = Eigen::VectorXd::Zero(1);  // wall
  s.mu = Eigen::VectorXd::Ones(1);
  s.xi = Eigen::MatrixXcd::Zero(2, 2);
  CHECK_THROWS(embedding_pushforward(s));

  TangentSample hermitian = s;
  hermitian.mu = Eigen::VectorXd::Zero(1);
  hermitian.xi = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS(embedding_pushforward(hermitian));
  CHECK_THROWS(beta_eval(hermitian));

  s.mu(0) = 0.0;  // covector vanishes along the wall direction: fine
  EmbeddedPoint v = embedding_pushforward(s);
  CHECK(v.squared_norm() == 0.0);

  // Zero tangent vector: both sides of the pullback identity vanish.
  auto rng = seeded_rng(3, "zero_tangent");
  TangentSample z;
  z.k = sun::random_special_unitary(3, rng);
  z.lambda = random_dominant_pairings(2, rng);
  z.xi = Eigen::MatrixXcd::Zero(3, 3);
  z.mu = Eigen::VectorXd::Zero(2);
  EmbeddedPoint at = embed_su_n(z.k, z.lambda);
  CHECK(beta_E(at, embedding_pushforward(z)) == 0.0);
  CHECK(beta_eval(z) == 0.0);

  // Antisymmetry of the ambient two-form.
  TangentSample w = z;
  w.xi = sun::random_su_element(3, rng);
  w.mu = Eigen::VectorXd::Ones(2);
  EmbeddedPoint u = embedding_pushforward(w);
  CHECK(omega_E(u, u) == 0.0);
}

TEST_CASE("one-form pullback identity") {
  CHECK(check_pullback_one_form(2, 42, 200) < 1e-9);
  CHECK(check_pullback_one_form(3, 42, 200) < 1e-9);
}

TEST_CASE("moment map compatibility") {
  CHECK(check_moment_compatibility(2, 42, 200) < 1e-9);
  CHECK(check_moment_compatibility(3, 42, 200) < 1e-9);
}

TEST_CASE("product-form two-form identity") {
  Eigen::VectorXd zero1 = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);
  CHECK(check_omega_product_form(2, 42, 200, zero1) < 1e-8);
  CHECK(check_omega_product_form(3, 42, 200, zero2) < 1e-8);
  CHECK(check_omega_product_form(2, 42, 200, Eigen::VectorXd::Ones(1)) < 1e-8);
  CHECK(check_omega_product_form(3, 42, 200, Eigen::VectorXd::Ones(2)) < 1e-8);
  CHECK_THROWS(check_omega_product_form(2, 42, 10, -Eigen::VectorXd::Ones(1)));
}

TEST_CASE("contact form and Reeb field") {
  SUBCASE("unit circle in C") {
    auto r = contact_reeb_check_cn(1, -0.5, 42, 100);
    CHECK(r.dnu < 1e-10);
    CHECK(r.nu < 1e-10);
  }

  SUBCASE("three-sphere in C^2 and the Hopf fibration") {
    auto r = contact_reeb_check_cn(2, -1.0, 42, 100);
    CHECK(r.dnu < 1e-10);
    CHECK(r.nu < 1e-10);
    CHECK(r.reeb < 1e-10);
  }

  SUBCASE("punctured cotangent bundle of SU(2)") {
    auto r = contact_reeb_check_tsu2(-1.0, 42, 100);
    CHECK(r.dnu < 1e-9);
    CHECK(r.nu < 1e-9);
  }

  SUBCASE("rejects zero level and empty levels") {
    CHECK_THROWS(contact_reeb_check_cn(2, 0.0, 1, 1));
    CHECK_THROWS(contact_reeb_check_cn(2, 1.0, 1, 1));
    CHECK_THROWS(contact_reeb_check_tsu2(0.0, 1, 1));
  }
}

TEST_CASE("circle action is locally free off the vertex") {
  double speed2 = s1_locally_free_check(2, 42, 100);
  CHECK(speed2 > 1e-6);
  double speed3 = s1_locally_free_check(3, 42, 100);
  CHECK(speed3 > 1e-6);

  // SU(2) speed equals 2 pi |z| at an embedded point.
  auto rng = seeded_rng(9, "speed");
  Eigen::VectorXd lambda(1);
  lambda << 2.25;
  EmbeddedPoint v = embed_su_n(sun::random_special_unitary(2, rng), lambda);
  double expect = 2.0 * kPi * std::sqrt(v.squared_norm());
  CHECK(expect == doctest::Approx(2.0 * kPi * std::sqrt(lambda.sum() / kPi)));
}

TEST_CASE("fatness of the canonical connection") {
  auto rng = seeded_rng(31, "fatness");
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
      Eigen::MatrixXd form = open_stratum_form_matrix(n, lambda);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(form);
      CHECK(svd.singularValues().minCoeff() > 1e-8);
    }
    // Moving lambda onto a wall degenerates the form on the same basis.
    Eigen::VectorXd wall = random_dominant_pairings(n - 1, rng);
    wall(0) = 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(open_stratum_form_matrix(n, wall));
    CHECK(svd.singularValues().minCoeff() < 1e-12);
  }
}

TEST_CASE("Liouville homogeneity of the cone Hamiltonian") {
  CHECK(liouville_homogeneity_residual(2, 42, 100) < 1e-12);
  CHECK(liouville_homogeneity_residual(3, 42, 100) < 1e-12);
}

TEST_CASE("checks are deterministic in the seed") {
  double a = check_pullback_one_form(3, 7, 50);
  double b = check_pullback_one_form(3, 7, 50);
  CHECK(a == b);
  auto r1 = contact_reeb_check_cn(2, -1.0, 7, 50);
  auto r2 = contact_reeb_check_cn(2, -1.0, 7, 50);
  CHECK(r1.dnu == r2.dnu);
  CHECK(r1.nu == r2.nu);
}
