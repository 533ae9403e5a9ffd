#include "implode/numgeom.hpp"

#include <cmath>
#include <numbers>

namespace implode {

namespace {

using sun::Complex;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 14695981039346656037ull;
  for (; *s; ++s) {
    h ^= static_cast<std::uint64_t>(*s);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::mt19937_64 seeded_rng(std::uint64_t seed, const char* stream_name) {
  return std::mt19937_64(seed ^ fnv1a(stream_name));
}

Eigen::VectorXd random_dominant_pairings(int rank, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.25, 4.0);
  Eigen::VectorXd p(rank);
  for (int i = 0; i < rank; ++i) p(i) = dist(rng);
  return p;
}

namespace {

void validate_sample(const TangentSample& s) {
  if ((s.xi + s.xi.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("tangent sample: xi is not anti-Hermitian");
  for (Eigen::Index p = 0; p < s.lambda.size(); ++p)
    if (s.lambda(p) < 0.0)
      throw std::invalid_argument("tangent sample: weight is not dominant");
}

}  // namespace

double beta_eval(const TangentSample& s) {
  validate_sample(s);
  Eigen::MatrixXcd transported = s.k.adjoint() * s.xi * s.k;
  return sun::weight_eval(s.lambda, transported);
}

EmbeddedPoint embedding_pushforward(const TangentSample& s,
                                    const Eigen::VectorXd& lambda0) {
  validate_sample(s);
  const int n = static_cast<int>(s.k.rows());
  Eigen::VectorXd shifted = s.lambda - lambda0;
  EmbeddedPoint base = embed_su_n(s.k, shifted);
  EmbeddedPoint out = derived_action(s.xi, base);
  for (int p = 0; p + 1 < n; ++p) {
    if (shifted(p) <= 0.0) {
      if (s.mu(p) != 0.0)
        throw std::invalid_argument(
            "embedding_pushforward: covector has a component along a "
            "vanishing chamber direction");
      continue;
    }
    double coeff = s.mu(p) / (2.0 * std::sqrt(std::numbers::pi * shifted(p)));
    // d/dt of the section coefficient lands on the highest vector of
    // Lambda^{p+1} C^n, then gets translated by k.
    Eigen::MatrixXcd kp = sun::exterior_power_matrix(s.k, p + 1);
    out.components[p] += coeff * kp.col(0);
  }
  return out;
}

EmbeddedPoint embedding_pushforward(const TangentSample& s) {
  return embedding_pushforward(s, Eigen::VectorXd::Zero(s.lambda.size()));
}

double beta_E(const EmbeddedPoint& at, const EmbeddedPoint& along) {
  return -0.5 * std::imag(inner(at, along));
}

double omega_E(const EmbeddedPoint& u, const EmbeddedPoint& w) {
  return -std::imag(inner(u, w));
}

namespace {

TangentSample random_sample(int n, std::mt19937_64& rng) {
  TangentSample s;
  s.k = sun::random_special_unitary(n, rng);
  s.lambda = random_dominant_pairings(n - 1, rng);
  s.xi = sun::random_su_element(n, rng);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  s.mu.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) s.mu(i) = dist(rng);
  return s;
}

}  // namespace

double check_pullback_one_form(int n, std::uint64_t seed, int count) {
  auto rng = seeded_rng(seed, "pullback_one_form");
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    TangentSample s = random_sample(n, rng);
    EmbeddedPoint at = embed_su_n(s.k, s.lambda);
    EmbeddedPoint push = embedding_pushforward(s);
    double lhs = beta_E(at, push);
    worst = std::max(worst, std::abs(lhs - beta_eval(s)));
  }
  return worst;
}

double check_moment_compatibility(int n, std::uint64_t seed, int count) {
  auto rng = seeded_rng(seed, "moment_compatibility");
  auto basis = sun::su_basis(n);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    TangentSample s = random_sample(n, rng);
    EmbeddedPoint at = embed_su_n(s.k, s.lambda);
    for (const auto& xi : basis) {
      EmbeddedPoint xv = derived_action(xi, at);
      double moment = -0.5 * std::imag(inner(xv, at));
      double coadjoint = sun::weight_eval(s.lambda, s.k.adjoint() * xi * s.k);
      worst = std::max(worst, std::abs(moment + coadjoint));
    }
  }
  return worst;
}

double check_omega_product_form(int n, std::uint64_t seed, int count,
                                const Eigen::VectorXd& lambda0) {
  if (lambda0.size() != n - 1)
    throw std::invalid_argument("check_omega_product_form: lambda0 size");
  if (!lambda0.isZero())
    for (int p = 0; p + 1 < n; ++p)
      if (lambda0(p) <= 0.0)
        throw std::invalid_argument(
            "check_omega_product_form: lambda0 must be strictly dominant or "
            "zero");
  auto rng = seeded_rng(seed, "omega_product_form");
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    TangentSample s1 = random_sample(n, rng);
    s1.lambda += lambda0;  // keep lambda - lambda0 in the open chamber
    TangentSample s2 = s1;
    s2.xi = sun::random_su_element(n, rng);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int p = 0; p + 1 < n; ++p) s2.mu(p) = dist(rng);

    EmbeddedPoint u1 = embedding_pushforward(s1, lambda0);
    EmbeddedPoint u2 = embedding_pushforward(s2, lambda0);
    Eigen::MatrixXcd t1 = s1.k.adjoint() * s1.xi * s1.k;
    Eigen::MatrixXcd t2 = s1.k.adjoint() * s2.xi * s1.k;
    Eigen::MatrixXcd bracket = t1 * t2 - t2 * t1;

    double lhs = omega_E(u1, u2) - sun::weight_eval(lambda0, bracket);
    double rhs = sun::weight_eval(s1.mu, t2) - sun::weight_eval(s2.mu, t1) -
                 sun::weight_eval(s1.lambda, bracket);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ContactResiduals contact_reeb_check_cn(int n, double c, std::uint64_t seed,
                                       int count) {
  if (c == 0.0)
    throw std::invalid_argument("contact_reeb_check: c must be nonzero");
  if (c > 0.0)
    throw std::invalid_argument(
        "contact_reeb_check: the level set of phi = -|z|^2/2 is empty for "
        "positive c");
  auto rng = seeded_rng(seed, "contact_cn");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double radius = std::sqrt(-2.0 * c);
  ContactResiduals out;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXcd z(n);
    for (int j = 0; j < n; ++j) z(j) = Complex(gauss(rng), gauss(rng));
    z *= radius / z.norm();

    Eigen::VectorXcd xi = Complex(0, 1) * z;  // circle action generator
    // Level tangent: remove the d phi direction, Re<z, v> = 0.
    Eigen::VectorXcd w(n);
    for (int j = 0; j < n; ++j) w(j) = Complex(gauss(rng), gauss(rng));
    double proj = 0.0;
    for (int j = 0; j < n; ++j) proj += std::real(z(j) * std::conj(w(j)));
    Eigen::VectorXcd v = w - (proj / z.squaredNorm()) * z;
    v /= v.norm();

    // omega(xi, v) = -Im <xi, v> with the first slot linear.
    Complex ip = 0.0;
    for (int j = 0; j < n; ++j) ip += xi(j) * std::conj(v(j));
    double dnu = -std::imag(ip);
    out.dnu = std::max(out.dnu, std::abs(dnu));

    // beta(-c^{-1} xi) at z: -(1/2) Im <z, -c^{-1} xi>.
    Complex zxi = 0.0;
    for (int j = 0; j < n; ++j) zxi += z(j) * std::conj(xi(j));
    double nu = -0.5 * std::imag(-zxi / c);
    out.nu = std::max(out.nu, std::abs(nu - 1.0));

    // Reeb vector against the circle fibre direction at z.
    Eigen::VectorXcd reeb = -xi / c;
    Eigen::VectorXcd fibre = Complex(0, 1) * z;
    double along = 0.0;
    for (int j = 0; j < n; ++j)
      along += std::real(reeb(j) * std::conj(fibre(j)));
    Eigen::VectorXcd off = reeb - (along / fibre.squaredNorm()) * fibre;
    out.reeb = std::max(out.reeb, off.norm());
  }
  return out;
}

namespace {

// Trace pairing between su(2)* matrices and su(2), normalized so that the
// matrix pi * diag(i,-i) represents the fundamental weight.
double trace_pairing(const Eigen::MatrixXcd& functional,
                     const Eigen::MatrixXcd& xi) {
  return -std::real((functional * xi).trace()) / (kTwoPi * kTwoPi);
}

}  // namespace

ContactResiduals contact_reeb_check_tsu2(double c, std::uint64_t seed,
                                         int count) {
  if (c == 0.0)
    throw std::invalid_argument("contact_reeb_check: c must be nonzero");
  auto rng = seeded_rng(seed, "contact_tsu2");
  const int n = 2;
  const Eigen::MatrixXcd big_xi = sun::xi_matrix(n);
  ContactResiduals out;
  for (int i = 0; i < count; ++i) {
    // Covector L with lambda(Xi) = c.
    Eigen::MatrixXcd ell;
    double height = 0.0;
    do {
      ell = sun::random_su_element(n, rng);
      height = trace_pairing(ell, big_xi);
    } while (std::abs(height) < 0.1);
    ell *= c / height;

    // Induced vector field of the right torus action at (k, lambda).
    Eigen::MatrixXcd xi_group = -big_xi;
    Eigen::MatrixXcd xi_covector = big_xi * ell - ell * big_xi;

    // Level tangent (xi, M) with M(Xi) = 0.
    Eigen::MatrixXcd xi = sun::random_su_element(n, rng);
    Eigen::MatrixXcd m = sun::random_su_element(n, rng);
    m -= (trace_pairing(m, big_xi) / trace_pairing(big_xi, big_xi)) * big_xi;

    auto omega = [&](const Eigen::MatrixXcd& a_group,
                     const Eigen::MatrixXcd& a_cov,
                     const Eigen::MatrixXcd& b_group,
                     const Eigen::MatrixXcd& b_cov) {
      Eigen::MatrixXcd bracket = a_group * b_group - b_group * a_group;
      return trace_pairing(a_cov, b_group) - trace_pairing(b_cov, a_group) -
             trace_pairing(ell, bracket);
    };
    double dnu = omega(xi_group, xi_covector, xi, m);
    out.dnu = std::max(out.dnu, std::abs(dnu));

    double nu = trace_pairing(ell, xi_group) / (-c);
    out.nu = std::max(out.nu, std::abs(nu - 1.0));
  }
  return out;
}

double s1_locally_free_check(int n, std::uint64_t seed, int count) {
  auto rng = seeded_rng(seed, "s1_locally_free");
  double slowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXcd k = sun::random_special_unitary(n, rng);
    Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
    if (lambda.isZero())
      throw std::invalid_argument("s1_locally_free_check: vertex sample");
    EmbeddedPoint v = embed_su_n(k, lambda);
    // Xi generates the standard circle action with period one, so the action
    // vector at v is 2 pi i v.
    slowest = std::min(slowest, kTwoPi * std::sqrt(v.squared_norm()));
  }
  return slowest;
}

Eigen::MatrixXd open_stratum_form_matrix(int n, const Eigen::VectorXd& lambda) {
  auto basis = sun::su_basis(n);
  const int r = n - 1;
  const int dim = static_cast<int>(basis.size()) + r;
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(dim, dim);
  const int nb = static_cast<int>(basis.size());
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      Eigen::MatrixXcd bracket = basis[a] * basis[b] - basis[b] * basis[a];
      form(a, b) = -sun::weight_eval(lambda, bracket);
    }
  for (int p = 0; p < r; ++p) {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(r);
    mu(p) = 1.0;
    for (int b = 0; b < nb; ++b) {
      double val = sun::weight_eval(mu, basis[b]);
      form(nb + p, b) = val;   // mu in the first slot
      form(b, nb + p) = -val;  // antisymmetry
    }
  }
  return form;
}

double liouville_homogeneity_residual(int n, std::uint64_t seed, int count) {
  auto rng = seeded_rng(seed, "liouville");
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
    double t = scale(rng);
    double phi = -lambda.sum();
    double phi_scaled = -(t * lambda).sum();
    worst = std::max(worst, std::abs(phi_scaled - t * phi));
  }
  return worst;
}

}  // namespace implode
