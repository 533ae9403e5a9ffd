#include "implode/basicaffine.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "implode/implosion.hpp"

namespace implode {

ModuleESpec module_E_spec(const RootDatum& d) {
  ModuleESpec spec;
  if (d.is_torus()) {
    spec.torus = true;
    for (int i = 0; i < d.central_rank(); ++i) {
      Weight plus, minus;
      plus.central.assign(d.central_rank(), Rational(0));
      minus.central.assign(d.central_rank(), Rational(0));
      plus.central[i] = Rational(1);
      minus.central[i] = Rational(-1);
      spec.generators.push_back({plus, 1});
      spec.generators.push_back({minus, 1});
    }
    return spec;
  }
  if (!d.is_simply_connected_semisimple())
    throw std::invalid_argument(
        "module_E_spec: datum must be simply connected semisimple or a torus");
  for (int p = 0; p < d.rank_ss(); ++p) {
    Weight w;
    w.fund.assign(d.rank_ss(), 0);
    w.fund[p] = 1;
    spec.generators.push_back({w, d.weyl_dimension(w)});
  }
  return spec;
}

Eigen::VectorXd section_coefficients(const Eigen::VectorXd& pairings) {
  Eigen::VectorXd c(pairings.size());
  for (Eigen::Index p = 0; p < pairings.size(); ++p) {
    if (pairings(p) < 0)
      throw std::invalid_argument("section: weight is not dominant");
    c(p) = std::sqrt(pairings(p) / std::numbers::pi);
  }
  return c;
}

Eigen::VectorXd section_coefficients(const RootDatum& d,
                                     const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("section: weight is not dominant");
  Eigen::VectorXd pairings(d.rank_ss());
  for (int p = 0; p < d.rank_ss(); ++p)
    pairings(p) = static_cast<double>(lambda.fund[p]);
  return section_coefficients(pairings);
}

Eigen::VectorXd section_torus_coefficients(const Eigen::VectorXd& values) {
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  Eigen::VectorXd c(2 * values.size());
  for (Eigen::Index p = 0; p < values.size(); ++p) {
    double t = values(p);
    double chi = std::sqrt(t + std::sqrt(t * t + 1.0));
    c(2 * p) = scale * chi;
    c(2 * p + 1) = scale / chi;
  }
  return c;
}

double EmbeddedPoint::squared_norm() const {
  double s = 0.0;
  for (const auto& comp : components) s += comp.squaredNorm();
  return s;
}

Eigen::VectorXcd EmbeddedPoint::flatten() const {
  Eigen::Index total = 0;
  for (const auto& comp : components) total += comp.size();
  Eigen::VectorXcd v(total);
  Eigen::Index at = 0;
  for (const auto& comp : components) {
    v.segment(at, comp.size()) = comp;
    at += comp.size();
  }
  return v;
}

EmbeddedPoint embed_su_n(const Eigen::MatrixXcd& k,
                         const Eigen::VectorXd& pairings) {
  const int n = static_cast<int>(k.rows());
  if (pairings.size() != n - 1)
    throw std::invalid_argument("embed_su_n: pairing vector has wrong size");
  Eigen::VectorXd c = section_coefficients(pairings);
  EmbeddedPoint out;
  out.n = n;
  for (int p = 1; p < n; ++p) {
    // k . c_p v_p: v_p is the first basis vector of Lambda^p C^n, so the
    // image is c_p times the first column of Lambda^p k.
    Eigen::MatrixXcd kp = sun::exterior_power_matrix(k, p);
    out.components.push_back(c(p - 1) * kp.col(0));
  }
  return out;
}

EmbeddedPoint embed_su_n(const Eigen::MatrixXcd& k, const RootDatum& d,
                         const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("embed_su_n: weight is not dominant");
  Eigen::VectorXd pairings(d.rank_ss());
  for (int p = 0; p < d.rank_ss(); ++p)
    pairings(p) = static_cast<double>(lambda.fund[p]);
  return embed_su_n(k, pairings);
}

EmbeddedPoint exterior_action(const Eigen::MatrixXcd& k,
                              const EmbeddedPoint& v) {
  EmbeddedPoint out;
  out.n = v.n;
  for (std::size_t p = 1; p <= v.components.size(); ++p)
    out.components.push_back(
        sun::exterior_power_matrix(k, static_cast<int>(p)) *
        v.components[p - 1]);
  return out;
}

EmbeddedPoint derived_action(const Eigen::MatrixXcd& xi,
                             const EmbeddedPoint& v) {
  EmbeddedPoint out;
  out.n = v.n;
  for (std::size_t p = 1; p <= v.components.size(); ++p)
    out.components.push_back(
        sun::exterior_power_derived(xi, static_cast<int>(p)) *
        v.components[p - 1]);
  return out;
}

std::complex<double> inner(const EmbeddedPoint& a, const EmbeddedPoint& b) {
  if (a.components.size() != b.components.size())
    throw std::invalid_argument("inner: mismatched points");
  std::complex<double> s = 0.0;
  for (std::size_t p = 0; p < a.components.size(); ++p)
    s += b.components[p].dot(a.components[p]);  // linear in a, antilinear in b
  return s;
}

StabilizerDims v_sigma_stabilizer_dim(const RootDatum& d, const Face& sigma,
                                      int n) {
  if (n - 1 != d.rank_ss())
    throw std::invalid_argument("v_sigma_stabilizer_dim: rank mismatch");
  // v_sigma = sum of the highest vectors v_p over fundamental weights in the
  // closure of sigma, i.e. those with index p not in the vanishing set.
  std::vector<int> active;
  for (int p = 0; p < n - 1; ++p)
    if (!sigma.contains_index(p)) active.push_back(p);

  // Complex basis of sl(n,C): E_jk (j != k) and E_jj - E_{j+1,j+1}.
  std::vector<Eigen::MatrixXcd> basis;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(j, k) = 1.0;
      basis.push_back(e);
    }
  for (int j = 0; j + 1 < n; ++j) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    h(j, j) = 1.0;
    h(j + 1, j + 1) = -1.0;
    basis.push_back(h);
  }

  Eigen::Index rows = 0;
  for (int p : active) {
    auto combs = sun::combinations(n, p + 1);
    rows += static_cast<Eigen::Index>(combs.size());
  }
  Eigen::MatrixXcd action(std::max<Eigen::Index>(rows, 1),
                          static_cast<Eigen::Index>(basis.size()));
  action.setZero();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Eigen::Index at = 0;
    for (int p : active) {
      Eigen::MatrixXcd m = sun::exterior_power_derived(basis[b], p + 1);
      action.block(at, static_cast<Eigen::Index>(b), m.rows(), 1) = m.col(0);
      at += m.rows();
    }
  }
  Eigen::Index rank = 0;
  if (rows > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(action);
    qr.setThreshold(1e-9);
    rank = qr.rank();
  }
  StabilizerDims out;
  out.computed = static_cast<Int>(basis.size()) - static_cast<Int>(rank);
  out.expected = parabolic_commutator_dim(d, sigma);
  out.equal = out.computed == out.expected;
  return out;
}

double su3_quadric_residual(const EmbeddedPoint& v) {
  if (v.n != 3 || v.components.size() != 2 || v.components[0].size() != 3 ||
      v.components[1].size() != 3)
    throw std::invalid_argument("su3_quadric_residual: not a C^3 x C^3 point");
  const Eigen::VectorXcd& w = v.components[0];
  const Eigen::VectorXcd& c = v.components[1];  // (c_01, c_02, c_12)
  Eigen::Vector3cd z;
  z << c(2), -c(1), c(0);
  std::complex<double> q = w(0) * z(0) + w(1) * z(1) + w(2) * z(2);
  return std::abs(q);
}

AmbientMoments ambient_moments(const EmbeddedPoint& v,
                               const Eigen::MatrixXcd& xi) {
  double defect = (xi + xi.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-9 || std::abs(xi.trace()) > 1e-9)
    throw std::invalid_argument(
        "ambient_moments: xi must be anti-Hermitian and traceless");
  AmbientMoments out;
  EmbeddedPoint xv = derived_action(xi, v);
  out.k_moment = -0.5 * std::imag(inner(xv, v));
  out.t_moment.resize(v.n - 1);
  for (int j = 0; j + 1 < v.n; ++j) {
    EmbeddedPoint cv = derived_action(sun::coroot_matrix(v.n, j), v);
    out.t_moment(j) = -0.5 * std::imag(inner(cv, v));
  }
  return out;
}

HilbertCheck hilbert_vs_weyl(Int a, Int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("hilbert_vs_weyl: degrees must be >= 0");
  auto sym3 = [](Int m) { return m < 0 ? Int(0) : (m + 2) * (m + 1) / 2; };
  HilbertCheck out;
  out.hilbert = sym3(a) * sym3(b) - sym3(a - 1) * sym3(b - 1);
  RootDatum a2 = RootDatum::simple('A', 2, Isogeny::SimplyConnected);
  Weight lambda;
  lambda.fund = {a, b};
  out.weyl = a2.weyl_dimension(lambda);
  out.equal = out.hilbert == out.weyl;
  return out;
}

}  // namespace implode
