#include "implode/sun.hpp"

#include <numbers>
#include <stdexcept>

namespace implode::sun {

std::vector<std::vector<int>> combinations(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  if (p == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Eigen::MatrixXcd exterior_power_matrix(const Eigen::MatrixXcd& k, int p) {
  const int n = static_cast<int>(k.rows());
  auto combs = combinations(n, p);
  const int m = static_cast<int>(combs.size());
  Eigen::MatrixXcd out(m, m);
  Eigen::MatrixXcd minor(p, p);
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < m; ++row) {
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) minor(a, b) = k(combs[row][a], combs[col][b]);
      out(row, col) = minor.determinant();
    }
  return out;
}

Eigen::MatrixXcd exterior_power_derived(const Eigen::MatrixXcd& xi, int p) {
  const int n = static_cast<int>(xi.rows());
  auto combs = combinations(n, p);
  const int m = static_cast<int>(combs.size());
  auto key = [](const std::vector<int>& c) {
    int k = 0;
    for (int i : c) k |= 1 << i;
    return k;
  };
  std::vector<int> lookup(std::size_t(1) << n, -1);
  for (int i = 0; i < m; ++i) lookup[key(combs[i])] = i;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (int col = 0; col < m; ++col) {
    const auto& c = combs[col];
    for (int slot = 0; slot < p; ++slot) {
      int from = c[slot];
      for (int to = 0; to < n; ++to) {
        Complex coeff = xi(to, from);
        if (coeff == Complex(0, 0)) continue;
        if (to == from) {
          out(col, col) += coeff;
          continue;
        }
        // replace c[slot] by `to`, skip if duplicated, track the sign of the
        // sort back to increasing order
        bool dup = false;
        for (int i = 0; i < p; ++i)
          if (i != slot && c[i] == to) dup = true;
        if (dup) continue;
        std::vector<int> nc = c;
        nc[slot] = to;
        int sign = 1;
        for (int i = 0; i + 1 < p; ++i)
          for (int j = 0; j + 1 < p - i; ++j)
            if (nc[j] > nc[j + 1]) {
              std::swap(nc[j], nc[j + 1]);
              sign = -sign;
            }
        out(lookup[key(nc)], col) += double(sign) * coeff;
      }
    }
  }
  return out;
}

Eigen::MatrixXcd coroot_matrix(int n, int j) {
  if (j < 0 || j >= n - 1) throw std::invalid_argument("coroot index");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const double two_pi = 2.0 * std::numbers::pi;
  m(j, j) = Complex(0, two_pi);
  m(j + 1, j + 1) = Complex(0, -two_pi);
  return m;
}

Eigen::MatrixXcd xi_matrix(int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n - 1; ++j) m -= coroot_matrix(n, j);
  return m;
}

Eigen::VectorXd t_component(const Eigen::MatrixXcd& xi) {
  const int n = static_cast<int>(xi.rows());
  Eigen::VectorXd theta(n);
  for (int j = 0; j < n; ++j) theta(j) = xi(j, j).imag();
  return theta;
}

double weight_eval(const Eigen::VectorXd& pairings,
                   const Eigen::MatrixXcd& xi) {
  const int n = static_cast<int>(xi.rows());
  if (pairings.size() != n - 1)
    throw std::invalid_argument("weight_eval: pairing vector has wrong size");
  Eigen::VectorXd theta = t_component(xi);
  // lambda = sum_p pairings(p) * varpi_p with varpi_p = eps_1 + ... + eps_p,
  // so the eps-coordinate a_j is the tail sum of the pairings.
  double value = 0.0;
  double tail = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    if (j < n - 1) tail += pairings(j);
    value += tail * theta(j);
  }
  return value / (2.0 * std::numbers::pi);
}

std::vector<Eigen::MatrixXcd> su_basis(int n) {
  std::vector<Eigen::MatrixXcd> basis;
  for (int j = 0; j + 1 < n; ++j) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    h(j, j) = Complex(0, 1);
    h(j + 1, j + 1) = Complex(0, -1);
    basis.push_back(h);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
      a(j, k) = Complex(1, 0);
      a(k, j) = Complex(-1, 0);
      basis.push_back(a);
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
      b(j, k) = Complex(0, 1);
      b(k, j) = Complex(0, 1);
      basis.push_back(b);
    }
  return basis;
}

Eigen::MatrixXcd random_special_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  Complex det = q.determinant();
  q.col(0) /= det;  // unit modulus; divides out the phase
  return q;
}

Eigen::MatrixXcd random_su_element(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::MatrixXcd xi = 0.5 * (g - g.adjoint());
  Complex tr = xi.trace() / double(n);
  for (int i = 0; i < n; ++i) xi(i, i) -= tr;
  return xi;
}

}  // namespace implode::sun
