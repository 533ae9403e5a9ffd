#include "implode/implosion.hpp"

#include <algorithm>

namespace implode {

Int parabolic_commutator_dim(const RootDatum& d, const Face& sigma) {
  Int levi_pos = static_cast<Int>(levi_positive_roots(d, sigma).size());
  Int total_pos = static_cast<Int>(d.positive_roots().size());
  Int levi_derived = 2 * levi_pos + static_cast<Int>(sigma.vanishing.size());
  return levi_derived + (total_pos - levi_pos);
}

Smoothness classify_smoothness(const RootDatum& d, const Face& sigma) {
  // R_sigma is of type A1^k iff its only positive roots are the k simple
  // roots in S_sigma, i.e. the selected simple roots are pairwise orthogonal.
  std::size_t k = sigma.vanishing.size();
  bool a1k = levi_positive_roots(d, sigma).size() == k;
  if (!a1k) return {SmoothClass::Singular, 0, 1};
  Int order = d.levi_fundamental_group_order(sigma.vanishing);
  if (order == 1) return {SmoothClass::Smooth, static_cast<int>(k), 1};
  return {SmoothClass::OrbifoldOnly, static_cast<int>(k), order};
}

std::vector<Stratum> universal_strata(const RootDatum& d) {
  const Int dim_k = 2 * static_cast<Int>(d.positive_roots().size()) +
                    d.rank_ss() + d.central_rank();
  std::vector<Face> faces = enumerate_faces(d);
  std::vector<Stratum> out;
  for (const Face& sigma : faces) {
    Stratum s;
    s.face = sigma;
    Int levi_pos = static_cast<Int>(levi_positive_roots(d, sigma).size());
    Int dim_levi_derived =
        2 * levi_pos + static_cast<Int>(sigma.vanishing.size());
    s.real_dim = dim_k - dim_levi_derived + face_dim(d, sigma);
    s.orbit_type = "G/[P_" + face_str(sigma) + ",P_" + face_str(sigma) + "]";
    s.stabilizer_complex_dim = parabolic_commutator_dim(d, sigma);
    s.smoothness = classify_smoothness(d, sigma);
    for (const Face& tau : faces)
      if (face_leq(tau, sigma)) s.closure_preds.push_back(tau);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<int, int>> levi_blocks_su_n(const Face& sigma, int n) {
  std::vector<std::pair<int, int>> blocks;
  const auto& v = sigma.vanishing;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    int first = v[i];
    int size = v[j] - v[i] + 2;  // run {i..j} acts on rows first..first+size-1
    if (v[j] + 1 >= n)
      throw std::invalid_argument("levi_blocks_su_n: index out of range");
    blocks.emplace_back(first, size);
    i = j + 1;
  }
  return blocks;
}

namespace {

void require_special_unitary(const Eigen::MatrixXcd& k, double tol) {
  const auto n = k.rows();
  if (k.cols() != n) throw std::invalid_argument("matrix is not square");
  double unitary_defect =
      (k.adjoint() * k - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitary_defect > tol)
    throw std::invalid_argument("matrix is not unitary within tolerance");
  if (std::abs(k.determinant() - std::complex<double>(1.0, 0.0)) > tol)
    throw std::invalid_argument("matrix determinant is not 1 within tolerance");
}

}  // namespace

bool implode_equivalent_su_n(const GroupPointSUn& m1, const GroupPointSUn& m2,
                             double tol) {
  if (!m1.lambda.is_dominant() || !m2.lambda.is_dominant())
    throw std::invalid_argument("implode_equivalent_su_n: weight not dominant");
  require_special_unitary(m1.k, 1e-10);
  require_special_unitary(m2.k, 1e-10);
  if (!(m1.lambda == m2.lambda)) return false;
  const int n = static_cast<int>(m1.k.rows());
  if (static_cast<int>(m1.lambda.fund.size()) != n - 1)
    throw std::invalid_argument("implode_equivalent_su_n: rank mismatch");

  // The equivalence collapses right cosets of [K_sigma, K_sigma]: the
  // implosion of T*K is taken for the right action with moment (k,l) -> l,
  // so the classes are k [K_sigma, K_sigma] and the left action descends.
  Eigen::MatrixXcd g = m1.k.adjoint() * m2.k;
  Face sigma(std::vector<int>{});
  {
    std::vector<int> v;
    for (int i = 0; i < n - 1; ++i)
      if (m1.lambda.fund[i] == 0) v.push_back(i);
    sigma = Face(std::move(v));
  }
  auto blocks = levi_blocks_su_n(sigma, n);
  std::vector<bool> in_block(n, false);
  for (auto [first, size] : blocks)
    for (int i = first; i < first + size; ++i) in_block[i] = true;

  // Off-block entries vanish; singleton rows are identity on the diagonal.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool same_block = false;
      for (auto [first, size] : blocks)
        if (i >= first && i < first + size && j >= first && j < first + size)
          same_block = true;
      if (same_block) continue;
      std::complex<double> want =
          (i == j) ? std::complex<double>(1, 0) : std::complex<double>(0, 0);
      if (std::abs(g(i, j) - want) > tol) return false;
    }
  // Each unitary block must be special.
  for (auto [first, size] : blocks) {
    Eigen::MatrixXcd b = g.block(first, first, size, size);
    if (std::abs(b.determinant() - std::complex<double>(1, 0)) > tol)
      return false;
  }
  return true;
}

bool principal_stratum_membership_unp(const Eigen::MatrixXcd& x, double tol,
                                      double margin) {
  const int n = static_cast<int>(x.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(x.row(i).dot(x.row(j))) > tol) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (!(x.row(i).norm() - x.row(i + 1).norm() > margin)) return false;
  return true;
}

Rational cone_height(const RootDatum& d, const Weight& lambda) {
  if (d.central_rank() > 0)
    throw std::invalid_argument(
        "cone_height: datum must be semisimple (properness fails otherwise)");
  if (!lambda.is_dominant())
    throw std::invalid_argument("cone_height: weight not dominant");
  Int s = 0;
  for (Int c : lambda.fund) s += c;
  return Rational(-s);
}

}  // namespace implode
