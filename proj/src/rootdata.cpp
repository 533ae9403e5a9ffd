#include "implode/rootdata.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace implode {

namespace {

Int gcd_ll(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Int n, Int d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool Weight::is_zero() const {
  for (Int c : fund)
    if (c != 0) return false;
  for (const Rational& c : central)
    if (c.num != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (Int c : fund)
    if (c < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (fund.size() != o.fund.size())
    throw std::invalid_argument("Weight: rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < fund.size(); ++i) r.fund[i] += o.fund[i];
  if (!central.empty() || !o.central.empty()) {
    std::size_t cz = std::max(central.size(), o.central.size());
    r.central.resize(cz);
    for (std::size_t i = 0; i < o.central.size(); ++i)
      r.central[i] = r.central[i] + o.central[i];
  }
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (fund.size() != o.fund.size())
    throw std::invalid_argument("Weight: rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < fund.size(); ++i) r.fund[i] -= o.fund[i];
  if (!central.empty() || !o.central.empty()) {
    std::size_t cz = std::max(central.size(), o.central.size());
    r.central.resize(cz);
    for (std::size_t i = 0; i < o.central.size(); ++i)
      r.central[i] = r.central[i] - o.central[i];
  }
  return r;
}

bool Weight::operator==(const Weight& o) const {
  return fund == o.fund && central == o.central;
}

bool Weight::operator<(const Weight& o) const {
  if (fund != o.fund) return fund < o.fund;
  return std::lexicographical_compare(
      central.begin(), central.end(), o.central.begin(), o.central.end(),
      [](const Rational& a, const Rational& b) { return a < b; });
}

namespace {

Eigen::MatrixXi cartan_matrix(char series, int rank) {
  auto chain = [&](Eigen::MatrixXi& a) {
    for (int i = 0; i < rank; ++i) {
      a(i, i) = 2;
      if (i + 1 < rank) {
        a(i, i + 1) = -1;
        a(i + 1, i) = -1;
      }
    }
  };
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(rank, rank);
  switch (series) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A series needs rank >= 1");
      chain(a);
      return a;
    case 'B':
      // alpha_{r} short: <alpha_r, alpha_{r-1}^vee> = -1, <alpha_{r-1}, alpha_r^vee> = -2
      if (rank < 2) throw std::invalid_argument("B series needs rank >= 2");
      chain(a);
      a(rank - 1, rank - 2) = -2;
      return a;
    case 'C':
      if (rank < 2) throw std::invalid_argument("C series needs rank >= 2");
      chain(a);
      a(rank - 2, rank - 1) = -2;
      return a;
    case 'D':
      if (rank < 3) throw std::invalid_argument("D series needs rank >= 3");
      chain(a);
      a(rank - 1, rank - 2) = 0;
      a(rank - 2, rank - 1) = 0;
      a(rank - 1, rank - 3) = -1;
      a(rank - 3, rank - 1) = -1;
      return a;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G series has rank 2");
      a << 2, -3, -1, 2;  // alpha_1 short, alpha_2 long
      return a;
    case 'F':
      if (rank != 4) throw std::invalid_argument("F series has rank 4");
      chain(a);
      a(2, 1) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      return a;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("E series has rank 6..8");
      // Bourbaki numbering: node 2 attaches to node 4 of the chain 1-3-4-5-...
      {
        std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {1, 3}};
        for (int i = 4; i < rank; ++i) edges.push_back({i - 1, i});
        for (int i = 0; i < rank; ++i) a(i, i) = 2;
        for (auto [u, v] : edges) {
          a(u, v) = -1;
          a(v, u) = -1;
        }
      }
      return a;
    default:
      throw std::invalid_argument(std::string("unknown series '") + series + "'");
  }
}

// Symmetrizers d_i (minimal positive integers with d_i A_ij = d_j A_ji),
// one connected component at a time.
std::vector<Int> compute_symmetrizers(const Eigen::MatrixXi& a) {
  int r = static_cast<int>(a.rows());
  std::vector<Rational> d(r, Rational(0));
  for (int start = 0; start < r; ++start) {
    if (d[start].num != 0) continue;
    d[start] = Rational(1);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < r; ++j) {
        if (j == i || a(i, j) == 0) continue;
        Rational dj = d[i] * Rational(a(i, j), a(j, i));
        if (d[j].num == 0) {
          d[j] = dj;
          q.push(j);
        } else if (!(d[j] == dj)) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Int lcm_den = 1;
  for (const Rational& x : d) lcm_den = lcm_den / gcd_ll(lcm_den, x.den) * x.den;
  std::vector<Int> out(r);
  Int g = 0;
  for (int i = 0; i < r; ++i) {
    out[i] = d[i].num * (lcm_den / d[i].den);
    g = gcd_ll(g, out[i]);
  }
  for (Int& x : out)
    if (g > 1) x /= g;
  return out;
}

}  // namespace

void RootDatum::finalize() {
  const int r = rank_ss_;
  if (cartan_.rows() != r || cartan_.cols() != r)
    throw std::invalid_argument("cartan matrix has wrong shape");
  for (int i = 0; i < r; ++i) {
    if (cartan_(i, i) != 2)
      throw std::invalid_argument("cartan diagonal must be 2");
    for (int j = 0; j < r; ++j) {
      if (i != j && cartan_(i, j) > 0)
        throw std::invalid_argument("cartan off-diagonal must be <= 0");
      if (i != j && (cartan_(i, j) == 0) != (cartan_(j, i) == 0))
        throw std::invalid_argument("cartan zero pattern must be symmetric");
    }
  }
  symmetrizers_ = compute_symmetrizers(cartan_);

  const int n = rank_ss_ + central_rank_;
  if (coroot_coords_.rows() != r || coroot_coords_.cols() != n)
    throw std::invalid_argument("coroot_coords has wrong shape");
  if (weight_coords_.rows() != r || weight_coords_.cols() != r)
    throw std::invalid_argument("weight_coords has wrong shape");
  // Coroots must be linearly independent over Q.
  if (r > 0) {
    Eigen::MatrixXd cd = coroot_coords_.cast<double>();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cd);
    if (lu.rank() != r)
      throw std::invalid_argument("simple coroots are linearly dependent");
  }
  // Fundamental weight / simple coroot pairing must be the identity.  The
  // weight rows live in the weight lattice of the semisimple part, whose
  // basis is dual to the simple coroots, so the pairing is read off directly.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (weight_coords_(i, j) != (i == j ? 1 : 0))
        throw std::invalid_argument(
            "fundamental weight / coroot pairing is not the identity");

  // Positive roots by string closure over the simple roots.
  positive_roots_.clear();
  std::set<std::vector<int>> seen;
  std::vector<Eigen::VectorXi> frontier;
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(r);
    v(i) = 1;
    frontier.push_back(v);
    seen.insert(std::vector<int>(v.data(), v.data() + r));
  }
  auto pairing_with_simple_coroot = [&](const Eigen::VectorXi& root, int i) {
    // <alpha, alpha_i^vee> = sum_j c_j A_ij
    Int s = 0;
    for (int j = 0; j < r; ++j) s += Int(root(j)) * cartan_(i, j);
    return s;
  };
  // 120 positive roots per irreducible component (E8) bounds any finite
  // type; an affine or indefinite Cartan matrix would close up forever.
  const std::size_t root_cap = 120 * static_cast<std::size_t>(std::max(r, 1));
  std::vector<Eigen::VectorXi> all = frontier;
  std::size_t head = 0;
  while (head < all.size()) {
    Eigen::VectorXi alpha = all[head++];
    for (int i = 0; i < r; ++i) {
      // alpha + alpha_i is a root iff the downward string length p satisfies
      // q = p - <alpha, alpha_i^vee> >= 1.
      Int down = 0;
      Eigen::VectorXi probe = alpha;
      for (;;) {
        probe(i) -= 1;
        bool nonneg = (probe.array() >= 0).all();
        if (!nonneg ||
            seen.find(std::vector<int>(probe.data(), probe.data() + r)) ==
                seen.end())
          break;
        ++down;
      }
      if (down - pairing_with_simple_coroot(alpha, i) >= 1) {
        Eigen::VectorXi next = alpha;
        next(i) += 1;
        auto key = std::vector<int>(next.data(), next.data() + r);
        if (seen.insert(key).second) {
          if (all.size() >= root_cap)
            throw std::invalid_argument(
                "cartan matrix is not of finite type");
          all.push_back(next);
        }
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    Int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(x.data(), x.data() + x.size(),
                                        y.data(), y.data() + y.size());
  });
  for (const Eigen::VectorXi& c : all) {
    Root root;
    root.simple_coords = c;
    // (alpha,alpha)/2 = (1/2) sum_{ij} c_i c_j d_i A_ij
    Int twice = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        twice += Int(c(i)) * Int(c(j)) * symmetrizers_[i] * cartan_(i, j);
    if (twice % 2 != 0 || twice <= 0)
      throw std::logic_error("root closure produced a non-root vector");
    root.half_norm = twice / 2;
    // alpha^vee = sum_i (c_i d_i / d_alpha) alpha_i^vee
    root.coroot_on_fund = Eigen::VectorXi::Zero(r);
    for (int i = 0; i < r; ++i) {
      Int num = Int(c(i)) * symmetrizers_[i];
      if (num % root.half_norm != 0)
        throw std::logic_error("coroot coordinates are not integral");
      root.coroot_on_fund(i) = static_cast<int>(num / root.half_norm);
    }
    positive_roots_.push_back(std::move(root));
  }
}

RootDatum RootDatum::simple(char series, int rank, Isogeny isogeny,
                            std::string name) {
  RootDatum d;
  d.cartan_ = cartan_matrix(series, rank);
  d.rank_ss_ = rank;
  d.central_rank_ = 0;
  if (name.empty())
    name = std::string(1, series) + std::to_string(rank) +
           (isogeny == Isogeny::Adjoint ? "-adjoint" : "");
  d.name_ = std::move(name);
  if (isogeny == Isogeny::SimplyConnected) {
    d.coroot_coords_ = Eigen::MatrixXi::Identity(rank, rank);
  } else {
    // Adjoint: cocharacters form the coweight lattice, in which the simple
    // coroots have coordinates given by the rows of the Cartan matrix.
    d.coroot_coords_ = d.cartan_;
  }
  d.weight_coords_ = Eigen::MatrixXi::Identity(rank, rank);
  d.finalize();
  return d;
}

RootDatum RootDatum::torus(int rank, std::string name) {
  if (rank < 1) throw std::invalid_argument("torus needs rank >= 1");
  RootDatum d;
  d.rank_ss_ = 0;
  d.central_rank_ = rank;
  d.cartan_ = Eigen::MatrixXi::Zero(0, 0);
  d.coroot_coords_ = Eigen::MatrixXi::Zero(0, rank);
  d.weight_coords_ = Eigen::MatrixXi::Zero(0, 0);
  d.name_ = name.empty() ? "T" + std::to_string(rank) : std::move(name);
  d.finalize();
  return d;
}

RootDatum RootDatum::custom(std::string name, Eigen::MatrixXi cartan,
                            Eigen::MatrixXi coroot_coords,
                            Eigen::MatrixXi weight_coords, int central_rank) {
  RootDatum d;
  d.name_ = std::move(name);
  d.rank_ss_ = static_cast<int>(cartan.rows());
  d.central_rank_ = central_rank;
  d.cartan_ = std::move(cartan);
  d.coroot_coords_ = std::move(coroot_coords);
  d.weight_coords_ = std::move(weight_coords);
  d.finalize();
  return d;
}

bool RootDatum::is_simply_connected_semisimple() const {
  if (central_rank_ != 0 || rank_ss_ == 0) return false;
  // The coroot lattice must be all of X_*: every invariant factor 1.
  auto d = smith_normal_form_diagonal(coroot_coords_);
  return std::all_of(d.begin(), d.end(), [](Int x) { return x == 1; });
}

Weight RootDatum::rho() const {
  Weight w;
  w.fund.assign(rank_ss_, 1);
  return w;
}

Int RootDatum::pairing(const Weight& w, const Root& alpha) const {
  Int s = 0;
  for (int i = 0; i < rank_ss_; ++i) s += w.fund[i] * alpha.coroot_on_fund(i);
  return s;
}

Int RootDatum::simple_pairing(const Weight& w, int i) const {
  return w.fund.at(i);
}

Weight RootDatum::simple_reflection(const Weight& w, int i) const {
  // s_i(w) = w - <w, alpha_i^vee> alpha_i; (alpha_i)_j = A_ji in fundamental
  // coordinates.
  Weight r = w;
  Int c = w.fund.at(i);
  for (int j = 0; j < rank_ss_; ++j) r.fund[j] -= c * cartan_(j, i);
  return r;
}

Int RootDatum::weyl_dimension(const Weight& lambda) const {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dimension: weight is not dominant");
  if (static_cast<int>(lambda.fund.size()) != rank_ss_)
    throw std::invalid_argument("weyl_dimension: rank mismatch");
  const Weight r = rho();
  std::vector<Int> nums, dens;
  for (const Root& alpha : positive_roots_) {
    nums.push_back(pairing(lambda + r, alpha));
    dens.push_back(pairing(r, alpha));
  }
  // Cancel the factor lists completely before multiplying.
  for (Int& d : dens)
    for (Int& n : nums) {
      while (d != 1) {
        Int g = std::gcd(n, d);
        if (g == 1) break;
        n /= g;
        d /= g;
      }
      if (d == 1) break;
    }
  for (Int d : dens)
    if (d != 1) throw std::logic_error("weyl_dimension: non-integral result");
  Int acc = 1;
  for (Int n : nums) {
    if (acc > std::numeric_limits<Int>::max() / n)
      throw std::overflow_error("weyl_dimension: result exceeds 64 bits");
    acc *= n;
  }
  return acc;
}

std::map<Weight, Int> RootDatum::weight_multiplicities(
    const Weight& lambda) const {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weight_multiplicities: weight is not dominant");
  if (static_cast<int>(lambda.fund.size()) != rank_ss_)
    throw std::invalid_argument("weight_multiplicities: rank mismatch");
  const int r = rank_ss_;

  // Generate the full weight diagram by simple root strings: from each known
  // weight nu and simple root alpha_i with <nu, alpha_i^vee> = m > 0, the
  // weights nu - alpha_i, ..., nu - m alpha_i all occur.
  struct Entry {
    Weight w;
    Eigen::VectorXi depth;  // lambda - w over the simple roots
  };
  std::map<Weight, Eigen::VectorXi> diagram;
  std::vector<Entry> order;
  Entry top{lambda, Eigen::VectorXi::Zero(r)};
  diagram.emplace(top.w, top.depth);
  order.push_back(top);
  std::size_t head = 0;
  while (head < order.size()) {
    Entry cur = order[head++];
    for (int i = 0; i < r; ++i) {
      Int m = cur.w.fund[i];
      Weight w = cur.w;
      Eigen::VectorXi depth = cur.depth;
      for (Int step = 1; step <= m; ++step) {
        for (int j = 0; j < r; ++j) w.fund[j] -= cartan_(j, i);
        depth(i) += 1;
        if (diagram.emplace(w, depth).second) order.push_back({w, depth});
      }
    }
  }

  // Freudenthal recursion in order of increasing depth height.
  std::stable_sort(order.begin(), order.end(),
                   [](const Entry& a, const Entry& b) {
                     return a.depth.sum() < b.depth.sum();
                   });
  // Roots in fundamental coordinates: (alpha)_j = sum_l c_l A_jl.
  std::vector<std::vector<Int>> root_fund;
  for (const Root& alpha : positive_roots_) {
    std::vector<Int> v(r, 0);
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < r; ++l)
        v[j] += Int(alpha.simple_coords(l)) * cartan_(j, l);
    root_fund.push_back(std::move(v));
  }
  std::map<Weight, Int> mult;
  for (const Entry& e : order) {
    if (e.depth.sum() == 0) {
      mult[e.w] = 1;
      continue;
    }
    // Denominator (lambda + mu + 2 rho, lambda - mu), integral because
    // lambda - mu lies in the root lattice.
    Weight shifted = lambda + e.w;
    for (int i = 0; i < r; ++i) shifted.fund[i] += 2;
    Int denom = 0;
    for (int i = 0; i < r; ++i)
      denom += Int(e.depth(i)) * symmetrizers_[i] * shifted.fund[i];
    Int acc = 0;
    for (std::size_t ai = 0; ai < positive_roots_.size(); ++ai) {
      const Root& alpha = positive_roots_[ai];
      Weight wk = e.w;
      for (;;) {
        for (int j = 0; j < r; ++j) wk.fund[j] += root_fund[ai][j];
        auto it = mult.find(wk);
        if (it == mult.end()) break;
        acc += it->second * alpha.half_norm * pairing(wk, alpha);
      }
    }
    if (denom <= 0)
      throw std::logic_error("Freudenthal: nonpositive denominator");
    if ((2 * acc) % denom != 0)
      throw std::logic_error("Freudenthal: non-integral multiplicity");
    mult[e.w] = 2 * acc / denom;
  }
  return mult;
}

Int RootDatum::levi_fundamental_group_order(
    const std::vector<int>& vanishing_set) const {
  if (vanishing_set.empty()) return 1;
  Eigen::MatrixXi rows(static_cast<int>(vanishing_set.size()), cochar_dim());
  for (std::size_t k = 0; k < vanishing_set.size(); ++k) {
    int i = vanishing_set[k];
    if (i < 0 || i >= rank_ss_)
      throw std::invalid_argument("levi_fundamental_group_order: bad index");
    rows.row(static_cast<int>(k)) = coroot_coords_.row(i);
  }
  return lattice_saturation_index(rows);
}

RootDatum::DominantForm RootDatum::dominantize(const Weight& w,
                                               std::size_t cap) const {
  DominantForm out;
  out.weight = w;
  std::size_t steps = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_ss_; ++i) {
      if (out.weight.fund[i] == 0) {
        out.singular = true;
        return out;
      }
      if (out.weight.fund[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return out;
    out.weight = simple_reflection(out.weight, neg);
    out.sign = -out.sign;
    if (++steps > cap)
      throw std::runtime_error("Weyl reflection cap exceeded");
  }
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w,
                                          std::size_t cap) const {
  std::set<Weight> orbit;
  std::vector<Weight> queue{w};
  orbit.insert(w);
  std::size_t head = 0;
  while (head < queue.size()) {
    Weight cur = queue[head++];
    for (int i = 0; i < rank_ss_; ++i) {
      Weight next = simple_reflection(cur, i);
      if (orbit.insert(next).second) {
        if (orbit.size() > cap)
          throw std::runtime_error("Weyl orbit cap exceeded");
        queue.push_back(next);
      }
    }
  }
  return queue;
}

std::vector<Int> smith_normal_form_diagonal(Eigen::MatrixXi m) {
  using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
  Mat a = m.cast<Int>();
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  const int steps = std::min(rows, cols);
  for (int s = 0; s < steps; ++s) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = s; i < rows; ++i)
        for (int j = s; j < cols; ++j) {
          Int v = a(i, j) < 0 ? -a(i, j) : a(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;  // trailing block is zero
      a.row(s).swap(a.row(pr));
      a.col(s).swap(a.col(pc));
      bool reduced = true;
      for (int i = s + 1; i < rows; ++i) {
        Int q = a(i, s) / a(s, s);
        if (q != 0) a.row(i) -= q * a.row(s);
        if (a(i, s) != 0) reduced = false;
      }
      for (int j = s + 1; j < cols; ++j) {
        Int q = a(s, j) / a(s, s);
        if (q != 0) a.col(j) -= q * a.col(s);
        if (a(s, j) != 0) reduced = false;
      }
      if (reduced) {
        // Enforce divisibility of the remaining block by the pivot.
        bool divides = true;
        for (int i = s + 1; i < rows && divides; ++i)
          for (int j = s + 1; j < cols && divides; ++j)
            if (a(i, j) % a(s, s) != 0) {
              a.row(s) += a.row(i);
              divides = false;
            }
        if (divides) break;
      }
    }
  }
  std::vector<Int> d;
  for (int s = 0; s < steps; ++s)
    d.push_back(a(s, s) < 0 ? -a(s, s) : a(s, s));
  return d;
}

Int lattice_saturation_index(const Eigen::MatrixXi& m) {
  Int idx = 1;
  for (Int d : smith_normal_form_diagonal(m))
    if (d != 0) idx *= d;
  return idx;
}

}  // namespace implode
