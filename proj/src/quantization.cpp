#include "implode/quantization.hpp"

#include <algorithm>
#include <functional>

namespace implode {

VirtualRep tensor_decompose(const RootDatum& d, const Weight& lambda,
                            const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant())
    throw std::invalid_argument("tensor_decompose: weights must be dominant");
  // Iterate over the smaller weight diagram.
  const Weight* big = &lambda;
  const Weight* small = &mu;
  if (d.weyl_dimension(lambda) < d.weyl_dimension(mu)) std::swap(big, small);

  VirtualRep out;
  for (const auto& [nu, m] : d.weight_multiplicities(*small)) {
    Weight shifted = *big + nu + d.rho();
    auto dom = d.dominantize(shifted);
    if (dom.singular) continue;
    Weight top = dom.weight - d.rho();
    out[top] += dom.sign * m;
    if (out[top] == 0) out.erase(top);
  }
  for (const auto& [w, m] : out)
    if (m < 0)
      throw std::logic_error("tensor_decompose: negative multiplicity");
  return out;
}

namespace {

void enumerate_partitions(Int remaining, Int max_part, int max_rows,
                          Partition& cur,
                          const std::function<void(const Partition&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  if (max_rows == 0) return;
  for (Int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    enumerate_partitions(remaining - part, part, max_rows - 1, cur, emit);
    cur.pop_back();
  }
}

// Count lattice skew semistandard tableaux of shape nu/lambda and content mu.
// Cells are filled in reverse reading order (right to left within a row, top
// row first), which makes the lattice-word prefix condition incremental.
Int count_lr_tableaux(const Partition& nu, const Partition& lambda,
                      const Partition& mu) {
  const int rows = static_cast<int>(nu.size());
  const int values = static_cast<int>(mu.size());
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r)
    fill[r].assign(static_cast<std::size_t>(nu[r]), 0);
  std::vector<Int> used(values + 1, 0);

  struct Cell {
    int r, c;
  };
  std::vector<Cell> order;
  for (int r = 0; r < rows; ++r) {
    Int from = r < static_cast<int>(lambda.size()) ? lambda[r] : 0;
    for (Int c = nu[r] - 1; c >= from; --c)
      order.push_back({r, static_cast<int>(c)});
  }

  Int count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == order.size()) {
      ++count;
      return;
    }
    auto [r, c] = order[at];
    int hi = values;
    if (c + 1 < static_cast<int>(nu[r])) hi = fill[r][c + 1];  // weak rows
    int lo = 1;
    if (r > 0 && c < static_cast<int>(nu[r - 1]) &&
        c >= (r - 1 < static_cast<int>(lambda.size()) ? lambda[r - 1] : 0))
      lo = fill[r - 1][c] + 1;  // strict columns
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      fill[r][c] = v;
      ++used[v];
      rec(at + 1);
      --used[v];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return count;
}

void validate_partition(const Partition& p, int n) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0)
      throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && p[i] > p[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
  std::size_t nonzero = 0;
  for (Int x : p)
    if (x > 0) ++nonzero;
  if (static_cast<int>(nonzero) > n)
    throw std::invalid_argument("partition has more rows than allowed");
}

Partition trimmed(const Partition& p) {
  Partition q = p;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

std::map<Partition, Int> lr_coefficients_type_a(int n, const Partition& lambda,
                                                const Partition& mu) {
  validate_partition(lambda, n);
  validate_partition(mu, n);
  Partition lam = trimmed(lambda), m = trimmed(mu);
  Int total = 0;
  for (Int x : lam) total += x;
  for (Int x : m) total += x;

  std::map<Partition, Int> out;
  if (total == 0) {
    out[Partition{}] = 1;
    return out;
  }
  Partition cur;
  enumerate_partitions(total, total, n, cur, [&](const Partition& nu) {
    // nu must contain lambda.
    for (std::size_t r = 0; r < lam.size(); ++r)
      if (r >= nu.size() || nu[r] < lam[r]) return;
    Int c = count_lr_tableaux(nu, lam, m);
    if (c > 0) out[nu] = c;
  });
  return out;
}

Weight partition_to_weight(int n, const Partition& p) {
  Partition q = p;
  q.resize(static_cast<std::size_t>(n), 0);
  Weight w;
  w.fund.resize(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) w.fund[i] = q[i] - q[i + 1];
  return w;
}

TCharacter n_invariants(const VirtualRep& v) {
  TCharacter out;
  for (const auto& [w, m] : v)
    if (m != 0) out[w] = m;
  return out;
}

VirtualRep holomorphic_induct(const RootDatum& d, const TCharacter& t) {
  VirtualRep out;
  for (const auto& [w, m] : t) {
    if (m == 0) continue;
    auto dom = d.dominantize(w + d.rho());
    if (dom.singular) continue;
    Weight top = dom.weight - d.rho();
    out[top] += dom.sign * m;
    if (out[top] == 0) out.erase(top);
  }
  return out;
}

TCharacter rr_implosion(const RootDatum& d,
                        const std::vector<Weight>& orbit_labels) {
  Weight zero;
  zero.fund.assign(d.rank_ss(), 0);
  VirtualRep acc;
  acc[zero] = 1;
  for (const Weight& lambda : orbit_labels) {
    if (!lambda.is_dominant())
      throw std::invalid_argument("rr_implosion: orbit label not dominant");
    VirtualRep next;
    for (const auto& [w, m] : acc)
      for (const auto& [nu, c] : tensor_decompose(d, w, lambda)) {
        next[nu] += m * c;
        if (next[nu] == 0) next.erase(nu);
      }
    acc = std::move(next);
  }
  return n_invariants(acc);
}

std::vector<Weight> cut_polytope(const RootDatum& d,
                                 const std::vector<Weight>& points,
                                 const Weight& lambda0, const Face& tau) {
  // lambda0 must lie in the closure of tau (the open-face case included).
  if (!face_leq(face_of(d, lambda0), tau))
    throw std::invalid_argument(
        "cut_polytope: base point not in the closure of the face");
  std::vector<Weight> kept;
  for (const Weight& p : points) {
    Weight diff = p - lambda0;
    bool ok = true;
    for (int i = 0; i < d.rank_ss() && ok; ++i) {
      Int v = diff.fund[i];
      if (tau.contains_index(i) ? v != 0 : v < 0) ok = false;
    }
    if (ok) kept.push_back(p);
  }
  return kept;
}

}  // namespace implode
