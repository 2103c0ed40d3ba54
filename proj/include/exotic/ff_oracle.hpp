#pragma once

/*
  Brute force over a prime field F_p, p odd: the exotic nilpotent cone
  g^{-theta}_nil x V and the full space G^{iota theta} x V under H = Sp_2n,
  orbit censuses, isotropic-flag fixed point counts, and the transversal
  slice rank checks (the latter over Q).

  Conventions: V has basis e_1..e_n, f_1..f_n with Gram matrix
  J = [[0, I], [-I, 0]]. theta(g) = J g^{-T} J^{-1} on GL(V), so that
  H = G^theta = Sp(V); on gl(V), theta(z) = -J z^T J^{-1}.
*/

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "exotic/exact_algebra.hpp"
#include "exotic/partitions.hpp"

namespace exotic {

EXOTIC_ERROR(UnlabeledOrbit);
EXOTIC_ERROR(BudgetExceeded);
EXOTIC_ERROR(DecompositionFailure);
EXOTIC_ERROR(NonpositiveWeight);

// Dense matrix over F_p; entries are kept in [0, p).
struct FqMatrix {
  int rows = 0, cols = 0;
  std::vector<int> e;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r * c), 0) {}
  static FqMatrix identity(int d) {
    FqMatrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    return m;
  }
  int& operator()(int i, int j) { return e[static_cast<std::size_t>(i * cols + j)]; }
  int operator()(int i, int j) const { return e[static_cast<std::size_t>(i * cols + j)]; }
  bool is_zero() const {
    for (int x : e)
      if (x) return false;
    return true;
  }
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

namespace ff {

inline int mod(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int inverse(int a, int p) {
  long r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

inline FqMatrix mul(const FqMatrix& a, const FqMatrix& b, int p) {
  if (a.cols != b.rows) throw DimensionMismatch("F_q matrix product");
  FqMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) = (c(i, j) + x * b(k, j)) % p;
    }
  return c;
}

inline FqMatrix add(const FqMatrix& a, const FqMatrix& b, int p, int sign = 1) {
  FqMatrix c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] = mod(a.e[i] + sign * b.e[i], p);
  return c;
}

inline FqMatrix transpose(const FqMatrix& a) {
  FqMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

// row echelon form in place; returns the rank
inline int echelon(FqMatrix& m, int p) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    int inv = inverse(m(r, c), p);
    for (int j = 0; j < m.cols; ++j) m(r, j) = m(r, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || !m(i, c)) continue;
      int f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = mod(m(i, j) - f * m(r, j), p);
    }
    ++r;
  }
  return r;
}

inline int rank(FqMatrix m, int p) { return echelon(m, p); }

inline FqMatrix power(const FqMatrix& a, int k, int p) {
  FqMatrix r = FqMatrix::identity(a.rows);
  for (int i = 0; i < k; ++i) r = mul(r, a, p);
  return r;
}

}  // namespace ff

struct ExoticPoint {
  FqMatrix x;  // 2n x 2n
  FqMatrix v;  // 2n x 1
  friend bool operator==(const ExoticPoint&, const ExoticPoint&) = default;
};

struct SymplecticContext {
  int n = 0;
  int q = 0;
  FqMatrix J, Jinv;
  std::vector<FqMatrix> generators;
  std::vector<FqMatrix> inverses;

  int dim() const { return 2 * n; }
  FqMatrix theta_group(const FqMatrix& g) const;  // J g^{-T} J^{-1}, for invertible g
  FqMatrix theta_lie(const FqMatrix& z) const {
    FqMatrix r = ff::mul(ff::mul(J, ff::transpose(z), q), Jinv, q);
    for (auto& x : r.e) x = ff::mod(-x, q);
    return r;
  }
  // inverse of g in Sp: J^{-1} g^T J
  FqMatrix sp_inverse(const FqMatrix& g) const { return ff::mul(ff::mul(Jinv, ff::transpose(g), q), J, q); }
  bool in_sp(const FqMatrix& g) const { return ff::mul(ff::mul(ff::transpose(g), J, q), g, q) == J; }
};

inline constexpr int kMaxOracleRank = 3;

/*
  Root elements I + X of Sp_2n(F_p) for X in
    [[E_ij, 0], [0, -E_ji]] (i != j), [[0, B], [0, 0]], [[0, 0], [C, 0]]
  with B, C running over E_ii and E_ij + E_ji, plus one torus element
  diag(c, 1, ..., c^{-1}, 1, ...) with c a primitive root.
*/
inline SymplecticContext setup_symplectic(int n, int q) {
  if (q < 3 || q % 2 == 0 || !detail::is_prime(q))
    throw InvalidField("the oracle works over prime fields F_p with p odd, got q = " + std::to_string(q));
  if (n < 1 || n > kMaxOracleRank) throw SizeMismatch("oracle rank must lie in 1.." + std::to_string(kMaxOracleRank));
  SymplecticContext ctx;
  ctx.n = n;
  ctx.q = q;
  const int d = 2 * n;
  ctx.J = FqMatrix(d, d);
  ctx.Jinv = FqMatrix(d, d);
  for (int i = 0; i < n; ++i) {
    ctx.J(i, n + i) = 1;
    ctx.J(n + i, i) = q - 1;
    ctx.Jinv(i, n + i) = q - 1;
    ctx.Jinv(n + i, i) = 1;
  }
  auto push = [&](const FqMatrix& g) {
    ctx.generators.push_back(g);
    ctx.inverses.push_back(ctx.sp_inverse(g));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        FqMatrix g = FqMatrix::identity(d);
        g(i, j) = 1;
        g(n + j, n + i) = q - 1;
        push(g);
      }
      if (i <= j) {
        FqMatrix b = FqMatrix::identity(d), c = FqMatrix::identity(d);
        b(i, n + j) = 1;
        b(j, n + i) = 1;
        c(n + i, j) = 1;
        c(n + j, i) = 1;
        push(b);
        push(c);
      }
    }
  int gen = 2;
  for (; gen < q; ++gen) {
    int k = 1, x = gen;
    while (x != 1) {
      x = x * gen % q;
      ++k;
    }
    if (k == q - 1) break;
  }
  FqMatrix t = FqMatrix::identity(d);
  t(0, 0) = gen;
  t(n, n) = ff::inverse(gen, q);
  push(t);
  return ctx;
}

inline FqMatrix SymplecticContext::theta_group(const FqMatrix& g) const {
  // g^{-T} via Gauss-Jordan on [g^T | I]
  const int d = g.rows;
  FqMatrix aug(d, 2 * d);
  FqMatrix gt = ff::transpose(g);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      aug(i, j) = gt(i, j);
      aug(i, d + j) = i == j;
    }
  if (ff::echelon(aug, q) < d) throw DimensionMismatch("theta of a singular matrix");
  FqMatrix inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv(i, j) = aug(i, d + j);
  return ff::mul(ff::mul(J, inv, q), Jinv, q);
}

// Order of the group generated by ctx.generators, by BFS; throws past `cap` elements.
inline long generated_group_order(const SymplecticContext& ctx, long cap) {
  auto key = [](const FqMatrix& m) { return std::string(m.e.begin(), m.e.end()); };
  std::unordered_map<std::string, char> seen;
  std::deque<FqMatrix> todo{FqMatrix::identity(ctx.dim())};
  seen.emplace(key(todo.front()), 1);
  while (!todo.empty()) {
    FqMatrix g = std::move(todo.front());
    todo.pop_front();
    for (const auto& s : ctx.generators) {
      FqMatrix h = ff::mul(s, g, ctx.q);
      if (seen.emplace(key(h), 1).second) {
        if (static_cast<long>(seen.size()) > cap) throw BudgetExceeded("group exceeds " + std::to_string(cap));
        todo.push_back(std::move(h));
      }
    }
  }
  return static_cast<long>(seen.size());
}

// x = A J^{-1} with A antisymmetric, from the n(2n-1) entries above the diagonal.
inline FqMatrix minus_theta_element(const SymplecticContext& ctx, const std::vector<int>& upper) {
  const int d = ctx.dim();
  FqMatrix a(d, d);
  std::size_t k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      a(i, j) = upper[k];
      a(j, i) = ff::mod(-upper[k], ctx.q);
      ++k;
    }
  return ff::mul(a, ctx.Jinv, ctx.q);
}

namespace detail {

// calls visit for every vector of `len` digits in [0, q)
template <class F>
void for_each_tuple(int len, int q, F&& visit) {
  std::vector<int> t(static_cast<std::size_t>(len), 0);
  while (true) {
    visit(t);
    int i = 0;
    while (i < len && ++t[static_cast<std::size_t>(i)] == q) t[static_cast<std::size_t>(i++)] = 0;
    if (i == len) return;
  }
}

inline std::string point_key(const ExoticPoint& z) {
  std::string s(z.x.e.begin(), z.x.e.end());
  s.append(z.v.e.begin(), z.v.e.end());
  return s;
}

inline long checked_pow(int q, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

inline std::vector<ExoticPoint> product_with_vectors(const SymplecticContext& ctx, const std::vector<FqMatrix>& xs,
                                                     long budget) {
  const int d = ctx.dim();
  if (static_cast<long>(xs.size()) * checked_pow(ctx.q, d) > budget)
    throw BudgetExceeded("point set of size " + std::to_string(static_cast<long>(xs.size()) * checked_pow(ctx.q, d)) +
                         " exceeds the budget " + std::to_string(budget));
  std::vector<ExoticPoint> out;
  for (const auto& x : xs)
    for_each_tuple(d, ctx.q, [&](const std::vector<int>& t) {
      FqMatrix v(d, 1);
      v.e = t;
      out.push_back({x, v});
    });
  return out;
}

}  // namespace detail

inline constexpr long kDefaultBudget = 2'000'000;

// All (x, v) with x in g^{-theta} nilpotent and v in V, over F_q.
inline std::vector<ExoticPoint> enumerate_exotic_cone(const SymplecticContext& ctx, long budget = kDefaultBudget) {
  const int d = ctx.dim();
  std::vector<FqMatrix> nil;
  detail::for_each_tuple(ctx.n * (2 * ctx.n - 1), ctx.q, [&](const std::vector<int>& a) {
    FqMatrix x = minus_theta_element(ctx, a);
    if (ff::power(x, d, ctx.q).is_zero()) nil.push_back(std::move(x));
  });
  return detail::product_with_vectors(ctx, nil, budget);
}

inline ExoticPoint act(const SymplecticContext& ctx, std::size_t gen, const ExoticPoint& z) {
  return {ff::mul(ff::mul(ctx.generators[gen], z.x, ctx.q), ctx.inverses[gen], ctx.q),
          ff::mul(ctx.generators[gen], z.v, ctx.q)};
}

/*
  Normal form attached to (mu1; mu2): y is the nilpotent Jordan matrix of
  type nu = mu1 + mu2 on span(e_1..e_n), with basis vectors v_{i,j}
  allocated block by block and y v_{i,j} = v_{i,j-1}; x = y - theta(y) and
  v = sum_i v_{i, mu1_i}.
*/
inline ExoticPoint normal_form(const SymplecticContext& ctx, const Bipartition& b) {
  if (b.size() != ctx.n) throw SizeMismatch("normal form needs a bipartition of " + std::to_string(ctx.n));
  const int d = ctx.dim();
  FqMatrix y(d, d), v(d, 1);
  const std::size_t m = std::max(b.first.length(), b.second.length());
  int off = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int nu = b.first[i] + b.second[i];
    for (int j = 2; j <= nu; ++j) y(off + j - 2, off + j - 1) = 1;
    if (b.first[i] > 0) v(off + b.first[i] - 1, 0) = 1;
    off += nu;
  }
  FqMatrix x = ff::add(y, ctx.theta_lie(y), ctx.q, -1);
  return {x, v};
}

struct CensusOrbit {
  Bipartition label;
  long size = 0;
  ExoticPoint representative;
};

struct OrbitCensus {
  int n = 0;
  int q = 0;
  long total = 0;
  std::vector<CensusOrbit> orbits;  // in enumerate_bipartitions order
};

namespace detail {

// Orbit id per point (BFS under the generators); the set must be H-stable.
inline std::unordered_map<std::string, int> orbit_ids(const SymplecticContext& ctx,
                                                      const std::vector<ExoticPoint>& points, int& count) {
  std::unordered_map<std::string, int> id;
  id.reserve(points.size() * 2);
  for (const auto& z : points) id.emplace(point_key(z), -1);
  count = 0;
  for (const auto& start : points) {
    auto& slot = id[point_key(start)];
    if (slot >= 0) continue;
    slot = count;
    std::deque<ExoticPoint> todo{start};
    while (!todo.empty()) {
      ExoticPoint z = std::move(todo.front());
      todo.pop_front();
      for (std::size_t g = 0; g < ctx.generators.size(); ++g) {
        ExoticPoint w = act(ctx, g, z);
        auto it = id.find(point_key(w));
        if (it == id.end()) throw DecompositionFailure("point set is not stable under H");
        if (it->second < 0) {
          it->second = count;
          todo.push_back(std::move(w));
        }
      }
    }
    ++count;
  }
  return id;
}

}  // namespace detail

/*
  Splits the points into H^F-orbits and labels each orbit by the normal form
  it contains. Every orbit must contain exactly one normal form.
*/
inline OrbitCensus orbit_decompose(const SymplecticContext& ctx, const std::vector<ExoticPoint>& points) {
  int count = 0;
  auto id = detail::orbit_ids(ctx, points, count);
  std::vector<long> sizes(static_cast<std::size_t>(count), 0);
  for (const auto& [k, o] : id) ++sizes[static_cast<std::size_t>(o)];
  std::vector<int> labelled(static_cast<std::size_t>(count), -1);
  OrbitCensus census{ctx.n, ctx.q, static_cast<long>(points.size()), {}};
  for (const auto& b : enumerate_bipartitions(ctx.n)) {
    ExoticPoint nf = normal_form(ctx, b);
    auto it = id.find(detail::point_key(nf));
    if (it == id.end()) throw UnlabeledOrbit("normal form of " + b.to_string() + " is not among the points");
    auto o = static_cast<std::size_t>(it->second);
    if (labelled[o] >= 0) throw UnlabeledOrbit("normal forms of two labels share an orbit, " + b.to_string());
    labelled[o] = static_cast<int>(census.orbits.size());
    census.orbits.push_back({b, sizes[o], nf});
  }
  for (std::size_t o = 0; o < labelled.size(); ++o)
    if (labelled[o] < 0) throw UnlabeledOrbit("orbit of size " + std::to_string(sizes[o]) + " holds no normal form");
  return census;
}

// Jordan type of a nilpotent matrix from the ranks of its powers.
inline Partition jordan_type(const FqMatrix& x, int q) {
  std::vector<int> ranks{x.rows};
  FqMatrix pw = FqMatrix::identity(x.rows);
  while (ranks.back() > 0) {
    pw = ff::mul(pw, x, q);
    int r = ff::rank(pw, q);
    if (r == ranks.back()) throw DimensionMismatch("jordan_type needs a nilpotent matrix");
    ranks.push_back(r);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<int> parts;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    int ge = ranks[k - 1] - ranks[k];
    int ge_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < ge - ge_next; ++c) parts.push_back(static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

// nu u nu with nu = mu1 + mu2
inline Partition expected_jordan_type(const Bipartition& b) {
  std::vector<int> parts;
  const std::size_t m = std::max(b.first.length(), b.second.length());
  for (std::size_t i = 0; i < m; ++i) {
    parts.push_back(b.first[i] + b.second[i]);
    parts.push_back(b.first[i] + b.second[i]);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

namespace detail {

// symplectic form <a, b> = a^T J b
inline int form(const SymplecticContext& ctx, const std::vector<int>& a, const std::vector<int>& b) {
  const int n = ctx.n;
  long s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(n + i)] -
                                   static_cast<long>(a[static_cast<std::size_t>(n + i)]) * b[static_cast<std::size_t>(i)];
  return ff::mod(s, ctx.q);
}

// reduced row echelon basis; used both as a canonical key and for membership tests
inline FqMatrix span_rref(const std::vector<std::vector<int>>& vecs, int d, int q) {
  FqMatrix m(static_cast<int>(vecs.size()), d);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < d; ++j) m(static_cast<int>(i), j) = vecs[i][static_cast<std::size_t>(j)];
  int r = ff::echelon(m, q);
  FqMatrix out(r, d);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = m(i, j);
  return out;
}

inline bool in_span(const std::vector<std::vector<int>>& basis, const std::vector<int>& w, int d, int q) {
  auto ext = basis;
  ext.push_back(w);
  return span_rref(ext, d, q).rows == span_rref(basis, d, q).rows;
}

inline std::vector<int> apply(const FqMatrix& x, const std::vector<int>& w, int q) {
  std::vector<int> r(static_cast<std::size_t>(x.rows), 0);
  for (int i = 0; i < x.rows; ++i) {
    long s = 0;
    for (int j = 0; j < x.cols; ++j) s += static_cast<long>(x(i, j)) * w[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = ff::mod(s, q);
  }
  return r;
}

// vectors orthogonal to all of `basis`
inline std::vector<std::vector<int>> perp(const SymplecticContext& ctx, const std::vector<std::vector<int>>& basis) {
  const int d = ctx.dim();
  FqMatrix m(static_cast<int>(basis.size()), d);
  // w is in the perp iff (b^T J) w = 0 for each basis vector b
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<int> bj(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
      long s = 0;
      for (int k = 0; k < d; ++k) s += static_cast<long>(basis[i][static_cast<std::size_t>(k)]) * ctx.J(k, c);
      bj[static_cast<std::size_t>(c)] = ff::mod(s, ctx.q);
    }
    for (int c = 0; c < d; ++c) m(static_cast<int>(i), c) = bj[static_cast<std::size_t>(c)];
  }
  int r = ff::echelon(m, ctx.q);
  // null space basis from the echelon form
  std::vector<int> pivot_col;
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < d; ++c)
      if (m(i, c)) {
        pivot_col.push_back(c);
        break;
      }
  std::vector<std::vector<int>> out;
  for (int f = 0; f < d; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    w[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = ff::mod(-m(i, f), ctx.q);
    out.push_back(std::move(w));
  }
  return out;
}

inline bool stable_under(const FqMatrix& x, const std::vector<std::vector<int>>& basis, int d, int q) {
  for (const auto& b : basis)
    if (!in_span(basis, apply(x, b, q), d, q)) return false;
  return true;
}

}  // namespace detail

/*
  Number of F_q-rational complete isotropic flags F_1 < ... < F_n with
  x F_i in F_i, x F_i^perp in F_i^perp for all i, and v in F_n.
*/
inline long split_green_count(const SymplecticContext& ctx, const ExoticPoint& z) {
  const int d = ctx.dim(), q = ctx.q;
  std::vector<std::vector<int>> all;
  detail::for_each_tuple(d, q, [&](const std::vector<int>& t) {
    if (std::any_of(t.begin(), t.end(), [](int c) { return c != 0; })) all.push_back(t);
  });
  std::vector<int> vv = z.v.e;
  long count = 0;
  std::function<void(std::vector<std::vector<int>>)> extend = [&](std::vector<std::vector<int>> flag) {
    if (static_cast<int>(flag.size()) == ctx.n) {
      if (detail::in_span(flag, vv, d, q)) ++count;
      return;
    }
    std::vector<std::string> seen;
    for (const auto& w : all) {
      if (!flag.empty() && detail::in_span(flag, w, d, q)) continue;
      bool orth = true;
      for (const auto& f : flag) orth = orth && detail::form(ctx, f, w) == 0;
      if (!orth) continue;
      auto next = flag;
      next.push_back(w);
      FqMatrix key = detail::span_rref(next, d, q);
      std::string k(key.e.begin(), key.e.end());
      if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
      seen.push_back(k);
      if (!detail::stable_under(z.x, next, d, q)) continue;
      if (!detail::stable_under(z.x, detail::perp(ctx, next), d, q)) continue;
      extend(next);
    }
  };
  extend({});
  return count;
}

/*
  Number of H^F-orbits on G^{iota theta, F} x V, where
  G^{iota theta} = {A J^{-1} : A invertible antisymmetric}.
*/
inline long full_space_orbit_count(const SymplecticContext& ctx, long budget = kDefaultBudget) {
  std::vector<FqMatrix> gs;
  detail::for_each_tuple(ctx.n * (2 * ctx.n - 1), ctx.q, [&](const std::vector<int>& a) {
    FqMatrix g = minus_theta_element(ctx, a);
    if (ff::rank(g, ctx.q) == ctx.dim()) gs.push_back(std::move(g));
  });
  auto points = detail::product_with_vectors(ctx, gs, budget);
  int count = 0;
  detail::orbit_ids(ctx, points, count);
  return count;
}

// ---------------------------------------------------------------------------
// Transversal slice, over Q.

struct SliceReport {
  Bipartition label;
  int dim_bracket = 0;        // dim [g, x]
  int dim_u = 0;              // dim U
  int dim_bracket_theta = 0;  // dim [g^theta, x]
  int dim_u_minus = 0;        // dim U^{-theta}
  int dim_d = 0;
  bool direct_sum_g = false;          // [g, x] + U = g, direct
  bool theta_stable = false;          // theta(U) = U
  bool direct_sum_minus = false;      // [g^theta, x] + U^{-theta} = g^{-theta}, direct
  bool complement_to_tangent = false;  // U^{-theta} + D complements the tangent space at (x, v)
  bool weights_positive = false;
  bool index_weights_positive = false;  // mu1_{i2} - mu1_{i1} + s + 1 >= 1 for every z_{i1,i2,s}
  bool passed() const {
    return direct_sum_g && theta_stable && direct_sum_minus && complement_to_tangent && weights_positive &&
           index_weights_positive;
  }
};

namespace detail {

using QMatrix = std::vector<Rational>;  // N x N, row major

inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[piv]);
    const auto& pr = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / pr[c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * pr[j];
    }
    ++r;
  }
  return r;
}

struct SliceSetup {
  int n = 0, N = 0;
  std::vector<int> mu1, mu2, nu;
  std::vector<std::vector<int>> idx;  // idx[i][j-1] = position of v_{i,j} in e_1..e_n
  std::vector<int> weight;            // xi-weight of each basis vector of V
  QMatrix J, Jinv, x;
  std::vector<Rational> v;

  int ve(std::size_t i, int j) const { return idx[i][static_cast<std::size_t>(j - 1)]; }
  int vp(std::size_t i, int j) const { return n + idx[i][static_cast<std::size_t>(j - 1)]; }

  QMatrix mul(const QMatrix& a, const QMatrix& b) const {
    QMatrix c(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        const Rational& x0 = a[static_cast<std::size_t>(i * N + k)];
        if (x0 == 0) continue;
        for (int j = 0; j < N; ++j) c[static_cast<std::size_t>(i * N + j)] += x0 * b[static_cast<std::size_t>(k * N + j)];
      }
    return c;
  }
  QMatrix transpose(const QMatrix& a) const {
    QMatrix t(a.size());
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) t[static_cast<std::size_t>(j * N + i)] = a[static_cast<std::size_t>(i * N + j)];
    return t;
  }
  QMatrix theta(const QMatrix& z) const {
    QMatrix r = mul(mul(J, transpose(z)), Jinv);
    for (auto& c : r) c = -c;
    return r;
  }
  QMatrix unit(int a, int b) const {
    QMatrix z(static_cast<std::size_t>(N * N));
    z[static_cast<std::size_t>(a * N + b)] = 1;
    return z;
  }
  QMatrix bracket_x(const QMatrix& z) const {  // [z, x]
    QMatrix a = mul(z, x), b = mul(x, z);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  }
  std::vector<Rational> apply_v(const QMatrix& z) const {
    std::vector<Rational> r(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r[static_cast<std::size_t>(i)] += z[static_cast<std::size_t>(i * N + j)] * v[static_cast<std::size_t>(j)];
    return r;
  }
};

inline SliceSetup slice_setup(const Bipartition& b) {
  SliceSetup s;
  const std::size_t m = std::max(b.first.length(), b.second.length());
  s.n = b.size();
  s.N = 2 * s.n;
  for (std::size_t i = 0; i < m; ++i) {
    s.mu1.push_back(b.first[i]);
    s.mu2.push_back(b.second[i]);
    s.nu.push_back(b.first[i] + b.second[i]);
  }
  s.weight.assign(static_cast<std::size_t>(s.N), 0);
  int k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    s.idx.emplace_back();
    for (int j = 1; j <= s.nu[i]; ++j) s.idx[i].push_back(k++);
    for (int j = 1; j <= s.nu[i]; ++j) {
      s.weight[static_cast<std::size_t>(s.ve(i, j))] = j - s.mu1[i] - 1;
      s.weight[static_cast<std::size_t>(s.vp(i, j))] = s.mu2[i] - j;
    }
  }
  const int n = s.n, N = s.N;
  s.J.assign(static_cast<std::size_t>(N * N), 0);
  s.Jinv.assign(static_cast<std::size_t>(N * N), 0);
  for (int a = 0; a < n; ++a) {
    s.J[static_cast<std::size_t>(a * N + n + a)] = 1;
    s.J[static_cast<std::size_t>((n + a) * N + a)] = -1;
    s.Jinv[static_cast<std::size_t>(a * N + n + a)] = -1;
    s.Jinv[static_cast<std::size_t>((n + a) * N + a)] = 1;
  }
  QMatrix y(static_cast<std::size_t>(N * N));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 2; j <= s.nu[i]; ++j) y[static_cast<std::size_t>(s.ve(i, j - 1) * N + s.ve(i, j))] = 1;
  QMatrix ty = s.theta(y);
  s.x = y;
  for (std::size_t i = 0; i < y.size(); ++i) s.x[i] -= ty[i];
  s.v.assign(static_cast<std::size_t>(N), 0);
  for (std::size_t i = 0; i < m; ++i)
    if (s.mu1[i] > 0) s.v[static_cast<std::size_t>(s.ve(i, s.mu1[i]))] += 1;
  return s;
}

}  // namespace detail

/*
  Rank checks for the slice at the normal form of b, over Q. In the basis
  v_{i,j} = e_{(i,j)}, v'_{i,j} = f_{(i,j)} (so x v_{i,j} = v_{i,j-1} and
  x v'_{i,j} = v'_{i,j+1}), U is spanned by, for
  max(0, nu_{i1} - nu_{i2}) <= s <= nu_{i1} - 1:
    z = (v_{i2,1} -> v_{i1,s+1}) together with theta(z);
    the mixed maps (v_{i2,1} -> v'_{i1,nu_{i1}-s}) and (v'_{i2,nu_{i2}} -> v_{i1,s+1}):
      with theta(z) when i1 < i2, skipped when i1 > i2, and for i1 = i2
      whichever of z +- theta(z) is independent of [g, x] + U so far.
  D = span{v_{i,j} : j > mu1_i} + span{v'_{i,j} : j <= mu2_i}.
*/
inline SliceReport slice_check(const Bipartition& b, bool throw_on_fail = true) {
  if (b.size() > kMaxOracleRank) throw SizeMismatch("slice check is limited to rank " + std::to_string(kMaxOracleRank));
  detail::SliceSetup s = detail::slice_setup(b);
  const int N = s.N;
  const std::size_t m = s.nu.size();
  SliceReport rep;
  rep.label = b;

  std::vector<std::vector<Rational>> bracket;
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) bracket.push_back(s.bracket_x(s.unit(a, c)));
  rep.dim_bracket = detail::rational_rank(bracket);

  std::vector<detail::QMatrix> U;
  rep.index_weights_positive = true;
  auto rank_with = [&](const std::vector<detail::QMatrix>& extra) {
    auto rows = bracket;
    rows.insert(rows.end(), U.begin(), U.end());
    rows.insert(rows.end(), extra.begin(), extra.end());
    return detail::rational_rank(rows);
  };
  for (std::size_t i1 = 0; i1 < m; ++i1)
    for (std::size_t i2 = 0; i2 < m; ++i2)
      for (int sh = std::max(0, s.nu[i1] - s.nu[i2]); sh <= s.nu[i1] - 1; ++sh) {
        if (s.mu1[i2] - s.mu1[i1] + sh + 1 < 1) rep.index_weights_positive = false;
        auto z1 = s.unit(s.ve(i1, sh + 1), s.ve(i2, 1));
        U.push_back(z1);
        U.push_back(s.theta(z1));
        for (const auto& z : {s.unit(s.vp(i1, s.nu[i1] - sh), s.ve(i2, 1)), s.unit(s.ve(i1, sh + 1), s.vp(i2, s.nu[i2]))}) {
          auto tz = s.theta(z);
          if (i1 < i2) {
            U.push_back(z);
            U.push_back(tz);
          } else if (i1 == i2) {
            const int base = rank_with({});
            for (int sign : {1, -1}) {
              detail::QMatrix c = z;
              for (std::size_t k = 0; k < c.size(); ++k) c[k] += sign * tz[k];
              if (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r == 0; })) continue;
              if (rank_with({c}) > base) {
                U.push_back(c);
                break;
              }
            }
          }
        }
      }
  rep.dim_u = detail::rational_rank(U);
  rep.direct_sum_g = rep.dim_u == static_cast<int>(U.size()) && rep.dim_bracket + rep.dim_u == N * N &&
                     rank_with({}) == N * N;
  {
    auto both = U;
    for (const auto& u : U) both.push_back(s.theta(u));
    rep.theta_stable = detail::rational_rank(both) == rep.dim_u;
  }

  std::vector<std::vector<Rational>> u_minus, g_theta, g_minus;
  for (const auto& u : U) {
    auto tu = s.theta(u);
    detail::QMatrix h(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) h[k] = (u[k] - tu[k]) / 2;
    u_minus.push_back(h);
  }
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) {
      auto z = s.unit(a, c), tz = s.theta(z);
      detail::QMatrix p(z.size()), q(z.size());
      for (std::size_t k = 0; k < z.size(); ++k) {
        p[k] = (z[k] + tz[k]) / 2;
        q[k] = (z[k] - tz[k]) / 2;
      }
      g_theta.push_back(p);
      g_minus.push_back(q);
    }
  const int dim_minus = detail::rational_rank(g_minus);
  std::vector<std::vector<Rational>> br_theta;
  for (const auto& z : g_theta) br_theta.push_back(s.bracket_x(z));
  rep.dim_bracket_theta = detail::rational_rank(br_theta);
  rep.dim_u_minus = detail::rational_rank(u_minus);
  {
    auto rows = br_theta;
    rows.insert(rows.end(), u_minus.begin(), u_minus.end());
    rep.direct_sum_minus =
        rep.dim_bracket_theta + rep.dim_u_minus == dim_minus && detail::rational_rank(rows) == dim_minus;
  }

  std::vector<int> dvec;
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = s.mu1[i] + 1; j <= s.nu[i]; ++j) dvec.push_back(s.ve(i, j));
    for (int j = 1; j <= s.mu2[i]; ++j) dvec.push_back(s.vp(i, j));
  }
  rep.dim_d = static_cast<int>(dvec.size());
  std::vector<std::vector<Rational>> tangent, comp;
  for (const auto& z : g_theta) {
    auto row = s.bracket_x(z);
    auto zv = s.apply_v(z);
    row.insert(row.end(), zv.begin(), zv.end());
    tangent.push_back(std::move(row));
  }
  for (const auto& u : u_minus) {
    auto row = u;
    row.resize(static_cast<std::size_t>(N * N + N));
    comp.push_back(std::move(row));
  }
  for (int d : dvec) {
    std::vector<Rational> row(static_cast<std::size_t>(N * N + N));
    row[static_cast<std::size_t>(N * N + d)] = 1;
    comp.push_back(std::move(row));
  }
  {
    const int rt = detail::rational_rank(tangent), rc = detail::rational_rank(comp);
    auto rows = tangent;
    rows.insert(rows.end(), comp.begin(), comp.end());
    rep.complement_to_tangent = rt + rc == dim_minus + N && detail::rational_rank(rows) == dim_minus + N;
  }

  rep.weights_positive = true;
  for (const auto& u : u_minus)
    for (int a = 0; a < N; ++a)
      for (int c = 0; c < N; ++c)
        if (u[static_cast<std::size_t>(a * N + c)] != 0 &&
            s.weight[static_cast<std::size_t>(a)] - s.weight[static_cast<std::size_t>(c)] + 1 < 1)
          rep.weights_positive = false;
  for (int d : dvec)
    if (s.weight[static_cast<std::size_t>(d)] + 1 < 1) rep.weights_positive = false;

  if (throw_on_fail) {
    if (!rep.weights_positive || !rep.index_weights_positive)
      throw NonpositiveWeight("slice at " + b.to_string() + " has a nonpositive weight");
    if (!rep.passed()) throw DecompositionFailure("slice decomposition fails at " + b.to_string());
  }
  return rep;
}

}  // namespace exotic
