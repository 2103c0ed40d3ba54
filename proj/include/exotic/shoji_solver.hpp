#pragma once

/*
  Triangular solver for P * Lambda * tP = Omega with Lambda diagonal,
  p_{L,L} prescribed and p_{L,M} = 0 unless M <= L. Run on the exotic Omega
  (r = 2) it gives the modified Kostka polynomials of double partitions; on
  the symmetric-group Omega (r = 1) it gives the classical ones.
*/

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "exotic/exact_algebra.hpp"
#include "exotic/fake_degrees.hpp"
#include "exotic/partitions.hpp"

namespace exotic {

EXOTIC_ERROR(InconsistentSystem);
EXOTIC_ERROR(ZeroDiagonal);

using LabelOrder = std::function<bool(const Bipartition&, const Bipartition&)>;
using DiagonalRule = std::function<ExactPoly(const Bipartition&)>;

struct KostkaSolution {
  int rank = 0;
  int r = 2;
  std::vector<Bipartition> labels;  // the total order actually used
  std::vector<std::vector<ExactPoly>> P;
  std::vector<ExactPoly> xi;

  std::size_t index(const Bipartition& b) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == b) return i;
    throw DimensionMismatch("unknown label " + b.to_string());
  }
  const ExactPoly& entry(const Bipartition& l, const Bipartition& m) const { return P[index(l)][index(m)]; }
  const ExactPoly& xi_of(const Bipartition& m) const { return xi[index(m)]; }

  PolyMatrix<Bipartition> p_matrix() const {
    PolyMatrix<Bipartition> out(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j) out(i, j) = RatFunc(P[i][j]);
    return out;
  }
  PolyMatrix<Bipartition> lambda_matrix() const {
    PolyMatrix<Bipartition> out(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) out(i, i) = RatFunc(xi[i]);
    return out;
  }
};

// Partial order and diagonal exponent for each family, on (lambda; -) labels when r = 1.
inline bool family_le(int r, const Bipartition& a, const Bipartition& b) {
  if (r == 2) return exotic_le(a, b);
  return dominance_le(a.first, b.first);
}

inline int diagonal_exponent(int r, const Bipartition& b) { return r == 2 ? a_value(b) : n_value(b.first); }

/*
  Processes labels in `order` (which must list smaller elements first). For
  each row L and each earlier column M:
    acc = omega_{LM} - sum_{nu before M} p_{L,nu} xi_nu p_{M,nu}
  If M <= L, p_{LM} = acc / (xi_M d(M)); otherwise acc must vanish.
  Then xi_L = (omega_{LL} - sum p_{L,nu}^2 xi_nu) / d(L)^2.
*/
inline KostkaSolution solve(const OmegaMatrix& omega, const LabelOrder& leq, const DiagonalRule& diag,
                            std::optional<std::vector<Bipartition>> order = std::nullopt) {
  std::vector<Bipartition> labels = order ? *order : omega.labels;
  const std::size_t m = labels.size();
  if (m != omega.size()) throw DimensionMismatch("order does not list every label of Omega");
  std::vector<std::size_t> src(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto it = std::find(omega.labels.begin(), omega.labels.end(), labels[i]);
    if (it == omega.labels.end()) throw DimensionMismatch("order lists a label missing from Omega");
    src[i] = static_cast<std::size_t>(it - omega.labels.begin());
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (leq(labels[j], labels[i]) && labels[i] != labels[j])
        throw InconsistentSystem("order " + labels[i].to_string() + " before " + labels[j].to_string() +
                                 " does not refine the partial order");

  KostkaSolution sol;
  sol.rank = omega.rank;
  sol.r = omega.r;
  sol.labels = labels;
  sol.P.assign(m, std::vector<ExactPoly>(m));
  sol.xi.assign(m, ExactPoly());
  std::vector<ExactPoly> d(m);
  for (std::size_t i = 0; i < m; ++i) {
    d[i] = diag(labels[i]);
    if (d[i].is_zero()) throw ZeroDiagonal("prescribed diagonal vanishes at " + labels[i].to_string());
  }
  // pxi[L][nu] = p_{L,nu} xi_nu, cached to halve the work in the inner sums
  std::vector<std::vector<ExactPoly>> pxi(m, std::vector<ExactPoly>(m));

  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t c = 0; c < l; ++c) {
      ExactPoly acc = omega(src[l], src[c]);
      for (std::size_t nu = 0; nu < c; ++nu) {
        if (pxi[l][nu].is_zero() || sol.P[c][nu].is_zero()) continue;
        acc -= pxi[l][nu] * sol.P[c][nu];
      }
      if (!leq(labels[c], labels[l])) {
        if (!acc.is_zero())
          throw InconsistentSystem("equation at incomparable pair (" + labels[l].to_string() + ", " +
                                   labels[c].to_string() + ") leaves " + acc.to_string());
        continue;
      }
      if (acc.is_zero()) continue;
      RatFunc q(acc, sol.xi[c] * d[c]);
      if (!q.is_polynomial())
        throw NotPolynomial("p" + labels[l].to_string() + labels[c].to_string() + " = " + q.to_string());
      sol.P[l][c] = q.to_polynomial();
      pxi[l][c] = sol.P[l][c] * sol.xi[c];
    }
    sol.P[l][l] = d[l];
    ExactPoly acc = omega(src[l], src[l]);
    for (std::size_t nu = 0; nu < l; ++nu)
      if (!pxi[l][nu].is_zero()) acc -= pxi[l][nu] * sol.P[l][nu];
    RatFunc x(acc, d[l] * d[l]);
    if (!x.is_polynomial()) throw NotPolynomial("xi" + labels[l].to_string() + " = " + x.to_string());
    sol.xi[l] = x.to_polynomial();
    if (sol.xi[l].is_zero()) throw ZeroDiagonal("xi vanishes at " + labels[l].to_string());
    if (!has_integer_coefficients(sol.xi[l]))
      throw NotPolynomial("xi" + labels[l].to_string() + " has non-integer coefficients");
    pxi[l][l] = d[l] * sol.xi[l];
  }
  return sol;
}

// P Lambda tP recomputed and compared with Omega; returns the first offending pair, if any.
inline std::optional<std::pair<Bipartition, Bipartition>> product_mismatch(const KostkaSolution& sol,
                                                                           const OmegaMatrix& omega) {
  const std::size_t m = sol.labels.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t oi = std::find(omega.labels.begin(), omega.labels.end(), sol.labels[i]) - omega.labels.begin();
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t oj = std::find(omega.labels.begin(), omega.labels.end(), sol.labels[j]) - omega.labels.begin();
      ExactPoly acc;
      for (std::size_t k = 0; k < m; ++k) {
        if (sol.P[i][k].is_zero() || sol.P[j][k].is_zero()) continue;
        acc += sol.P[i][k] * sol.xi[k] * sol.P[j][k];
      }
      if (acc != omega(oi, oj)) return std::make_pair(sol.labels[i], sol.labels[j]);
    }
  }
  return std::nullopt;
}

inline std::vector<Bipartition> default_order(int n, int r) {
  if (r == 2) return enumerate_bipartitions(n);
  std::vector<Bipartition> out;
  for (const auto& p : partitions_in_dominance_refinement(n)) out.push_back({p, {}});
  return out;
}

inline KostkaSolution solve_family(int n, int r, std::optional<std::vector<Bipartition>> order = std::nullopt) {
  OmegaMatrix om = omega_matrix(n, r);
  if (!order) order = default_order(n, r);
  return solve(
      om, [r](const Bipartition& a, const Bipartition& b) { return family_le(r, a, b); },
      [r](const Bipartition& b) {
        return ExactPoly::monomial(Rational(1), static_cast<std::size_t>(diagonal_exponent(r, b)));
      },
      order);
}

// Memoized modified Kostka table K~(n, r); entry (L, M) of P is K~_{L,M}(t).
inline std::shared_ptr<const KostkaSolution> modified_kostka(int n, int r) {
  kind_for(r);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const KostkaSolution>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({n, r}); it != cache.end()) return it->second;
  }
  auto sol = std::make_shared<const KostkaSolution>(solve_family(n, r));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, r), sol).first->second;
}

// xi_M(t), read as the number of F_q-points of the orbit of M.
inline std::map<Bipartition, ExactPoly> orbit_size_polys(const KostkaSolution& sol) {
  std::map<Bipartition, ExactPoly> out;
  for (std::size_t i = 0; i < sol.labels.size(); ++i) out.emplace(sol.labels[i], sol.xi[i]);
  return out;
}

// t^{-a(L)} K~_{L,M}(t) has only even powers of t and integer coefficients.
inline bool evenness_check(const KostkaSolution& sol) {
  if (sol.r != 2) throw SizeMismatch("evenness is a statement about the exotic table");
  for (std::size_t i = 0; i < sol.labels.size(); ++i) {
    const int a = diagonal_exponent(sol.r, sol.labels[i]);
    for (const auto& p : sol.P[i]) {
      if (p.is_zero()) continue;
      if (p.valuation() < a) return false;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const auto& c = p[k];
        if (c == 0) continue;
        if (c.get_den() != 1) return false;
        if ((static_cast<int>(k) - a) % 2 != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace exotic
