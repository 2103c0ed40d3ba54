#pragma once

// Fake degrees and the Omega matrices, by the coinvariant route and the torus route.

#include <memory>
#include <vector>

#include "exotic/exact_algebra.hpp"
#include "exotic/partitions.hpp"
#include "exotic/weyl_characters.hpp"

namespace exotic {

inline GroupKind kind_for(int r) {
  if (r == 2) return GroupKind::Bn;
  if (r == 1) return GroupKind::Sn;
  throw SizeMismatch("r must be 1 or 2");
}

// N: number of reflections, n^2 for W_n and n(n-1)/2 for S_n.
inline int reflection_count(int n, int r) { return r == 2 ? n * n : n * (n - 1) / 2; }

namespace detail {

// prod_{i=1..n} (t^{ir} - 1) / det(t - w) for every class; always a polynomial.
inline std::vector<ExactPoly> coinvariant_factors(const CharTable& tab) {
  const int r = reflection_rank(tab.kind);
  ExactPoly top(1);
  for (int i = 1; i <= tab.rank; ++i)
    top *= ExactPoly::monomial(Rational(1), static_cast<std::size_t>(i * r)) - ExactPoly(1);
  std::vector<ExactPoly> f;
  for (const auto& c : tab.classes) f.push_back(exact_quotient(top, reflection_charpoly(tab.kind, c.label)));
  return f;
}

inline ExactPoly checked_fake_degree(const ExactPoly& r) {
  if (!has_nonnegative_integer_coefficients(r))
    throw NotPolynomial("fake degree " + r.to_string() + " does not have nonnegative integer coefficients");
  return r;
}

}  // namespace detail

/*
  R(chi) = prod(t^{ir}-1)/|W| * sum_w eps(w) chi(w) / det(t - w), summed over
  classes with class-size weights. `values` is indexed like tab.classes.
*/
inline ExactPoly fake_degree(const CharTable& tab, const std::vector<long>& values) {
  if (values.size() != tab.classes.size()) throw DimensionMismatch("character has wrong number of class values");
  auto f = detail::coinvariant_factors(tab);
  ExactPoly r;
  const Rational w(tab.order());
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (values[c] == 0) continue;
    Rational coeff = Rational(tab.classes[c].size) * sign_value(tab.classes[c].label) * values[c] / w;
    r += f[c] * coeff;
  }
  return detail::checked_fake_degree(r);
}

inline ExactPoly fake_degree(GroupKind kind, int n, const std::vector<long>& values) {
  return fake_degree(*character_table(kind, n), values);
}

struct OmegaMatrix {
  int rank = 0;
  int r = 2;
  std::vector<Bipartition> labels;  // (lambda; -) for r = 1
  std::vector<std::vector<ExactPoly>> entries;

  const ExactPoly& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  std::size_t size() const { return labels.size(); }
};

/*
  omega_{L,M} = t^N R(chi^L chi^M eps). Since eps^2 = 1 the sign drops out of
  the class sum, leaving |W|^{-1} sum_c |C| chi^L(c) chi^M(c) F_c(t).
*/
inline OmegaMatrix omega_matrix(int n, int r) {
  auto tab = character_table(kind_for(r), n);
  auto f = detail::coinvariant_factors(*tab);
  const auto shift = static_cast<std::size_t>(reflection_count(n, r));
  const Rational w(tab->order());
  OmegaMatrix om{n, r, tab->irreps, {}};
  const std::size_t m = tab->irreps.size();
  om.entries.assign(m, std::vector<ExactPoly>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      ExactPoly acc;
      for (std::size_t c = 0; c < f.size(); ++c) {
        long v = tab->values[i][c] * tab->values[j][c];
        if (v == 0) continue;
        acc += f[c] * (Rational(tab->classes[c].size) * v / w);
      }
      acc = detail::checked_fake_degree(acc).shift_up(shift);
      om.entries[i][j] = acc;
      om.entries[j][i] = acc;
    }
  return om;
}

/*
  The same matrix evaluated at q through torus orders:
    r = 2: |Sp_2n(q)| / |W_n| * sum_w chi(w) chi'(w) / |T_w^theta|
    r = 1: |GL_n(q)| / n!     * sum_w chi(w) chi'(w) / prod(q^{nu_i} - 1)
*/
inline std::vector<std::vector<Rational>> omega_via_torus(int n, int r, const Rational& q) {
  auto tab = character_table(kind_for(r), n);
  auto orders = group_orders(n);
  Rational big = (r == 2 ? orders.sp : orders.gl).evaluate(q);
  std::vector<Rational> inv;  // |C| / |T_w|(q)
  for (const auto& c : tab->classes) {
    Rational t = reflection_charpoly(tab->kind, c.label).evaluate(q);
    if (t == 0) throw SingularEvaluation("torus order vanishes at q = " + q.get_str());
    inv.push_back(Rational(c.size) / t);
  }
  big /= Rational(tab->order());
  const std::size_t m = tab->irreps.size();
  std::vector<std::vector<Rational>> out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational acc = 0;
      for (std::size_t c = 0; c < inv.size(); ++c) acc += inv[c] * (tab->values[i][c] * tab->values[j][c]);
      out[i][j] = out[j][i] = acc * big;
    }
  return out;
}

}  // namespace exotic
