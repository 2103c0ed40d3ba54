#pragma once

// Green functions on unipotent orbits, IC stalk polynomials, and the orthogonality relations.

#include <optional>
#include <string>
#include <vector>

#include "exotic/exact_algebra.hpp"
#include "exotic/fake_degrees.hpp"
#include "exotic/partitions.hpp"
#include "exotic/shoji_solver.hpp"
#include "exotic/weyl_characters.hpp"

namespace exotic {

EXOTIC_ERROR(EvennessViolation);
EXOTIC_ERROR(IdentityFailure);
EXOTIC_ERROR(DimensionInconsistency);

enum class Family { exotic, symmetric };

inline int family_r(Family f) { return f == Family::exotic ? 2 : 1; }
inline std::string family_name(Family f) { return f == Family::exotic ? "exotic" : "symmetric"; }
inline Family parse_family(const std::string& s) {
  if (s == "exotic") return Family::exotic;
  if (s == "symmetric") return Family::symmetric;
  throw SizeMismatch("unknown family '" + s + "'");
}

/*
  Unsigned Green values G(w, M) as polynomials in q; the actual value is
  (-1)^sign_exponent G(w, M).
    exotic:    G(w, M)  = sum_L chi^L(w) K~_{L,M}(q)
    symmetric: G(w, nu) = Psi_w(q) sum_mu chi^mu(w) K~_{mu,nu}(q^2)
*/
struct GreenTable {
  Family family = Family::exotic;
  int rank = 0;
  std::vector<ClassLabel> rows;
  std::vector<Integer> class_sizes;
  std::vector<Bipartition> cols;
  std::vector<std::vector<ExactPoly>> entries;
  int sign_exponent = 0;

  ExactPoly signed_entry(std::size_t i, std::size_t j) const {
    return sign_exponent % 2 ? -entries[i][j] : entries[i][j];
  }
};

struct ICTable {
  Family family = Family::exotic;
  int rank = 0;
  std::vector<Bipartition> labels;
  std::vector<std::vector<ExactPoly>> entries;  // row L (closure), column M (stalk)
};

// Orbit sizes xi_M(q) for the family: xi(q) for exotic, xi^{r=1}(q^2) for symmetric.
inline std::vector<ExactPoly> family_orbit_sizes(Family f, const KostkaSolution& sol) {
  if (f == Family::exotic) return sol.xi;
  std::vector<ExactPoly> out;
  for (const auto& x : sol.xi) out.push_back(x.substitute_t_squared());
  return out;
}

inline GreenTable green_table(Family f, int n) {
  const int r = family_r(f);
  auto sol = modified_kostka(n, r);
  auto tab = character_table(kind_for(r), n);
  GreenTable g;
  g.family = f;
  g.rank = n;
  g.cols = sol->labels;
  g.sign_exponent = n;
  std::vector<std::size_t> irrep_of(sol->labels.size());
  for (std::size_t k = 0; k < sol->labels.size(); ++k) irrep_of[k] = tab->irrep_index(sol->labels[k]);
  for (std::size_t c = 0; c < tab->classes.size(); ++c) {
    g.rows.push_back(tab->classes[c].label);
    g.class_sizes.push_back(tab->classes[c].size);
    ExactPoly psi = f == Family::symmetric ? psi_poly(tab->classes[c].label.positive) : ExactPoly(1);
    std::vector<ExactPoly> row;
    for (std::size_t m = 0; m < sol->labels.size(); ++m) {
      ExactPoly acc;
      for (std::size_t l = 0; l < sol->labels.size(); ++l) {
        long chi = tab->values[irrep_of[l]][c];
        if (chi == 0 || sol->P[l][m].is_zero()) continue;
        const ExactPoly& k = sol->P[l][m];
        acc += (f == Family::exotic ? k : k.substitute_t_squared()) * Rational(chi);
      }
      row.push_back(psi * acc);
    }
    g.entries.push_back(std::move(row));
  }
  return g;
}

/*
  exotic:    IC_{L,M}(t) = t^{-a(L)} K~_{L,M}(t), which must lie in Z[t^2]
  symmetric: IC_{l,m}(t) = t^{-2n(l)} K~_{l,m}(t^2)
*/
inline ICTable ic_table(Family f, int n) {
  const int r = family_r(f);
  auto sol = modified_kostka(n, r);
  ICTable ic{f, n, sol->labels, {}};
  for (std::size_t l = 0; l < sol->labels.size(); ++l) {
    std::vector<ExactPoly> row;
    for (const auto& k : sol->P[l]) {
      ExactPoly p;
      if (f == Family::exotic) {
        auto a = static_cast<std::size_t>(a_value(sol->labels[l]));
        if (!k.is_zero() && k.valuation() < static_cast<int>(a))
          throw EvennessViolation("K~ at row " + sol->labels[l].to_string() + " is not divisible by t^a");
        p = k.shift_down(a);
        for (std::size_t i = 1; i < p.size(); i += 2)
          if (p[i] != 0) throw EvennessViolation("odd power in IC row " + sol->labels[l].to_string());
      } else {
        p = k.substitute_t_squared().shift_down(static_cast<std::size_t>(2 * n_value(sol->labels[l].first)));
      }
      if (!has_nonnegative_integer_coefficients(p))
        throw EvennessViolation("negative or fractional IC coefficient in row " + sol->labels[l].to_string());
      row.push_back(std::move(p));
    }
    ic.entries.push_back(std::move(row));
  }
  return ic;
}

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // offending pair and difference on failure
};

struct OrthogonalityReport {
  Family family = Family::exotic;
  int rank = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline void record(std::vector<IdentityCheck>& out, std::string name, const RatFunc& lhs, const RatFunc& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, {}};
  if (!c.passed) c.detail = "difference " + (lhs - rhs).to_string("q");
  out.push_back(std::move(c));
}

// both sides evaluated at small q as a cheap smoke test of the symbolic result
inline void record_numeric(std::vector<IdentityCheck>& out, const std::string& name, const RatFunc& lhs,
                           const RatFunc& rhs) {
  for (long q : {3L, 5L, 9L}) {
    Rational a = lhs.evaluate(Rational(q)), b = rhs.evaluate(Rational(q));
    if (a != b) {
      out.push_back({name + " at q=" + std::to_string(q), false, a.get_str() + " != " + b.get_str()});
      return;
    }
  }
}

inline void throw_on_failure(const OrthogonalityReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.passed) throw IdentityFailure(c.name + ": " + c.detail);
}

}  // namespace detail

/*
  (a) sum_M xi_M G(w,M) G(w',M) = delta |Z_W(w)| |H^F| / |T_w^theta|
  (b) with Q_L = |W|^{-1} sum_w chi^L(w) Q_{T_w}:
      sum_M xi_M Q_L(M) Q_L'(M) = |H^F| |W|^{-1} sum_w chi^L(w) chi^L'(w) / |T_w^theta|
  Both checked in Q(q). The report lists every pair; throws IdentityFailure
  when `throw_on_fail` is set and some identity fails.
*/
inline OrthogonalityReport verify_orthogonality_exotic(int n, bool throw_on_fail = true) {
  OrthogonalityReport rep{Family::exotic, n, {}};
  GreenTable g = green_table(Family::exotic, n);
  auto sol = modified_kostka(n, 2);
  auto tab = character_table(GroupKind::Bn, n);
  const ExactPoly h = group_orders(n).sp;
  const std::size_t nc = g.rows.size(), m = g.cols.size();
  const Rational w(tab->order());

  std::vector<ExactPoly> torus(nc);
  for (std::size_t c = 0; c < nc; ++c) torus[c] = torus_order(g.rows[c], TorusKind::theta);

  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a; b < nc; ++b) {
      ExactPoly lhs;
      for (std::size_t k = 0; k < m; ++k) lhs += sol->xi[k] * g.entries[a][k] * g.entries[b][k];
      RatFunc rhs;
      if (a == b) rhs = RatFunc(h * Rational(w / Rational(g.class_sizes[a])), torus[a]);
      std::string name = "green " + g.rows[a].to_string() + " x " + g.rows[b].to_string();
      detail::record(rep.checks, name, RatFunc(lhs), rhs);
      detail::record_numeric(rep.checks, name, RatFunc(lhs), rhs);
    }

  // Q_L(M) for every irrep L, signed values
  std::vector<std::vector<ExactPoly>> qv(m, std::vector<ExactPoly>(m));
  for (std::size_t l = 0; l < m; ++l) {
    const std::size_t li = tab->irrep_index(sol->labels[l]);
    for (std::size_t k = 0; k < m; ++k) {
      ExactPoly acc;
      for (std::size_t c = 0; c < nc; ++c) {
        long chi = tab->values[li][c];
        if (chi) acc += g.signed_entry(c, k) * (Rational(g.class_sizes[c]) * chi / w);
      }
      qv[l][k] = acc;
    }
  }
  for (std::size_t l = 0; l < m; ++l) {
    const std::size_t li = tab->irrep_index(sol->labels[l]);
    for (std::size_t l2 = l; l2 < m; ++l2) {
      const std::size_t lj = tab->irrep_index(sol->labels[l2]);
      ExactPoly lhs;
      for (std::size_t k = 0; k < m; ++k) lhs += sol->xi[k] * qv[l][k] * qv[l2][k];
      RatFunc rhs;
      for (std::size_t c = 0; c < nc; ++c) {
        long v = tab->values[li][c] * tab->values[lj][c];
        if (v) rhs += RatFunc(ExactPoly(Rational(g.class_sizes[c]) * v / w), torus[c]);
      }
      rhs = rhs * RatFunc(h);
      detail::record(rep.checks, "Q " + sol->labels[l].to_string() + " x " + sol->labels[l2].to_string(),
                     RatFunc(lhs), rhs);
    }
  }
  if (throw_on_fail) detail::throw_on_failure(rep);
  return rep;
}

/*
  Symmetric space, G = G(w, nu) on S_n classes and xi^sym_nu(q) = xi_nu(q^2):
  (a) sum_nu xi^sym_nu G(w,nu) G(w',nu)
        = delta q^{-n} |H^F| z_w prod(q^{w_i}+1) / prod(q^{w_i}-1)
  (b) Q^sym_l = |S_n|^{-1} sum_w chi^l(w) Psi_w(q)^{-1} Q^sym_{T_w}:
      sum_nu xi^sym Q^sym_l Q^sym_l' = |GL_n(q^2)| / n! sum_w chi^l chi^l' / prod(q^{2 w_i} - 1)
  (c) q^{-n} |Sp_2n(q)| = |GL_n(q^2)|
*/
inline OrthogonalityReport verify_orthogonality_symmetric(int n, bool throw_on_fail = true) {
  OrthogonalityReport rep{Family::symmetric, n, {}};
  GreenTable g = green_table(Family::symmetric, n);
  auto sol = modified_kostka(n, 1);
  auto tab = character_table(GroupKind::Sn, n);
  auto orders = group_orders(n);
  const ExactPoly gl2 = orders.gl.substitute_t_squared();
  const RatFunc hq = RatFunc(orders.sp, ExactPoly::monomial(Rational(1), static_cast<std::size_t>(n)));
  detail::record(rep.checks, "q^-n |Sp_2n(q)| = |GL_n(q^2)|", hq, RatFunc(gl2));

  const std::vector<ExactPoly> xi = family_orbit_sizes(Family::symmetric, *sol);
  const std::size_t nc = g.rows.size(), m = g.cols.size();
  const Rational w(tab->order());
  std::vector<ExactPoly> psi(nc), tor(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    psi[c] = psi_poly(g.rows[c].positive);
    tor[c] = torus_order(g.rows[c], TorusKind::iota_theta);
  }

  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a; b < nc; ++b) {
      ExactPoly lhs;
      for (std::size_t k = 0; k < m; ++k) lhs += xi[k] * g.entries[a][k] * g.entries[b][k];
      RatFunc rhs;
      if (a == b) rhs = hq * RatFunc(psi[a] * Rational(w / Rational(g.class_sizes[a])), tor[a]);
      std::string name = "green " + g.rows[a].to_string() + " x " + g.rows[b].to_string();
      detail::record(rep.checks, name, RatFunc(lhs), rhs);
      detail::record_numeric(rep.checks, name, RatFunc(lhs), rhs);
    }

  std::vector<std::vector<RatFunc>> qv(m, std::vector<RatFunc>(m));
  for (std::size_t l = 0; l < m; ++l) {
    const std::size_t li = tab->irrep_index(sol->labels[l]);
    for (std::size_t k = 0; k < m; ++k) {
      RatFunc acc;
      for (std::size_t c = 0; c < nc; ++c) {
        long chi = tab->values[li][c];
        if (chi) acc += RatFunc(g.signed_entry(c, k) * (Rational(g.class_sizes[c]) * chi / w), psi[c]);
      }
      qv[l][k] = acc;
    }
  }
  for (std::size_t l = 0; l < m; ++l) {
    const std::size_t li = tab->irrep_index(sol->labels[l]);
    for (std::size_t l2 = l; l2 < m; ++l2) {
      const std::size_t lj = tab->irrep_index(sol->labels[l2]);
      RatFunc lhs;
      for (std::size_t k = 0; k < m; ++k) lhs += RatFunc(xi[k]) * qv[l][k] * qv[l2][k];
      RatFunc rhs;
      for (std::size_t c = 0; c < nc; ++c) {
        long v = tab->values[li][c] * tab->values[lj][c];
        if (v) rhs += RatFunc(ExactPoly(Rational(g.class_sizes[c]) * v / w), tor[c].substitute_t_squared());
      }
      rhs = rhs * RatFunc(gl2);
      detail::record(rep.checks, "Q " + sol->labels[l].to_string() + " x " + sol->labels[l2].to_string(), lhs, rhs);
    }
  }
  if (throw_on_fail) detail::throw_on_failure(rep);
  return rep;
}

struct SpringerReport {
  int rank = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/*
  With dim X_uni = 2n^2 and dim O_L = 2n^2 - 2a(L): codimensions are
  nonnegative, ((n); -) is the unique orbit with a = 0, and deg xi_L = dim O_L.
  The symmetric analogue uses dim 2n^2 - 2n and codimension 4n(l) in q.
*/
inline SpringerReport springer_dimension_check(int n, bool throw_on_fail = true) {
  SpringerReport rep{n, {}};
  auto sol = modified_kostka(n, 2);
  const int dim = 2 * n * n;
  const Bipartition open = n > 0 ? Bipartition{Partition{n}, {}} : Bipartition{};
  for (std::size_t i = 0; i < sol->labels.size(); ++i) {
    const auto& b = sol->labels[i];
    const int a = a_value(b);
    IdentityCheck c{"exotic " + b.to_string(), true, {}};
    if (a < 0 || 2 * a > dim) {
      c.passed = false;
      c.detail = "codimension out of range";
    } else if (sol->xi[i].degree() != dim - 2 * a) {
      c.passed = false;
      c.detail = "deg xi = " + std::to_string(sol->xi[i].degree()) + ", expected " + std::to_string(dim - 2 * a);
    } else if ((a == 0) != (b == open)) {
      c.passed = false;
      c.detail = "a = 0 must single out the open orbit";
    }
    rep.checks.push_back(std::move(c));
  }
  auto sym = modified_kostka(n, 1);
  const auto xs = family_orbit_sizes(Family::symmetric, *sym);
  for (std::size_t i = 0; i < sym->labels.size(); ++i) {
    const int expect = 2 * n * n - 2 * n - 4 * n_value(sym->labels[i].first);
    IdentityCheck c{"symmetric " + sym->labels[i].first.to_string(), xs[i].degree() == expect, {}};
    if (!c.passed) c.detail = "deg xi = " + std::to_string(xs[i].degree()) + ", expected " + std::to_string(expect);
    rep.checks.push_back(std::move(c));
  }
  if (throw_on_fail)
    for (const auto& c : rep.checks)
      if (!c.passed) throw DimensionInconsistency(c.name + ": " + c.detail);
  return rep;
}

}  // namespace exotic
