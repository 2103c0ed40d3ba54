#pragma once

// Named check suites shared by the command-line tool and the acceptance runner.

#include <string>
#include <vector>

#include "exotic/fake_degrees.hpp"
#include "exotic/ff_oracle.hpp"
#include "exotic/green_tables.hpp"
#include "exotic/partitions.hpp"
#include "exotic/shoji_solver.hpp"
#include "exotic/weyl_characters.hpp"

namespace exotic {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void absorb(const std::vector<IdentityCheck>& v) {
    for (const auto& c : v) expect(c.passed, c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
};

// Runs f, turning a library exception into a failure entry.
template <class F>
SuiteResult run_suite(const std::string& name, F&& f) {
  SuiteResult r{name, 0, {}};
  try {
    f(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  return r;
}

// Labels sorted by the diagonal exponent, ties broken in reverse of the default.
inline std::vector<Bipartition> alternative_order(int n, int r) {
  auto order = default_order(n, r);
  std::stable_sort(order.begin(), order.end(), [r](const Bipartition& a, const Bipartition& b) {
    int x = diagonal_exponent(r, a), y = diagonal_exponent(r, b);
    if (x != y) return x > y;
    return b < a;
  });
  return order;
}

inline SuiteResult suite_solver(int n, int r) {
  return run_suite("solver", [&](SuiteResult& s) {
    OmegaMatrix om = omega_matrix(n, r);
    auto sol = modified_kostka(n, r);
    s.expect(!product_mismatch(*sol, om).has_value(), "P Lambda tP != Omega");
    for (std::size_t i = 0; i < sol->labels.size(); ++i) {
      const auto& l = sol->labels[i];
      s.expect(sol->P[i][i] == ExactPoly::monomial(Rational(1), static_cast<std::size_t>(diagonal_exponent(r, l))),
               "diagonal at " + l.to_string());
      for (std::size_t j = 0; j < sol->labels.size(); ++j) {
        const bool le = family_le(r, sol->labels[j], l);
        s.expect(le != sol->P[i][j].is_zero(), "zero pattern at " + l.to_string() + ", " + sol->labels[j].to_string());
        s.expect(has_nonnegative_integer_coefficients(sol->P[i][j]),
                 "negative coefficient at " + l.to_string() + ", " + sol->labels[j].to_string());
      }
    }
    auto alt = solve_family(n, r, alternative_order(n, r));
    for (const auto& a : sol->labels) {
      s.expect(alt.xi_of(a) == sol->xi_of(a), "xi differs between refinements at " + a.to_string());
      for (const auto& b : sol->labels)
        s.expect(alt.entry(a, b) == sol->entry(a, b),
                 "refinements disagree at " + a.to_string() + ", " + b.to_string());
    }
  });
}

// r = 1 solver against t^{n(mu)} K_{lambda,mu}(1/t) from the charge statistic, for every rank up to n.
inline SuiteResult suite_charge(int n) {
  return run_suite("charge", [&](SuiteResult& s) {
    for (int k = 0; k <= n; ++k) {
      auto sol = modified_kostka(k, 1);
      for (const auto& l : sol->labels)
        for (const auto& m : sol->labels)
          s.expect(sol->entry(l, m) == modified_classical_kostka(l.first, m.first),
                   "n=" + std::to_string(k) + " " + l.first.to_string() + " / " + m.first.to_string());
    }
  });
}

inline SuiteResult suite_evenness(int n) {
  return run_suite("evenness", [&](SuiteResult& s) {
    auto sol = modified_kostka(n, 2);
    s.expect(evenness_check(*sol), "t^-a K~ not in Z[t^2]");
    ICTable ic = ic_table(Family::exotic, n);
    for (std::size_t i = 0; i < ic.labels.size(); ++i) {
      s.expect(ic.entries[i][i] == ExactPoly(1), "IC diagonal at " + ic.labels[i].to_string());
      for (const auto& p : ic.entries[i])
        s.expect(has_nonnegative_integer_coefficients(p), "IC coefficient sign in row " + ic.labels[i].to_string());
    }
    ic_table(Family::symmetric, n);
  });
}

inline SuiteResult suite_orthogonality(int n) {
  return run_suite("orthogonality", [&](SuiteResult& s) {
    s.absorb(verify_orthogonality_exotic(n, false).checks);
    s.absorb(verify_orthogonality_symmetric(n, false).checks);
  });
}

inline SuiteResult suite_springer(int n) {
  return run_suite("springer", [&](SuiteResult& s) { s.absorb(springer_dimension_check(n, false).checks); });
}

/*
  R(trivial) = 1, R(eps) = t^N, R(chi)(1) = chi(1), nonnegative integer
  coefficients; Omega symmetric, equal to the torus formula at q in
  {2, 3, 5, 7}, and for r = 2 invariant under t -> -t after the sign
  (-1)^{a(L)+a(M)}.
*/
inline SuiteResult suite_fakedeg(int n) {
  return run_suite("fakedeg", [&](SuiteResult& s) {
    for (int r : {1, 2}) {
      auto tab = character_table(kind_for(r), n);
      const std::string tag = "r=" + std::to_string(r) + " ";
      std::vector<long> triv(tab->classes.size(), 1), eps;
      for (const auto& c : tab->classes) eps.push_back(sign_value(c.label));
      s.expect(fake_degree(*tab, triv) == ExactPoly(1), tag + "R(trivial) != 1");
      s.expect(fake_degree(*tab, eps) == ExactPoly::monomial(Rational(1), static_cast<std::size_t>(reflection_count(n, r))),
               tag + "R(eps) != t^N");
      for (std::size_t i = 0; i < tab->irreps.size(); ++i) {
        ExactPoly R = fake_degree(*tab, tab->values[i]);
        s.expect(R.evaluate(Rational(1)) == tab->degree(i), tag + "R(chi)(1) at " + tab->irreps[i].to_string());
        s.expect(has_nonnegative_integer_coefficients(R), tag + "R coefficients at " + tab->irreps[i].to_string());
      }
      OmegaMatrix om = omega_matrix(n, r);
      for (std::size_t i = 0; i < om.size(); ++i)
        for (std::size_t j = 0; j < om.size(); ++j) {
          s.expect(om(i, j) == om(j, i), tag + "Omega not symmetric");
          if (r == 2) {
            ExactPoly tw = om(i, j).substitute_neg_t();
            if ((a_value(om.labels[i]) + a_value(om.labels[j])) % 2) tw = -tw;
            s.expect(tw == om(i, j), tag + "t -> -t twist at " + om.labels[i].to_string() + ", " + om.labels[j].to_string());
          }
        }
      for (long q : {2L, 3L, 5L, 7L}) {
        auto num = omega_via_torus(n, r, Rational(q));
        for (std::size_t i = 0; i < om.size(); ++i)
          for (std::size_t j = 0; j < om.size(); ++j)
            s.expect(num[i][j] == om(i, j).evaluate(Rational(q)),
                     tag + "torus formula at q=" + std::to_string(q) + " " + om.labels[i].to_string() + ", " +
                         om.labels[j].to_string());
      }
    }
  });
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"solver", "orthogonality", "evenness", "charge", "springer", "fakedeg"};
  return names;
}

inline SuiteResult run_verify_suite(const std::string& name, int n) {
  if (name == "solver") {
    SuiteResult a = suite_solver(n, 2), b = suite_solver(n, 1);
    a.checks += b.checks;
    a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
    return a;
  }
  if (name == "orthogonality") return suite_orthogonality(n);
  if (name == "evenness") return suite_evenness(n);
  if (name == "charge") return suite_charge(n);
  if (name == "springer") return suite_springer(n);
  if (name == "fakedeg") return suite_fakedeg(n);
  throw SizeMismatch("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------
// Finite-field suites

inline SuiteResult suite_orbits(const SymplecticContext& ctx, const OrbitCensus& census) {
  return run_suite("orbits", [&](SuiteResult& s) {
    auto sol = modified_kostka(ctx.n, 2);
    s.expect(census.orbits.size() == sol->labels.size(), "orbit count " + std::to_string(census.orbits.size()));
    long total = 0;
    for (const auto& o : census.orbits) {
      total += o.size;
      Rational xi = sol->xi_of(o.label).evaluate(Rational(ctx.q));
      s.expect(xi == o.size, o.label.to_string() + ": size " + std::to_string(o.size) + " vs xi " + xi.get_str());
      s.expect(jordan_type(o.representative.x, ctx.q) == expected_jordan_type(o.label),
               o.label.to_string() + ": Jordan type");
    }
    s.expect(total == census.total, "orbit sizes do not add up to the point count");
  });
}

// split_green_count(z_M) = sum_L deg(rho_L) K~_{L,M}(q)
inline SuiteResult suite_split(const SymplecticContext& ctx, const OrbitCensus& census) {
  return run_suite("split", [&](SuiteResult& s) {
    auto sol = modified_kostka(ctx.n, 2);
    auto tab = character_table(GroupKind::Bn, ctx.n);
    for (const auto& o : census.orbits) {
      Rational expect = 0;
      for (const auto& l : sol->labels)
        expect += sol->entry(l, o.label).evaluate(Rational(ctx.q)) * tab->degree(tab->irrep_index(l));
      long got = split_green_count(ctx, o.representative);
      s.expect(expect == got, o.label.to_string() + ": " + std::to_string(got) + " flags vs " + expect.get_str());
    }
  });
}

inline SuiteResult suite_phi(const SymplecticContext& ctx, long budget) {
  return run_suite("phi", [&](SuiteResult& s) {
    long got = full_space_orbit_count(ctx, budget);
    Integer want = phi_count(ctx.n, ctx.q);
    s.expect(want == got, std::to_string(got) + " orbits vs Phi = " + want.get_str());
  });
}

inline SuiteResult suite_slice(int n) {
  return run_suite("slice", [&](SuiteResult& s) {
    for (const auto& b : enumerate_bipartitions(n)) {
      SliceReport r = slice_check(b, false);
      s.expect(r.direct_sum_g, b.to_string() + ": [g,x] + U != g");
      s.expect(r.theta_stable, b.to_string() + ": U not theta-stable");
      s.expect(r.direct_sum_minus, b.to_string() + ": [g^theta,x] + U^-theta != g^-theta");
      s.expect(r.complement_to_tangent, b.to_string() + ": slice not complementary to the tangent space");
      s.expect(r.weights_positive && r.index_weights_positive, b.to_string() + ": nonpositive weight");
    }
  });
}

inline SuiteResult suite_generators(const SymplecticContext& ctx) {
  return run_suite("generators", [&](SuiteResult& s) {
    for (const auto& g : ctx.generators) s.expect(ctx.in_sp(g), "generator outside Sp");
    Integer expect;
    Rational v = group_orders(ctx.n).sp.evaluate(Rational(ctx.q));
    expect = v.get_num();
    if (expect <= 1'000'000) s.expect(expect == generated_group_order(ctx, 1'000'000), "generated group is not Sp");
  });
}

inline const std::vector<std::string>& oracle_suite_names() {
  static const std::vector<std::string> names{"generators", "orbits", "split", "slice", "phi"};
  return names;
}

}  // namespace exotic
