#include <gtest/gtest.h>

#include "exotic/fake_degrees.hpp"
#include "test_util.hpp"

using namespace exotic;
using testutil::B;
using testutil::P;
using testutil::t_pow;

namespace {

// prod over hooks h of (t^{rh} - 1)
ExactPoly hook_product(const Partition& p, int r) {
  Partition t = transpose(p);
  ExactPoly out(1);
  for (std::size_t i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int h = p[i] - j + t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      out *= t_pow(r * h) - ExactPoly(1);
    }
  return out;
}

// closed hook-length forms of the fake degrees of S_n and W(B_n)
ExactPoly hook_fake_degree(int n, int r, const Bipartition& b) {
  ExactPoly num(1);
  for (int i = 1; i <= n; ++i) num *= t_pow(r * i) - ExactPoly(1);
  int e = r == 2 ? a_value(b) : n_value(b.first);
  ExactPoly den = hook_product(b.first, r) * hook_product(b.second, r);
  auto [quo, rem] = divmod(num, den);
  EXPECT_TRUE(rem.is_zero());
  return quo * t_pow(e);
}

}  // namespace

TEST(FakeDegree, SpecExamples) {
  auto b1 = character_table(GroupKind::Bn, 1);
  auto s2 = character_table(GroupKind::Sn, 2);
  EXPECT_EQ(fake_degree(*b1, b1->values[b1->irrep_index(B({}, {1}))]), P({0, 1}));
  EXPECT_EQ(fake_degree(*s2, s2->values[s2->irrep_index(B({1, 1}, {}))]), P({0, 1}));
  for (int n = 0; n <= 4; ++n)
    for (GroupKind k : {GroupKind::Bn, GroupKind::Sn})
      EXPECT_EQ(fake_degree(k, n, std::vector<long>(conjugacy_classes(k, n).size(), 1)), ExactPoly(1));
}

TEST(FakeDegree, MatchesHookFormula) {
  for (int r : {1, 2})
    for (int n = 1; n <= 5; ++n) {
      auto tab = character_table(kind_for(r), n);
      for (std::size_t i = 0; i < tab->irreps.size(); ++i)
        EXPECT_EQ(fake_degree(*tab, tab->values[i]), hook_fake_degree(n, r, tab->irreps[i]))
            << "r=" << r << " " << tab->irreps[i].to_string();
    }
}

// sum of deg(chi) R(chi) is the Hilbert series of the coinvariants
TEST(FakeDegree, CoinvariantHilbertSeries) {
  for (int r : {1, 2})
    for (int n = 1; n <= 5; ++n) {
      auto tab = character_table(kind_for(r), n);
      ExactPoly sum, want(1);
      for (std::size_t i = 0; i < tab->irreps.size(); ++i)
        sum += fake_degree(*tab, tab->values[i]) * Rational(tab->degree(i));
      for (int i = 1; i <= n; ++i) want *= exact_quotient(t_pow(r * i) - ExactPoly(1), P({-1, 1}));
      EXPECT_EQ(sum, want);
    }
}

TEST(FakeDegree, NonCharacterInputRejected) {
  auto b1 = character_table(GroupKind::Bn, 1);
  EXPECT_THROW(fake_degree(*b1, {1, 0}), NotPolynomial);
}

TEST(Omega, SpecExamples) {
  OmegaMatrix o = omega_matrix(1, 2);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o(0, 0), P({0, 0, 1}));
  EXPECT_EQ(o(1, 1), P({0, 0, 1}));
  EXPECT_EQ(o(0, 1), P({0, 1}));
  EXPECT_EQ(o(1, 0), P({0, 1}));
  OmegaMatrix s1 = omega_matrix(1, 1);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1(0, 0), ExactPoly(1));
  OmegaMatrix s2 = omega_matrix(2, 1);
  std::size_t k = 0;
  while (s2.labels[k] != B({2}, {})) ++k;
  EXPECT_EQ(s2(k, k), P({0, 0, 1}));
}

TEST(Omega, TorusFormulaSpecValues) {
  auto m = omega_via_torus(1, 2, Rational(3));
  OmegaMatrix o = omega_matrix(1, 2);
  EXPECT_EQ(m[0][0], Rational(9));
  EXPECT_EQ(m[1][1], Rational(9));
  EXPECT_EQ(m[0][1], Rational(3));
  EXPECT_EQ(m[0][1], o(0, 1).evaluate(Rational(3)));
  EXPECT_THROW(omega_via_torus(1, 2, Rational(1)), SingularEvaluation);
  EXPECT_THROW(omega_via_torus(1, 2, Rational(-1)), SingularEvaluation);
}

TEST(Omega, SymmetricTwistedAndTorusAgree) {
  for (int r : {1, 2})
    for (int n = 1; n <= 4; ++n) {
      OmegaMatrix o = omega_matrix(n, r);
      for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j) {
          EXPECT_EQ(o(i, j), o(j, i));
          if (r == 2) {
            ExactPoly tw = o(i, j).substitute_neg_t();
            if ((a_value(o.labels[i]) + a_value(o.labels[j])) % 2) tw = -tw;
            EXPECT_EQ(tw, o(i, j));
          }
        }
      for (long q : {2L, 3L, 5L, 7L}) {
        auto num = omega_via_torus(n, r, Rational(q));
        for (std::size_t i = 0; i < o.size(); ++i)
          for (std::size_t j = 0; j < o.size(); ++j) EXPECT_EQ(num[i][j], o(i, j).evaluate(Rational(q)));
      }
    }
}
