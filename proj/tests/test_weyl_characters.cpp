#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "exotic/fake_degrees.hpp"
#include "exotic/weyl_characters.hpp"
#include "test_util.hpp"

using namespace exotic;
using testutil::B;
using testutil::P;

namespace {

// signed permutation: w(e_i) = sign[i] e_{perm[i]}
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
};

std::vector<SignedPerm> all_signed_perms(int n, bool with_signs) {
  std::vector<SignedPerm> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    const int masks = with_signs ? 1 << n : 1;
    for (int m = 0; m < masks; ++m) {
      SignedPerm w{p, std::vector<int>(static_cast<std::size_t>(n), 1)};
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) w.sign[static_cast<std::size_t>(i)] = -1;
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ClassLabel label_of(const SignedPerm& w) {
  const std::size_t n = w.perm.size();
  std::vector<char> seen(n, 0);
  std::vector<int> pos, neg;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, s = 1;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w.perm[j])) {
      seen[j] = 1;
      ++len;
      s *= w.sign[j];
    }
    (s > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {Partition(pos), Partition(neg)};
}

// det(t - w) by the Leibniz expansion
ExactPoly charpoly(const SignedPerm& w) {
  const int n = static_cast<int>(w.perm.size());
  auto entry = [&](int i, int j) {
    // matrix of w has column j equal to sign[j] e_{perm[j]}
    ExactPoly e;
    if (i == j) e += testutil::t_pow(1);
    if (w.perm[static_cast<std::size_t>(j)] == i) e -= ExactPoly(w.sign[static_cast<std::size_t>(j)]);
    return e;
  };
  ExactPoly det;
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += s[static_cast<std::size_t>(a)] > s[static_cast<std::size_t>(b)];
    ExactPoly term(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= entry(i, s[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(s.begin(), s.end()));
  return det;
}

long hook_count(const Partition& p) {
  Partition t = transpose(p);
  Integer num = detail::factorial(p.size()), den = 1;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) den *= p[i] - j + t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
  Integer r = num / den;
  return r.get_si();
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Classes, SpecExamples) {
  auto c1 = conjugacy_classes(GroupKind::Bn, 1);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0].size, 1);
  EXPECT_EQ(c1[1].size, 1);
  auto c2 = conjugacy_classes(GroupKind::Bn, 2);
  ASSERT_EQ(c2.size(), 5u);
  Integer tot = 0;
  std::vector<long> sizes;
  for (const auto& c : c2) tot += c.size, sizes.push_back(c.size.get_si());
  EXPECT_EQ(tot, 8);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<long>{1, 1, 2, 2, 2}));
  auto s3 = conjugacy_classes(GroupKind::Sn, 3);
  std::map<Partition, long> by;
  for (const auto& c : s3) by[c.label.cycle_type()] = c.size.get_si();
  EXPECT_EQ(by[Partition({1, 1, 1})], 1);
  EXPECT_EQ(by[Partition({2, 1})], 3);
  EXPECT_EQ(by[Partition{3}], 2);
}

TEST(Classes, BruteForceSizesAndCharpolys) {
  for (bool bn : {true, false})
    for (int n = 1; n <= 4; ++n) {
      const GroupKind kind = bn ? GroupKind::Bn : GroupKind::Sn;
      std::map<ClassLabel, long> count;
      std::map<ClassLabel, ExactPoly> cp;
      for (const auto& w : all_signed_perms(n, bn)) {
        ClassLabel l = label_of(w);
        if (!bn) l = {l.cycle_type(), {}};
        ++count[l];
        ExactPoly c = charpoly(w);
        if (cp.count(l)) { EXPECT_EQ(cp[l], c); }
        cp[l] = c;
        // determinant of w is (-1)^n det(0 - w)
        EXPECT_EQ(sign_value(l), (n % 2 ? -1 : 1) * c.evaluate(Rational(0)));
      }
      auto classes = conjugacy_classes(kind, n);
      ASSERT_EQ(classes.size(), count.size());
      for (const auto& c : classes) {
        EXPECT_EQ(c.size, count[c.label]) << c.label.to_string();
        EXPECT_EQ(reflection_charpoly(kind, c.label), cp[c.label]) << c.label.to_string();
      }
      EXPECT_EQ(group_order(kind, n), static_cast<long>(all_signed_perms(n, bn).size()));
    }
}

TEST(Classes, SignAndCharpolyExamples) {
  EXPECT_EQ(sign_value(ClassLabel{Partition{2}, {}}), -1);
  EXPECT_EQ(sign_value(ClassLabel{{}, Partition({1, 1, 1})}), -1);
  EXPECT_EQ(sign_value(ClassLabel{{}, Partition({1, 1})}), 1);
  EXPECT_EQ(reflection_charpoly(GroupKind::Bn, ClassLabel{Partition({1, 1}), {}}), P({1, -2, 1}));
  EXPECT_EQ(reflection_charpoly(GroupKind::Bn, ClassLabel{{}, Partition{2}}), P({1, 0, 1}));
  EXPECT_EQ(reflection_charpoly(GroupKind::Sn, ClassLabel{Partition{3}, {}}), P({-1, 0, 0, 1}));
  EXPECT_EQ(torus_order(ClassLabel{Partition{1}, {}}, TorusKind::theta), P({-1, 1}));
  EXPECT_EQ(torus_order(ClassLabel{{}, Partition{1}}, TorusKind::theta), P({1, 1}));
  EXPECT_EQ(torus_order(ClassLabel{Partition{1}, Partition{1}}, TorusKind::iota_theta), P({1, -2, 1}));
  EXPECT_EQ(psi_poly(Partition{1}), P({1, 1}));
  EXPECT_EQ(psi_poly(Partition({1, 1})), P({1, 2, 1}));
  EXPECT_EQ(psi_poly(Partition({2, 1})), P({1, 1, 1, 1}));
}

TEST(GroupOrders, Values) {
  EXPECT_EQ(group_orders(1).sp, P({0, -1, 0, 1}));
  EXPECT_EQ(group_orders(1).gl, P({-1, 1}));
  ExactPoly sp2 = group_orders(2).sp;
  EXPECT_EQ(sp2, testutil::t_pow(4) * P({-1, 0, 1}) * P({-1, 0, 0, 0, 1}));
  EXPECT_EQ(sp2.evaluate(Rational(3)), Rational(51840));
  // |GL_2(3)| = 48
  EXPECT_EQ(group_orders(2).gl.evaluate(Rational(3)), Rational(48));
}

TEST(Characters, SpecExamples) {
  auto t1 = character_table(GroupKind::Bn, 1);
  EXPECT_EQ(t1->values[t1->irrep_index(B({}, {1}))][t1->class_index(ClassLabel{{}, Partition{1}})], -1);
  auto t2 = character_table(GroupKind::Bn, 2);
  const auto& row = t2->values[t2->irrep_index(B({1}, {1}))];
  std::vector<ClassLabel> order{{Partition({1, 1}), {}}, {Partition{2}, {}}, {Partition{1}, Partition{1}},
                                {{}, Partition({1, 1})}, {{}, Partition{2}}};
  std::vector<long> want{2, 0, 0, -2, 0};
  for (std::size_t k = 0; k < order.size(); ++k) EXPECT_EQ(row[t2->class_index(order[k])], want[k]);
}

TEST(Characters, LinearAndReflectionCharactersOnElements) {
  for (int n = 1; n <= 5; ++n) {
    auto tab = character_table(GroupKind::Bn, n);
    Partition row_n{n}, col_n(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& w : all_signed_perms(n, true)) {
      ClassLabel l = label_of(w);
      std::size_t c = tab->class_index(l);
      int perm_sign = 1, flips = 1, fixed = 0;
      const Partition ct = l.cycle_type();
      for (int k : ct.parts()) perm_sign *= k % 2 ? 1 : -1;
      for (std::size_t i = 0; i < w.sign.size(); ++i) {
        flips *= w.sign[i];
        if (w.perm[i] == static_cast<int>(i)) fixed += w.sign[i];
      }
      EXPECT_EQ(tab->values[tab->irrep_index({row_n, {}})][c], 1);
      EXPECT_EQ(tab->values[tab->irrep_index({col_n, {}})][c], perm_sign);
      EXPECT_EQ(tab->values[tab->irrep_index({{}, row_n})][c], flips);
      EXPECT_EQ(tab->values[tab->irrep_index({{}, col_n})][c], perm_sign * flips);
      EXPECT_EQ(tab->values[tab->irrep_index({{}, col_n})][c], sign_value(l));
      // the reflection representation is ((n-1);(1)), its trace is the signed count of fixed axes
      Partition rest = n > 1 ? Partition{n - 1} : Partition{};
      EXPECT_EQ(tab->values[tab->irrep_index({rest, Partition{1}})][c], fixed);
    }
  }
}

TEST(Characters, Orthogonality) {
  for (GroupKind kind : {GroupKind::Bn, GroupKind::Sn})
    for (int n = 0; n <= 6; ++n) {
      auto tab = character_table(kind, n);
      const std::size_t m = tab->irreps.size();
      ASSERT_EQ(m, tab->classes.size());
      Integer order = group_order(kind, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Integer row = 0, col = 0;
          for (std::size_t c = 0; c < m; ++c) row += tab->classes[c].size * tab->values[i][c] * tab->values[j][c];
          for (std::size_t k = 0; k < m; ++k) col += Integer(tab->values[k][i]) * tab->values[k][j];
          EXPECT_EQ(row, i == j ? order : Integer(0));
          EXPECT_EQ(col * tab->classes[i].size, i == j ? order : Integer(0));
        }
    }
}

TEST(Characters, DegreesByHookFormula) {
  for (int n = 1; n <= 7; ++n) {
    auto tab = character_table(GroupKind::Bn, n);
    for (std::size_t i = 0; i < tab->irreps.size(); ++i) {
      const auto& b = tab->irreps[i];
      long want = binom(n, b.first.size()) * hook_count(b.first) * hook_count(b.second);
      EXPECT_EQ(tab->degree(i), want) << b.to_string();
    }
    auto sn = character_table(GroupKind::Sn, n);
    for (std::size_t i = 0; i < sn->irreps.size(); ++i) EXPECT_EQ(sn->degree(i), hook_count(sn->irreps[i].first));
  }
}

// the central element -1 acts by (-1)^{|second|} on every irrep
TEST(Characters, CentralElement) {
  for (int n = 1; n <= 6; ++n) {
    auto tab = character_table(GroupKind::Bn, n);
    std::size_t c = tab->class_index(ClassLabel{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
    for (std::size_t i = 0; i < tab->irreps.size(); ++i)
      EXPECT_EQ(tab->values[i][c], (tab->irreps[i].second.size() % 2 ? -1 : 1) * tab->degree(i));
  }
}

TEST(Characters, RankBound) {
  EXPECT_THROW(character_table(GroupKind::Bn, kMaxCharacterRank + 1), RankTooLarge);
  EXPECT_NO_THROW(character_table(GroupKind::Bn, 6));
}

// fake degrees by summing over group elements rather than classes
TEST(Characters, FakeDegreeElementwise) {
  for (int r : {1, 2})
    for (int n = 1; n <= 3; ++n) {
      const GroupKind kind = kind_for(r);
      auto tab = character_table(kind, n);
      ExactPoly num(1);
      for (int i = 1; i <= n; ++i) num *= testutil::t_pow(i * r) - ExactPoly(1);
      for (std::size_t k = 0; k < tab->irreps.size(); ++k) {
        RatFunc acc;
        for (const auto& w : all_signed_perms(n, r == 2)) {
          ClassLabel l = label_of(w);
          if (r == 1) l = {l.cycle_type(), {}};
          long v = sign_value(l) * tab->values[k][tab->class_index(l)];
          acc += RatFunc(ExactPoly(v), charpoly(w));
        }
        acc = acc * RatFunc(num, ExactPoly(Rational(group_order(kind, n))));
        ASSERT_TRUE(acc.is_polynomial());
        EXPECT_EQ(acc.to_polynomial(), fake_degree(*tab, tab->values[k])) << tab->irreps[k].to_string();
      }
    }
}
