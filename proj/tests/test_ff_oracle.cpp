#include <gtest/gtest.h>

#include "exotic/checks.hpp"
#include "exotic/ff_oracle.hpp"
#include "test_util.hpp"

using namespace exotic;
using testutil::B;

namespace {

FqMatrix unit(int d, int a, int b) {
  FqMatrix m(d, d);
  m(a, b) = 1;
  return m;
}

}  // namespace

TEST(Setup, Fields) {
  EXPECT_THROW(setup_symplectic(1, 2), InvalidField);
  EXPECT_THROW(setup_symplectic(1, 4), InvalidField);
  EXPECT_THROW(setup_symplectic(1, 9), InvalidField);
  EXPECT_THROW(setup_symplectic(0, 3), SizeMismatch);
  EXPECT_THROW(setup_symplectic(4, 3), SizeMismatch);
  EXPECT_NO_THROW(setup_symplectic(2, 5));
}

TEST(Setup, GeneratorsAreSymplecticAndGenerate) {
  for (auto [n, q, order] : {std::tuple{1, 3, 24L}, std::tuple{1, 5, 120L}, std::tuple{2, 3, 51840L}}) {
    SymplecticContext ctx = setup_symplectic(n, q);
    for (std::size_t g = 0; g < ctx.generators.size(); ++g) {
      EXPECT_TRUE(ctx.in_sp(ctx.generators[g]));
      EXPECT_EQ(ff::mul(ctx.generators[g], ctx.inverses[g], q), FqMatrix::identity(ctx.dim()));
    }
    EXPECT_EQ(generated_group_order(ctx, 100000), order);
  }
  EXPECT_THROW(generated_group_order(setup_symplectic(2, 3), 1000), BudgetExceeded);
}

// g with theta(g) = g^{-1}, by brute force over all 2x2 matrices
TEST(Setup, FixedPointsRankOne) {
  SymplecticContext ctx = setup_symplectic(1, 3);
  int count = 0;
  for (int code = 0; code < 81; ++code) {
    FqMatrix g(2, 2);
    for (int k = 0, c = code; k < 4; ++k, c /= 3) g.e[static_cast<std::size_t>(k)] = c % 3;
    if (ff::rank(g, 3) < 2) continue;
    if (ff::mul(ctx.theta_group(g), g, 3) == FqMatrix::identity(2)) {
      ++count;
      EXPECT_EQ(g(0, 1), 0);
      EXPECT_EQ(g(1, 0), 0);
      EXPECT_EQ(g(0, 0), g(1, 1));
    }
  }
  EXPECT_EQ(count, 2);
}

// the -1 eigenspace of theta on gl_4 has dimension 6
TEST(Setup, MinusThetaDimension) {
  SymplecticContext ctx = setup_symplectic(2, 3);
  const int d = 4, q = 3;
  FqMatrix map(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      FqMatrix z = unit(d, a, b);
      FqMatrix img = ff::add(ctx.theta_lie(z), z, q);
      for (int k = 0; k < d * d; ++k) map(k, a * d + b) = img.e[static_cast<std::size_t>(k)];
    }
  EXPECT_EQ(d * d - ff::rank(map, q), 6);
  // and minus_theta_element parametrizes it
  std::vector<int> upper(6, 0);
  for (int k = 0; k < 6; ++k) {
    upper.assign(6, 0);
    upper[static_cast<std::size_t>(k)] = 1;
    FqMatrix x = minus_theta_element(ctx, upper);
    EXPECT_EQ(ctx.theta_lie(x), ff::add(FqMatrix(d, d), x, q, -1));
  }
}

TEST(Cone, RankOne) {
  SymplecticContext ctx = setup_symplectic(1, 3);
  auto pts = enumerate_exotic_cone(ctx);
  EXPECT_EQ(pts.size(), 9u);
  for (const auto& z : pts) EXPECT_TRUE(z.x.is_zero());
  OrbitCensus c = orbit_decompose(ctx, pts);
  ASSERT_EQ(c.orbits.size(), 2u);
  EXPECT_EQ(c.orbits[0].label, B({}, {1}));
  EXPECT_EQ(c.orbits[0].size, 1);
  EXPECT_EQ(c.orbits[1].size, 8);
  EXPECT_EQ(split_green_count(ctx, c.orbits[0].representative), 4);
  EXPECT_EQ(split_green_count(ctx, c.orbits[1].representative), 1);
}

TEST(Cone, NormalForms) {
  SymplecticContext ctx = setup_symplectic(1, 3);
  ExoticPoint a = normal_form(ctx, B({}, {1}));
  EXPECT_TRUE(a.x.is_zero());
  EXPECT_TRUE(a.v.is_zero());
  ExoticPoint b = normal_form(ctx, B({1}, {}));
  EXPECT_TRUE(b.x.is_zero());
  EXPECT_EQ(b.v(0, 0), 1);
  EXPECT_EQ(b.v(1, 0), 0);
  EXPECT_THROW(normal_form(ctx, B({2}, {})), SizeMismatch);

  SymplecticContext c2 = setup_symplectic(2, 3);
  ExoticPoint o = normal_form(c2, B({2}, {}));
  EXPECT_EQ(jordan_type(o.x, 3), Partition({2, 2}));
  EXPECT_EQ(o.v(1, 0), 1);
  EXPECT_EQ(expected_jordan_type(B({1}, {1})), Partition({2, 2}));
  EXPECT_EQ(expected_jordan_type(B({1}, {1, 1})), Partition({2, 2, 1, 1}));
}

TEST(Cone, RankTwoCensus) {
  SymplecticContext ctx = setup_symplectic(2, 3);
  auto pts = enumerate_exotic_cone(ctx);
  OrbitCensus c = orbit_decompose(ctx, pts);
  EXPECT_EQ(c.orbits.size(), 5u);
  // 3^8 points in the cone
  EXPECT_EQ(c.total, 6561);
  SuiteResult o = suite_orbits(ctx, c), s = suite_split(ctx, c);
  EXPECT_TRUE(o.passed()) << (o.failures.empty() ? "" : o.failures[0]);
  EXPECT_TRUE(s.passed()) << (s.failures.empty() ? "" : s.failures[0]);
  EXPECT_THROW(enumerate_exotic_cone(ctx, 100), BudgetExceeded);
}

TEST(Cone, RankOneQFive) {
  SymplecticContext ctx = setup_symplectic(1, 5);
  OrbitCensus c = orbit_decompose(ctx, enumerate_exotic_cone(ctx));
  ASSERT_EQ(c.orbits.size(), 2u);
  EXPECT_EQ(c.orbits[0].size, 1);
  EXPECT_EQ(c.orbits[1].size, 24);
  EXPECT_EQ(split_green_count(ctx, c.orbits[0].representative), 6);
  EXPECT_TRUE(suite_split(ctx, c).passed());
}

TEST(Cone, NonStableSetRejected) {
  SymplecticContext ctx = setup_symplectic(1, 3);
  auto pts = enumerate_exotic_cone(ctx);
  pts.pop_back();
  EXPECT_THROW(orbit_decompose(ctx, pts), DecompositionFailure);
}

TEST(Cone, MissingNormalFormRejected) {
  SymplecticContext ctx = setup_symplectic(1, 3);
  std::vector<ExoticPoint> zero{normal_form(ctx, B({}, {1}))};
  EXPECT_THROW(orbit_decompose(ctx, zero), UnlabeledOrbit);
}

TEST(FullSpace, MatchesPhi) {
  for (auto [n, q] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 3}}) {
    SymplecticContext ctx = setup_symplectic(n, q);
    EXPECT_EQ(phi_count(n, q), full_space_orbit_count(ctx)) << n << " " << q;
  }
  EXPECT_THROW(full_space_orbit_count(setup_symplectic(2, 3), 10), BudgetExceeded);
}

TEST(Jordan, Types) {
  FqMatrix x(4, 4);
  x(0, 1) = 1;
  x(1, 2) = 1;
  EXPECT_EQ(jordan_type(x, 3), Partition({3, 1}));
  EXPECT_EQ(jordan_type(FqMatrix(3, 3), 3), Partition({1, 1, 1}));
  EXPECT_THROW(jordan_type(FqMatrix::identity(2), 3), DimensionMismatch);
}

TEST(Slice, AllSmallLabels) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : enumerate_bipartitions(n)) {
      SliceReport r = slice_check(b, false);
      EXPECT_TRUE(r.passed()) << b.to_string();
      EXPECT_EQ(r.dim_bracket + r.dim_u, 4 * n * n) << b.to_string();
    }
  SliceReport zero = slice_check(B({}, {1, 1}), false);
  EXPECT_EQ(zero.dim_bracket, 0);
  EXPECT_EQ(zero.dim_u, 16);
  EXPECT_THROW(slice_check(B({4}, {})), SizeMismatch);
}
