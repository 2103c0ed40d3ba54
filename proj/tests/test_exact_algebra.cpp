#include <gtest/gtest.h>

#include <random>

#include "exotic/exact_algebra.hpp"

using namespace exotic;

namespace {

ExactPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(std::move(v));
}

ExactPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-1, 5), coef(-4, 4), den(1, 3);
  int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return ExactPoly(std::move(c));
}

}  // namespace

TEST(Poly, Arithmetic) {
  EXPECT_EQ(P({1, 1}) * P({-1, 1}), P({-1, 0, 1}));
  EXPECT_EQ(ExactPoly() + P({3, 0, 2}), P({3, 0, 2}));
  EXPECT_EQ(P({-1, 0, 1}) * P({1, 0, 1}), P({-1, 0, 0, 0, 1}));
  EXPECT_EQ(P({1, 2}) - P({1, 2}), ExactPoly());
  EXPECT_EQ(ExactPoly().degree(), -1);
  EXPECT_EQ((P({1, 1}) * P({0, 0, 3})).degree(), 3);
}

TEST(Poly, Substitution) {
  EXPECT_EQ(P({0, 1, 1}).substitute_neg_t(), P({0, -1, 1}));
  EXPECT_EQ(P({1, 1}).substitute_t_squared(), P({1, 0, 1}));
  EXPECT_EQ(P({-1, 0, 1}).evaluate(Rational(3)), Rational(8));
}

TEST(Poly, ShiftDownRejectsLowTerms) {
  EXPECT_EQ(P({0, 0, 1, 2}).shift_down(2), P({1, 2}));
  EXPECT_THROW(P({1, 0, 1}).shift_down(1), NotPolynomial);
}

TEST(Poly, ToString) {
  EXPECT_EQ(P({-1, 0, 2}).to_string(), "2*t^2 - 1");
  EXPECT_EQ(P({0, 1}).to_string("q"), "q");
  EXPECT_EQ(ExactPoly().to_string(), "0");
}

TEST(Poly, RingAxiomsRandomized) {
  std::mt19937 rng(20261015);
  for (int k = 0; k < 200; ++k) {
    ExactPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    Rational q(k - 100, 7);
    q.canonicalize();
    EXPECT_EQ(a.substitute_t_squared().evaluate(q), a.evaluate(q * q));
    if (!b.is_zero()) {
      auto [quo, rem] = divmod(a, b);
      EXPECT_EQ(quo * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(RatFunc, Division) {
  RatFunc a(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ(a.to_polynomial(), P({1, 1}));
  RatFunc p(P({2, 3, 1}));
  EXPECT_EQ(p / p, RatFunc(1));
  RatFunc x(P({0, 1}), P({-1, 0, 1}));
  RatFunc y(P({1}), P({1, 1}));
  EXPECT_EQ(x / y, RatFunc(P({0, 1}), P({-1, 1})));
  EXPECT_THROW(x / RatFunc(), DivisionByZero);
}

TEST(RatFunc, NormalFormIsCanonical) {
  // (2t+2)/(2t^2-2) and 3/(3t-3) are the same function
  RatFunc a(P({2, 2}), P({-2, 0, 2}));
  RatFunc b(P({3}), P({-3, 3}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.numerator(), b.numerator());
  EXPECT_EQ(a.denominator(), b.denominator());
  EXPECT_EQ(a.denominator().leading(), Rational(1));
}

TEST(RatFunc, RandomizedNormalForm) {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    ExactPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || c.is_zero()) continue;
    RatFunc x(a * c, b * c), y(a, b);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.numerator(), y.numerator());
  }
}

TEST(RatFunc, SingularEvaluation) {
  RatFunc f(P({1}), P({-1, 1}));
  EXPECT_THROW(f.evaluate(Rational(1)), SingularEvaluation);
  EXPECT_EQ(f.evaluate(Rational(3)), Rational(1, 2));
}

TEST(Matrix, TripleProduct) {
  std::vector<int> l{0, 1};
  PolyMatrix<int> id(l, l), d(l, l);
  id(0, 0) = 1;
  id(1, 1) = 1;
  d(0, 0) = RatFunc(P({0, 1}));
  d(1, 1) = RatFunc(P({5}));
  EXPECT_EQ(matrix_triple_product(id, d, id), d);

  std::vector<int> one{0};
  PolyMatrix<int> p(one, one), lam(one, one);
  p(0, 0) = RatFunc(P({0, 1}));
  lam(0, 0) = 1;
  EXPECT_EQ(matrix_triple_product(p, lam, p)(0, 0), RatFunc(P({0, 0, 1})));
}

TEST(Matrix, Errors) {
  std::vector<int> a{0, 1}, b{0};
  PolyMatrix<int> m(a, a), n(b, b);
  EXPECT_THROW(matrix_triple_product(m, n, m), DimensionMismatch);
  m(0, 1) = 1;
  EXPECT_THROW(matrix_triple_product(m, m, m), DimensionMismatch);
  EXPECT_THROW((PolyMatrix<int>({0, 0}, {1})), DimensionMismatch);
}
