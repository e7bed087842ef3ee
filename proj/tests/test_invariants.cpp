#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace symgrass;

namespace {

Polynomial px(int i) { return Polynomial::variable(3, i); }
SigmaPolynomial s(int k) { return SigmaPolynomial::sigma(3, k); }

SigmaPolynomial random_sigma(std::mt19937& rng, int arity, unsigned max_weight) {
  SigmaPolynomial g(arity);
  std::uniform_int_distribution<unsigned> e(0, max_weight);
  for (int t = 0; t < 4; ++t) {
    Monomial m(arity);
    unsigned w = 0;
    for (int k = 0; k < arity; ++k) {
      unsigned budget = (max_weight - w) / (k + 1);
      unsigned ek = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      m.set(k, ek);
      w += (k + 1) * ek;
    }
    g += SigmaPolynomial::monomial(m, testing_support::small_rational(rng));
  }
  (void)e;
  return g;
}

}  // namespace

TEST(Elementary, ThreeVariables) {
  EXPECT_EQ(elementary(1), px(0) + px(1) + px(2));
  EXPECT_EQ(elementary(2), px(0) * px(1) + px(0) * px(2) + px(1) * px(2));
  EXPECT_EQ(elementary(3), px(0) * px(1) * px(2));
  EXPECT_THROW(elementary(4), UsageError);
  EXPECT_THROW(elementary(0), UsageError);
}

TEST(PowerSum, Definition) {
  EXPECT_EQ(power_sum(1), elementary(1));
  EXPECT_EQ(power_sum(2), px(0) * px(0) + px(1) * px(1) + px(2) * px(2));
  EXPECT_EQ(power_sum(3), px(0).pow(3) + px(1).pow(3) + px(2).pow(3));
  EXPECT_THROW(power_sum(0), UsageError);
}

TEST(DecomposeSymmetric, PowerSums) {
  EXPECT_EQ(decompose_symmetric(power_sum(2)), s(1).pow(2) - Rational(2) * s(2));
  EXPECT_EQ(decompose_symmetric(power_sum(3)), s(1).pow(3) - Rational(3) * s(1) * s(2) + Rational(3) * s(3));
  EXPECT_EQ(decompose_symmetric(elementary(2)), s(2));
  EXPECT_TRUE(decompose_symmetric(Polynomial(3)).is_zero());
}

TEST(DecomposeSymmetric, RejectsNonSymmetric) {
  try {
    decompose_symmetric(px(0) * px(0) + px(1));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(12)"), std::string::npos);
  }
  EXPECT_THROW(decompose_symmetric(px(0) + px(1)), DomainError);  // fixed by (12), not (13)
}

TEST(EvalSigma, Expansion) {
  EXPECT_EQ(eval_sigma(s(1)), px(0) + px(1) + px(2));
  EXPECT_TRUE(eval_sigma(SigmaPolynomial(3)).is_zero());
  // sigma1 sigma2 - 3 sigma3 = sum over i != j of x_i^2 x_j
  Polynomial expected(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) expected += px(i) * px(i) * px(j);
  EXPECT_EQ(eval_sigma(s(1) * s(2) - Rational(3) * s(3)), expected);
}

TEST(PowerSumSigma, NewtonIdentitiesExpandCorrectly) {
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(eval_sigma(power_sum_sigma(k)), power_sum(k)) << "k=" << k;
}

TEST(PowerSumSigma, NewtonRecurrence) {
  for (int k = 4; k <= 8; ++k)
    EXPECT_EQ(power_sum_sigma(k), s(1) * power_sum_sigma(k - 1) - s(2) * power_sum_sigma(k - 2) + s(3) * power_sum_sigma(k - 3));
}

TEST(SigmaPolynomial, RenderingAndWeight) {
  SigmaPolynomial g = s(1).pow(2) * s(2) - Rational(2) * s(3);
  EXPECT_EQ(to_string(g), "sigma1^2 sigma2 - 2 sigma3");
  EXPECT_EQ(g.weighted_degree(), 4u);
  EXPECT_EQ(to_string(SigmaPolynomial::sigma(2, 1) * SigmaPolynomial::sigma(2, 2)), "e1 e2");
  EXPECT_THROW(SigmaPolynomial::sigma(3, 4), UsageError);
}

TEST(SigmaProperty, DecomposeInvertsEval) {
  std::mt19937 rng(31);
  for (int n : {2, 3})
    for (int trial = 0; trial < 100; ++trial) {
      SigmaPolynomial g = random_sigma(rng, n, 8);
      EXPECT_EQ(decompose_symmetric(eval_sigma(g)), g);
    }
}

TEST(SigmaProperty, SymmetrizedPolynomialsDecompose) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = testing_support::random_polynomial(rng, 3, 6);
    Polynomial avg(3);
    for (const auto& xi : Permutation::all(3)) avg += permute(p, xi);
    EXPECT_EQ(eval_sigma(decompose_symmetric(avg)), avg);
  }
}
