#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace symgrass;
using testing_support::random_polynomial;

namespace {

Polynomial x(int i) { return Polynomial::variable(3, i); }

}  // namespace

TEST(Monomial, DeglexOrderPutsX1First) {
  EXPECT_LT(Monomial(3, {0, 1, 0}), Monomial(3, {1, 0, 0}));
  EXPECT_LT(Monomial(3, {0, 0, 1}), Monomial(3, {0, 1, 0}));
  EXPECT_LT(Monomial(3, {3, 0, 0}), Monomial(3, {0, 0, 4}));  // degree first
  EXPECT_LT(Monomial(3, {1, 0, 2}), Monomial(3, {1, 1, 1}));
}

TEST(Monomial, DivisionAndMultiplication) {
  Monomial a(3, {2, 1, 0}), b(3, {1, 0, 0});
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a / b * b, a);
  EXPECT_EQ((a * b).degree(), 4u);
}

TEST(Monomial, RejectsBadIndex) {
  Monomial m(3);
  EXPECT_THROW(m.set(3, 1), UsageError);
  EXPECT_THROW(Monomial(5), UsageError);
}

TEST(Polynomial, LeadingTermAndRendering) {
  Polynomial p = x(0) * x(0) - Rational(2) * x(0) * x(1) + Polynomial::constant(3, Rational(1, 3));
  EXPECT_EQ(p.leading_monomial(), Monomial(3, {2, 0, 0}));
  EXPECT_EQ(to_string(p), "x1^2 - 2 x1 x2 + 1/3");
  EXPECT_EQ(to_string(Polynomial(3)), "0");
  EXPECT_THROW(Polynomial(3).leading_monomial(), DomainError);
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  Polynomial p = x(0) + x(1);
  p -= x(1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p, x(0));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, HomogeneousComponents) {
  Polynomial p = x(0) * x(1) + x(2) + Polynomial::constant(3, 4);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_component(2), x(0) * x(1));
  EXPECT_EQ(p.homogeneous_component(0), Polynomial::constant(3, 4));
  EXPECT_EQ(p.degree(), 2u);
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
  Polynomial s = x(0) + x(1) + x(2);
  EXPECT_EQ(s.pow(3), s * s * s);
  EXPECT_EQ(s.pow(0), Polynomial::constant(3, 1));
  EXPECT_EQ(s.pow(2).coefficient(Monomial(3, {1, 1, 0})), 2);
}

TEST(Polynomial, ArityMismatchThrows) {
  EXPECT_THROW(Polynomial::variable(2, 0) + x(0), UsageError);
}

TEST(Polynomial, DivisionByLinearFactor) {
  Polynomial d = x(1) - x(0);
  Polynomial q = x(0) * x(0) + x(2);
  auto [quot, rem] = divide(q * d, d);
  EXPECT_EQ(quot, q);
  EXPECT_TRUE(rem.is_zero());
  auto [q2, r2] = divide(q * d + x(2), d);
  EXPECT_EQ(q2 * d + r2, q * d + x(2));
  EXPECT_FALSE(r2.is_zero());
}

TEST(Polynomial, PermuteSendsXiToXxi) {
  Permutation xi = Permutation::from_one_based({2, 3, 1});
  EXPECT_EQ(permute(x(0), xi), x(1));
  EXPECT_EQ(permute(x(2) * x(2), xi), x(0) * x(0));
}

TEST(PolynomialProperty, RingAxioms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = random_polynomial(rng, 3, 4), b = random_polynomial(rng, 3, 4), c = random_polynomial(rng, 3, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolynomialProperty, PermutationActionIsAGroupAction) {
  std::mt19937 rng(12);
  auto perms = Permutation::all(3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_polynomial(rng, 3, 5);
    for (const auto& s : perms) {
      EXPECT_EQ(permute(permute(p, s), s.inverse()), p);
      for (const auto& t : perms) EXPECT_EQ(permute(permute(p, t), s), permute(p, s * t));
    }
  }
}

TEST(Permutation, CompositionAndCycles) {
  auto all = Permutation::all(3);
  EXPECT_EQ(all.size(), 6u);
  Permutation t12 = Permutation::transposition(3, 0, 1);
  EXPECT_EQ(t12.cycles(), "(12)");
  EXPECT_EQ(t12 * t12, Permutation::identity(3));
  Permutation c = Permutation::from_one_based({2, 3, 1});
  EXPECT_EQ(c * c * c, Permutation::identity(3));
  EXPECT_EQ(c * c.inverse(), Permutation::identity(3));
}

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(fraction(-3, 6)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
  EXPECT_THROW(fraction(1, 0), UsageError);
  EXPECT_EQ(fraction(4, -6), Rational(-2, 3));
}
