#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace symgrass;
using testing_support::GrassmannPoint;
using testing_support::random_element;

namespace {

AlgebraElement x(int i) { return AlgebraElement::generator(3, i); }
AlgebraElement br(int j, int i) { return AlgebraElement::commutator(3, j, i); }
Polynomial px(int i) { return Polynomial::variable(3, i); }

}  // namespace

TEST(Act, Transpositions) {
  EXPECT_EQ(act(Permutation::transposition(3, 0, 1), br(1, 0)), -br(1, 0));
  EXPECT_EQ(act(Permutation::transposition(3, 0, 2), br(1, 0)), -br(2, 1));
}

TEST(Act, GeneratorsAreInvariant) {
  for (const FIndex& idx : generator_indices())
    for (const auto& xi : Permutation::all(3)) EXPECT_EQ(act(xi, make_f(idx)), make_f(idx)) << to_string(idx);
}

TEST(Act, MatchesSubstitutionInGrassmannModel) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = random_element(rng, 3, 4);
    auto pt = GrassmannPoint::random(rng, 3);
    for (const auto& xi : Permutation::all(3)) EXPECT_EQ(pt.eval(act(xi, u)), pt.permuted(xi).eval(u));
  }
}

TEST(IsSymmetric, Examples) {
  EXPECT_TRUE(is_symmetric(make_f({0, 2, 0})));
  EXPECT_FALSE(is_symmetric(br(1, 0)));
  EXPECT_TRUE(is_symmetric(AlgebraElement::from_scalar(elementary(1))));
  EXPECT_EQ(symmetry_violation(br(1, 0))->cycles(), "(12)");
}

TEST(IsSymmetric, GeneratorCheckMatchesFullGroup) {
  std::mt19937 rng(22);
  auto all = Permutation::all(3);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement u = trial % 2 ? symmetrize(random_element(rng, 3, 4)) : random_element(rng, 3, 3);
    if (trial % 5 == 0) u = u + act(Permutation::transposition(3, 0, 1), u);  // (12)-invariant only
    bool full = std::all_of(all.begin(), all.end(), [&](const Permutation& xi) { return act(xi, u) == u; });
    EXPECT_EQ(is_symmetric(u), full);
  }
}

TEST(Symmetrize, Examples) {
  EXPECT_EQ(symmetrize(x(0)), AlgebraElement::from_scalar(Rational(1, 3) * elementary(1)));
  EXPECT_EQ(symmetrize(make_f({1, 2, 0})), make_f({1, 2, 0}));
}

// Averaging computed directly in the exterior-algebra model, against the
// claimed closed form (1/3) f_{0,1,0}.
TEST(Symmetrize, LinearGeneratorAverage) {
  AlgebraElement u = AlgebraElement::commutator(3, 1, 0, px(1) - px(0));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    auto pt = GrassmannPoint::random(rng, 3);
    testing_support::Grassmann avg;
    for (const auto& xi : Permutation::all(3)) avg += pt.permuted(xi).eval(u);
    EXPECT_EQ(Rational(1, 6) * avg, Rational(1, 3) * pt.eval(make_f({0, 1, 0})));
  }
  EXPECT_EQ(symmetrize(u), Rational(1, 3) * make_f({0, 1, 0}));
}

TEST(Symmetrize, IdempotentAndSymmetric) {
  std::mt19937 rng(24);
  for (int n : {2, 3})
    for (int trial = 0; trial < 50; ++trial) {
      auto u = random_element(rng, n, 4);
      auto s = symmetrize(u);
      EXPECT_TRUE(is_symmetric(s));
      EXPECT_EQ(symmetrize(s), s);
    }
}

TEST(GroupAction, Composition) {
  std::mt19937 rng(25);
  auto all = Permutation::all(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_element(rng, 3, 4);
    for (const auto& s : all)
      for (const auto& t : all) EXPECT_EQ(act(s, act(t, u)), act(s * t, u));
  }
}

TEST(AntisymmetricIn12, Examples) {
  EXPECT_TRUE(is_antisymmetric_12(px(1) - px(0)));
  EXPECT_FALSE(is_antisymmetric_12(px(0) * px(1)));
  EXPECT_TRUE(is_antisymmetric_12(px(0) * px(1) * px(1) - px(0) * px(0) * px(1)));
}

// The image of a sorted word is an unsorted word.
TEST(Act, ScalarPartIsRenormalized) {
  Permutation t12 = Permutation::transposition(3, 0, 1);
  EXPECT_EQ(act(t12, x(0) * x(1)), x(1) * x(0));
  EXPECT_EQ(act(t12, x(0) * x(1)), x(0) * x(1) + br(1, 0));
  // sigma2 read as sorted words is not invariant; its symmetrization is
  AlgebraElement s2 = AlgebraElement::from_scalar(elementary(2));
  EXPECT_FALSE(is_symmetric(s2));
  EXPECT_TRUE(is_symmetric(symmetrize(s2)));
  EXPECT_EQ(symmetrize(s2).scalar(), elementary(2));
}
