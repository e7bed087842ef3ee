#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace symgrass;
using oracle::FreeElement;
using oracle::TruncatedAlgebra;

namespace {

FreeElement X(int n, int i) { return FreeElement::letter(n, i); }
FreeElement W(int n, std::vector<int> letters) { return FreeElement::word(n, Word{std::move(letters)}); }

const TruncatedAlgebra& t3() {
  static const TruncatedAlgebra t = TruncatedAlgebra::build(3, 6);
  return t;
}

}  // namespace

TEST(Oracle, LowDegreesHaveNoRelations) {
  auto t = TruncatedAlgebra::build(3, 3);
  EXPECT_EQ(t.stats(2).quotient_dimension, 9u);
  EXPECT_EQ(t.stats(2).rank, 0u);
  EXPECT_EQ(t.stats(3).quotient_dimension, 19u);
}

TEST(Oracle, DimensionsMatchNormalFormBasis) {
  for (int n : {2, 3}) {
    auto t = TruncatedAlgebra::build(n, n == 2 ? 8 : 6);
    for (const auto& s : t.stats()) EXPECT_EQ(s.quotient_dimension, oracle::basis_count(n, s.degree)) << "n=" << n << " d=" << s.degree;
  }
  EXPECT_EQ(oracle::basis_count(3, 3), 19u);
  EXPECT_EQ(oracle::basis_count(2, 3), 6u);
}

// All consequences u [[w1,w2],w3] v against the reduced generating set.
TEST(Oracle, ReducedRelationsSpanTheFullIdeal) {
  for (int n : {2, 3, 4}) {
    auto full = TruncatedAlgebra::build_unreduced(n, n == 4 ? 4 : 5);
    auto reduced = TruncatedAlgebra::build(n, n == 4 ? 4 : 5);
    for (unsigned d = 0; d <= full.max_degree(); ++d) {
      EXPECT_EQ(full.stats(d).rank, reduced.stats(d).rank) << "n=" << n << " d=" << d;
      EXPECT_LE(reduced.stats(d).relations, full.stats(d).relations);
    }
  }
}

TEST(Oracle, ProjectExamples) {
  const auto& t = t3();
  FreeElement br21 = oracle::commutator(X(3, 1), X(3, 0));
  EXPECT_TRUE(t.project(W(3, {1, 0}) - W(3, {0, 1}) - br21).empty());
  EXPECT_TRUE(t.project(oracle::commutator(oracle::commutator(X(3, 0), X(3, 1)), X(3, 2))).empty());
  EXPECT_FALSE(t.project(br21).empty());
  EXPECT_FALSE(t.equal(W(3, {0, 1, 2}), W(3, {0, 2, 1})));
}

TEST(Oracle, EqualExamples) {
  const auto& t = t3();
  AlgebraElement x1 = AlgebraElement::generator(3, 0), b = AlgebraElement::commutator(3, 1, 0);
  EXPECT_TRUE(oracle::oracle_equal(mul(x1, b), mul(b, x1), t));
  EXPECT_FALSE(oracle::oracle_equal(b, AlgebraElement(3), t));
  FreeElement w = oracle::commutator(X(3, 1), X(3, 0));
  EXPECT_TRUE(t.equal(W(3, {0, 1, 2}) * w, W(3, {2, 1, 0}) * w));
}

TEST(Oracle, ProjectionIsIdempotent) {
  const auto& t = t3();
  std::mt19937 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = testing_support::random_word(rng, 3, 1 + trial % 6);
    auto c = t.project(FreeElement::word(3, w));
    EXPECT_EQ(t.project(t.representative(c)), c);
  }
}

TEST(Oracle, DegreeOverflowAndBadArity) {
  auto t = TruncatedAlgebra::build(3, 3);
  EXPECT_THROW(t.project(W(3, {0, 0, 0, 0})), UsageError);
  EXPECT_THROW(TruncatedAlgebra::build(5, 3), UsageError);
  EXPECT_THROW(TruncatedAlgebra::build(1, 3), UsageError);
}

TEST(Oracle, NormalFormsAgreeOnExhaustivePairs) {
  const auto& t = t3();
  for (unsigned d = 1; d <= 4; ++d) {
    auto words = oracle::all_words(3, d);
    for (const Word& u : words) {
      AlgebraElement nu = normalize_word(u, 3);
      EXPECT_TRUE(t.equal(oracle::lift(nu), FreeElement::word(3, u)));
    }
  }
}

TEST(Oracle, SweepReportsNoDisagreement) {
  auto r = oracle::agreement_sweep(t3(), 4, 200, 7);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_TRUE(r.dimensions_match);
  EXPECT_EQ(r.random_pairs, 200u);
}

TEST(Oracle, AlternatingProductsInArityFour) {
  auto t = TruncatedAlgebra::build(4, 4);
  std::mt19937 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FreeElement> z;
    for (int k = 0; k < 4; ++k) z.push_back(X(4, std::uniform_int_distribution<int>(0, 3)(rng)));
    FreeElement lhs = oracle::commutator(z[0], z[1]) * oracle::commutator(z[2], z[3]);
    FreeElement rhs = oracle::commutator(z[0], z[2]) * oracle::commutator(z[1], z[3]);
    EXPECT_TRUE(t.equal(lhs, -rhs));
  }
}

TEST(Oracle, ArityFourWitness) {
  auto t = TruncatedAlgebra::build(4, 4);
  EXPECT_TRUE(oracle::witness_non_module_n4(t));
  EXPECT_TRUE(oracle::bracket_product_nonzero_n4(t));
  EXPECT_THROW(oracle::witness_non_module_n4(t3()), UsageError);
}

TEST(Oracle, ArityThreeHasNoWitness) {
  const auto& t = t3();
  FreeElement br = oracle::commutator(X(3, 1), X(3, 2));
  EXPECT_TRUE(t.equal(W(3, {0, 1}) * br, W(3, {1, 0}) * br));
  EXPECT_TRUE(t.project(oracle::commutator(X(3, 0), X(3, 1)) * oracle::commutator(X(3, 2), X(3, 0))).empty());
}
