#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/linalg.hpp"
#include "tourlab/lnfamily.hpp"

using namespace tourlab;

namespace {

// A 6x6 skew matrix with one free sign alpha.
SignMatrix free_sign_matrix(int alpha) {
  return SignMatrix::from_rows({{0, 1, 1, 1, -1, -1},
                                {-1, 0, 1, 1, -1, 1},
                                {-1, -1, 0, 1, 1, -1},
                                {-1, -1, -1, 0, -1, -1},
                                {1, 1, -1, 1, 0, alpha},
                                {1, -1, 1, 1, -alpha, 0}});
}

// The same tournament from its arc description: v1..v4 transitive, v5 with
// run pattern (2,-1,1), v6 with (1,-1,2), v5 -> v6 iff alpha = 1.
Tournament free_sign_tournament(int alpha) {
  Tournament t(6);
  const int v5[] = {1, 1, -1, 1};
  const int v6[] = {1, -1, 1, 1};
  for (int i = 1; i <= 4; ++i) {
    if (v5[i - 1] > 0) t.set_arc(5, i); else t.set_arc(i, 5);
    if (v6[i - 1] > 0) t.set_arc(6, i); else t.set_arc(i, 6);
  }
  if (alpha == 1) t.set_arc(5, 6); else t.set_arc(6, 5);
  return t;
}

}  // namespace

TEST(SkewMatrixTest, ThreeCycleRows) {
  const SkewMatrix s = skew_matrix(Tournament::from_bits(3, "101"));
  EXPECT_EQ(s.matrix(), SignMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
}

TEST(SkewMatrixTest, SkewAndRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Tournament t = oracle::random(1 + trial % 15, rng);
    const SkewMatrix s = skew_matrix(t);
    for (int i = 1; i <= t.order(); ++i)
      for (int j = 1; j <= t.order(); ++j) EXPECT_EQ(s.entry(i, j) + s.entry(j, i), 0);
    EXPECT_EQ(s.to_tournament(), t);
  }
  EXPECT_THROW(SkewMatrix(SignMatrix::from_rows({{0, 1}, {1, 0}})), FormatError);
  EXPECT_THROW(SkewMatrix(SignMatrix::from_rows({{0, 0}, {0, 0}})), FormatError);
}

TEST(SkewMatrixTest, FreeSignMatrixMatchesArcs) {
  for (int alpha : {1, -1}) {
    EXPECT_EQ(skew_matrix(free_sign_tournament(alpha)).matrix(), free_sign_matrix(alpha));
  }
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(determinant(make_ln(4)), 9);
  EXPECT_EQ(determinant(Tournament::from_bits(6, "111101111110110")), 25);
  EXPECT_EQ(determinant(free_sign_matrix(1)), 81);
  EXPECT_EQ(determinant(free_sign_matrix(-1)), 49);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) EXPECT_EQ(determinant(oracle::random(7, rng)), 0);
}

TEST(Determinant, MatchesLaplaceOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 400; ++trial) {
    const Tournament t = oracle::random(1 + trial % 14, rng);
    EXPECT_EQ(determinant(t), oracle::det(t)) << t.to_bits();
  }
}

TEST(Determinant, SubsetDeterminantMatchesInduced) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Tournament t = oracle::random(16, rng);
    const VertexSet x = VertexSet::from_mask(rng() & 0xffff);
    EXPECT_EQ(determinant(t, x), x.empty() ? 1 : determinant(induce(t, x)));
  }
}

TEST(Determinant, InvariantsOnEvenOrders) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * (1 + trial % 10);
    const Tournament t = oracle::random(n, rng);
    const ExactInt d = determinant(t);
    EXPECT_EQ(d % 8, 1);
    EXPECT_EQ(determinant(relabel(t, oracle::random_permutation(n, rng))), d);
    EXPECT_EQ(determinant(converse(t)), d);
  }
}

TEST(Determinant, CapacityLimit) {
  EXPECT_NO_THROW(determinant(Tournament(20)));
  EXPECT_THROW(determinant(Tournament(21)), CapacityError);
}

TEST(Pfaffian, Examples) {
  EXPECT_EQ(pfaffian(make_ln(4)) * pfaffian(make_ln(4)), 9);
  EXPECT_EQ(pfaffian(Tournament(2)), 1);
  EXPECT_THROW(pfaffian(Tournament(5)), ArgumentError);
  EXPECT_THROW(pfaffian(Tournament(22)), CapacityError);
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tournament t = oracle::random(2 * (1 + trial % 6), rng);
    const ExactInt pf = pfaffian(t);
    EXPECT_EQ(pf * pf, determinant(t));
    EXPECT_NE(pf % 2, 0);
  }
}

TEST(Pfaffian, LargestOrder) {
  const Tournament l20 = make_ln(20);
  const ExactInt pf = pfaffian(l20);
  EXPECT_EQ(pf * pf, 361);
}

TEST(MatrixText, RoundTrip) {
  std::mt19937_64 rng(14);
  const Tournament t = oracle::random(7, rng);
  EXPECT_EQ(parse_matrix_text(format_matrix_text(skew_matrix(t))).to_tournament(), t);
  EXPECT_THROW(parse_matrix_text("0 2\n-2 0\n"), FormatError);
  EXPECT_THROW(parse_matrix_text("0 1 1\n-1 0\n"), FormatError);
}

TEST(ExactIntText, Formatting) {
  EXPECT_EQ(to_string(ExactInt{0}), "0");
  EXPECT_EQ(to_string(ExactInt{-49}), "-49");
  ExactInt big = 1;
  for (int i = 0; i < 20; ++i) big *= 10;
  EXPECT_EQ(to_string(big), "100000000000000000000");
}
