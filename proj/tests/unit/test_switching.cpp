#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "tourlab/diamonds.hpp"
#include "tourlab/linalg.hpp"
#include "tourlab/lnfamily.hpp"
#include "tourlab/switching.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;

TEST(Switch, MatchesDefinition) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 16;
    const Tournament t = oracle::random(n, rng);
    const VertexSet w = VertexSet::from_mask(rng() & VertexSet::full(n).mask());
    EXPECT_EQ(switched(t, w), oracle::switch_by(t, w));
  }
}

TEST(Switch, EmptyComplementAndInvolution) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 12;
    const Tournament t = oracle::random(n, rng);
    const VertexSet w = VertexSet::from_mask(rng() & VertexSet::full(n).mask());
    EXPECT_EQ(switched(t, VertexSet{}), t);
    EXPECT_EQ(switched(t, t.vertices()), t);
    EXPECT_EQ(switched(t, w), switched(t, w.complement(n)));
    EXPECT_EQ(switched(switched(t, w), w), t);
  }
}

TEST(Switch, L4AtVertexFourKeepsDeterminant) {
  EXPECT_EQ(oracle::det(switched(make_ln(4), VertexSet::of({4}))), 9);
}

TEST(SwitchEquivalence, FindsAWitness) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 12;
    const Tournament t = oracle::random(n, rng);
    const Tournament s = switched(t, VertexSet::from_mask(rng() & VertexSet::full(n).mask()));
    const auto w = switching_equivalent_labeled(t, s);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(switched(t, *w), s);
  }
}

TEST(SwitchEquivalence, L6AtVertexSix) {
  const Tournament l6 = make_ln(6);
  const auto w = switching_equivalent_labeled(l6, switched(l6, VertexSet::of({6})));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->vertices == VertexSet::of({6}) || w->vertices == VertexSet::of({1, 2, 3, 4, 5}));
}

TEST(SwitchEquivalence, ThreeCycleAndTransitive) {
  const Tournament cycle = Tournament::from_bits(3, "101");
  EXPECT_FALSE(switching_equivalent_labeled(cycle, Tournament(3)).has_value());
  for (std::uint64_t m = 0; m < 8; ++m) {
    EXPECT_NE(oracle::switch_by(cycle, VertexSet::from_mask(m)), Tournament(3));
  }
  EXPECT_TRUE(is_transitive(oracle::switch_by(cycle, VertexSet::of({1}))));
}

TEST(SwitchEquivalence, RejectsNonEquivalent) {
  std::mt19937_64 rng(4);
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Tournament a = oracle::random(6, rng);
    const Tournament b = oracle::random(6, rng);
    bool brute = false;
    for (std::uint64_t m = 0; m < 64; ++m) brute = brute || oracle::switch_by(a, VertexSet::from_mask(m)) == b;
    EXPECT_EQ(switching_equivalent_labeled(a, b).has_value(), brute);
    rejected += !brute;
  }
  EXPECT_GT(rejected, 0);
}

TEST(SwitchingClass, HasTwoToTheNMinusOneMembers) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const Tournament t = oracle::random(n, rng);
    std::set<std::string> members;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      members.insert(switched(t, VertexSet::from_mask(m)).to_bits());
    }
    EXPECT_EQ(members.size(), std::size_t{1} << (n - 1));
  }
}

TEST(SwitchingCanonical, InvariantUnderSwitchAndRelabel) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const Tournament t = oracle::random(n, rng);
    const Tournament moved = switched(relabel(t, oracle::random_permutation(n, rng)),
                                      VertexSet::from_mask(rng() & VertexSet::full(n).mask()));
    EXPECT_EQ(switching_canonical(moved), switching_canonical(t));
  }
  EXPECT_THROW(switching_canonical(Tournament(11)), CapacityError);
}

TEST(SwitchingCanonical, SeparatesClassesLikeBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Tournament a = oracle::random(5, rng);
    const Tournament b = oracle::random(5, rng);
    std::set<std::string> reach;
    for (std::uint64_t m = 0; m < 32; ++m) {
      for (const auto& bits : oracle::all_relabellings(oracle::switch_by(a, VertexSet::from_mask(m)))) {
        reach.insert(bits);
      }
    }
    EXPECT_EQ(switching_canonical(a) == switching_canonical(b), reach.count(b.to_bits()) == 1);
  }
}

TEST(SwitchingCanonical, BothDiamondsShareAClass) {
  EXPECT_EQ(switching_canonical(cone_plus(three_cycle())),
            switching_canonical(cone_minus(three_cycle())));
}

TEST(SwitchingCanonical, Det25SixTournamentsAreL6Class) {
  const Tournament l6_class = switching_canonical(make_ln(6));
  std::uint64_t hits = 0;
  enumerate_labeled(6, [&](const Tournament& t) {
    if (determinant(t) == 25) {
      ++hits;
      EXPECT_EQ(switching_canonical(t), l6_class);
    }
  });
  EXPECT_GT(hits, 0u);
}

TEST(SwitchInvariants, PrincipalMinorsAndDelta) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    const Tournament t = oracle::random(n, rng);
    const VertexSet w = VertexSet::from_mask(rng() & VertexSet::full(n).mask());
    const Tournament s = switched(t, w);
    EXPECT_EQ(diamond_count(s), diamond_count(t));
    for (int k = 0; k < 200; ++k) {
      const VertexSet u = VertexSet::from_mask((rng() & VertexSet::full(n).mask()) | 1);
      EXPECT_EQ(determinant(t, u), determinant(s, u));
    }
  }
}
