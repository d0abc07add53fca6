#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;

TEST(Enumerate, Counts) {
  int total = 0, cycles = 0;
  enumerate_labeled(3, [&](const Tournament& t) {
    ++total;
    cycles += !is_transitive(t);
  });
  EXPECT_EQ(total, 8);
  EXPECT_EQ(cycles, 2);
  int one = 0;
  enumerate_labeled(1, [&](const Tournament&) { ++one; });
  EXPECT_EQ(one, 1);
  EXPECT_EQ(labeled_count(5), 1024u);
  EXPECT_THROW(enumerate_labeled(8, [](const Tournament&) {}), CapacityError);
}

TEST(Enumerate, IncreasingBitOrderAndDistinct) {
  std::set<std::string> seen;
  std::string previous;
  enumerate_labeled(5, [&](const Tournament& t) {
    const std::string bits = t.to_bits();
    EXPECT_LT(previous, bits);
    previous = bits;
    seen.insert(bits);
  });
  EXPECT_EQ(seen.size(), 1024u);
  EXPECT_EQ(labeled_tournament(4, 0).to_bits(), "000000");
  EXPECT_EQ(labeled_tournament(4, 63).to_bits(), "111111");
  EXPECT_EQ(labeled_tournament(4, 32).to_bits(), "100000");
}

TEST(Sampling, Deterministic) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_tournament(9, 42, i), sample_tournament(9, 42, i));
  }
  EXPECT_NE(sample_tournament(9, 42, 0), sample_tournament(9, 43, 0));
}

TEST(Parallel, FindFirstIsLeastIndex) {
  for (int threads : {1, 2, 4}) {
    const auto found = parallel_find_first(100000, threads, [](std::uint64_t i) {
      return i % 9973 == 9972 || i == 50001;
    });
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, 9972u);
    EXPECT_FALSE(parallel_find_first(5000, threads, [](std::uint64_t) { return false; }));
  }
}

TEST(Parallel, ThreadResolution) {
  EXPECT_EQ(resolve_threads(3), 3);
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(Claims, RegistryIsUniqueAndRunnable) {
  std::set<std::string> ids;
  for (const ClaimInfo& c : claim_registry()) EXPECT_TRUE(ids.insert(c.id).second);
  for (const char* id : {"lemma-fzt", "prop-sixdd", "thm-resixdd", "thm-djoin", "prop-dettransi",
                         "lemma-diamond", "lemma-bounddia", "lemma-diainl", "prop-blowup",
                         "prop-ninedet", "lemma-ledetln", "thm-detln", "prop-maxln", "prop-subln",
                         "thm-anyoddsub", "thm-d5character", "prop-crforl6", "prop-mustcol6",
                         "cor-cronlyone", "prop-sixtran"}) {
    EXPECT_EQ(ids.count(id), 1u) << id;
  }
  EXPECT_THROW(run_claim("no-such-claim"), ArgumentError);
}

TEST(Claims, FztReport) {
  const ClaimReport r = run_claim("lemma-fzt");
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.count, 1024u);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(Claims, DetLnValues) {
  const ClaimReport r = run_claim("thm-detln");
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.details.size(), 1u);
  EXPECT_NE(r.details[0].find("1,9,25,49,81,121,169,225"), std::string::npos);
}

TEST(Claims, QuickRunsPassAndAreReproducible) {
  VerifyConfig config;
  config.quick = true;
  for (const ClaimInfo& c : claim_registry()) {
    const ClaimReport a = run_claim(c.id, config);
    EXPECT_TRUE(a.passed) << c.id;
    const ClaimReport b = run_claim(c.id, config);
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.details, b.details);
  }
}

TEST(CensusTest, SmallOrders) {
  const CensusResult c4 = census(4);
  std::set<std::int64_t> dets;
  for (const CensusRow& r : c4.rows) {
    dets.insert(static_cast<std::int64_t>(r.det));
    EXPECT_EQ(r.det == 9, r.delta == 1);
  }
  EXPECT_EQ(dets, (std::set<std::int64_t>{1, 9}));
  for (const CensusRow& r : census(5).rows) EXPECT_EQ(r.det, 0);
  std::uint64_t total = 0;
  for (const CensusRow& r : census(6).rows) {
    EXPECT_TRUE(r.det == 1 || r.det == 9 || r.det == 25 || r.det == 49 || r.det == 81);
    total += r.count;
  }
  EXPECT_EQ(total, 32768u);
  EXPECT_THROW(census(10), CapacityError);
}

TEST(CensusTest, SampledIsReproducible) {
  VerifyConfig config;
  config.seed = 5;
  const CensusResult a = census(8, config, 300);
  const CensusResult b = census(8, config, 300);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].count, b.rows[i].count);
  EXPECT_TRUE(a.sampled);
}
