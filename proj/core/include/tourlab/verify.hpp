#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tourlab/linalg.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// Largest order whose labeled population is indexable by 64 bits.
inline constexpr int kMaxIndexedOrder = 11;
/// Largest order swept exhaustively.
inline constexpr int kMaxSweepOrder = 7;

/// 2^{n(n-1)/2}. CapacityError for n > 11.
std::uint64_t labeled_count(int n);

/// The index-th labeled n-tournament in increasing bit-string order: the
/// pair (1,2) is the most significant bit of the index.
Tournament labeled_tournament(int n, std::uint64_t index);

/// Visits the labeled n-tournaments with index in [begin, end).
template <class F>
void enumerate_labeled(int n, std::uint64_t begin, std::uint64_t end, F&& f) {
  for (std::uint64_t i = begin; i < end; ++i) f(labeled_tournament(n, i));
}

/// Every labeled n-tournament, n <= 7.
template <class F>
void enumerate_labeled(int n, F&& f) {
  if (n > kMaxSweepOrder) throw CapacityError("full sweeps support n <= 7");
  enumerate_labeled(n, 0, labeled_count(n), f);
}

/// Uniform random labeled n-tournament.
Tournament random_tournament(int n, std::mt19937_64& rng);
/// Random tournament number `index` of the stream for `seed`; independent
/// of how the stream is split across workers.
Tournament sample_tournament(int n, std::uint64_t seed, std::uint64_t index);
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// requested > 0 wins, then TOURLAB_THREADS, then hardware concurrency.
int resolve_threads(int requested);

/// Calls body(begin, end) over disjoint chunks covering [0, count).
void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body);

/// Least index in [0, count) with violates(index), if any.
std::optional<std::uint64_t> parallel_find_first(
    std::uint64_t count, int threads, const std::function<bool(std::uint64_t)>& violates);

struct VerifyConfig {
  std::uint64_t seed = 20240611;
  int threads = 0;
  /// Smaller populations for smoke runs.
  bool quick = false;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  std::string population;
  std::uint64_t count = 0;
  bool passed = false;
  std::optional<Tournament> counterexample;
  std::uint64_t seed = 0;
  std::chrono::duration<double> elapsed{};
  /// Extra tables or values, one line each.
  std::vector<std::string> details;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

const std::vector<ClaimInfo>& claim_registry();
/// ArgumentError for unknown ids.
ClaimReport run_claim(const std::string& id, const VerifyConfig& config = {});

struct CensusRow {
  ExactInt det = 0;
  std::int64_t delta = 0;
  int level = 1;
  std::uint64_t count = 0;
};

struct CensusResult {
  int order = 0;
  bool sampled = false;
  std::uint64_t population = 0;
  std::uint64_t seed = 0;
  /// Sorted by (det, delta, level).
  std::vector<CensusRow> rows;
};

/// Frequency of (det, delta, level): full sweep for n <= 7, `samples`
/// seeded draws for n = 8, 9. CapacityError beyond.
CensusResult census(int n, const VerifyConfig& config = {}, std::uint64_t samples = 100000);

}  // namespace tourlab
