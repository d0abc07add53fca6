#include "tourlab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "tourlab/classify.hpp"
#include "tourlab/diamonds.hpp"

namespace tourlab {

std::uint64_t labeled_count(int n) {
  if (n < 1 || n > kMaxIndexedOrder) throw CapacityError("labeled indexing supports n <= 11");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Tournament labeled_tournament(int n, std::uint64_t index) {
  const int pairs = n * (n - 1) / 2;
  if (index >= labeled_count(n)) throw ArgumentError("labeled index out of range");
  std::array<std::uint64_t, kMaxIndexedOrder> rows{};
  int bit = pairs - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --bit) {
      if ((index >> bit) & 1u) {
        rows[i] |= std::uint64_t{1} << j;
      } else {
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Tournament::from_out_masks(std::span(rows.data(), n));
}

Tournament random_tournament(int n, std::mt19937_64& rng) {
  Tournament t(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rng() & 1u) t.set_arc(j, i);
    }
  }
  return t;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

Tournament sample_tournament(int n, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = sample_rng(seed, index);
  return random_tournament(n, rng);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TOURLAB_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(std::max(1, resolve_threads(threads)), std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    body(0, count);
    return;
  }
  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        body(begin, std::min(count, begin + kChunk));
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

std::optional<std::uint64_t> parallel_find_first(
    std::uint64_t count, int threads, const std::function<bool(std::uint64_t)>& violates) {
  std::atomic<std::uint64_t> first{count};
  parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end && i < first.load(std::memory_order_relaxed); ++i) {
      if (violates(i)) {
        std::uint64_t current = first.load();
        while (i < current && !first.compare_exchange_weak(current, i)) {
        }
        return;
      }
    }
  });
  const std::uint64_t found = first.load();
  if (found == count) return std::nullopt;
  return found;
}

CensusResult census(int n, const VerifyConfig& config, std::uint64_t samples) {
  if (n < 1 || n > 9) throw CapacityError("census supports n <= 9");
  CensusResult result;
  result.order = n;
  result.sampled = n > kMaxSweepOrder;
  result.seed = config.seed;
  result.population = result.sampled ? samples : labeled_count(n);

  using Key = std::tuple<ExactInt, std::int64_t, int>;
  std::map<Key, std::uint64_t> merged;
  std::mutex lock;
  parallel_chunks(result.population, config.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::map<Key, std::uint64_t> local;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Tournament t =
          result.sampled ? sample_tournament(n, config.seed, i) : labeled_tournament(n, i);
      const ExactInt det = determinant(t);
      int level = 1;
      while (!in_dk(t, level)) level += 2;
      ++local[{det, diamond_count(t), level}];
    }
    std::lock_guard<std::mutex> guard(lock);
    for (const auto& [key, count] : local) merged[key] += count;
  });
  for (const auto& [key, count] : merged) {
    result.rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  }
  return result;
}

}  // namespace tourlab
