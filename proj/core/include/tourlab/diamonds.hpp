#pragma once

#include <cstdint>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

inline constexpr int kMaxCensusOrder = 16;

/// delta_T with the diamond 4-subsets in lexicographic order.
struct DiamondCensus {
  std::int64_t delta = 0;
  std::vector<VertexSet> witnesses;
};

/// True iff a vertex of the 4-tournament dominates, or is dominated by, a
/// 3-cycle on the other three. Also checks the determinant route (9 vs 1)
/// and throws InvariantError if the two disagree. ArgumentError unless n = 4.
bool is_diamond(const Tournament& t4);

/// Whether T[X] is a diamond, for |X| = 4 (unchecked, score based).
bool induces_diamond(const Tournament& t, VertexSet x) noexcept;

/// Number of diamonds; CapacityError for n > 16.
std::int64_t diamond_count(const Tournament& t);
DiamondCensus diamond_census(const Tournament& t);

/// delta_T = 0 or n-3 <= delta_T <= (2/5) C(n,4). ArgumentError for n < 5.
bool check_delta_bounds(const Tournament& t);
bool delta_within_bounds(int n, std::int64_t delta);

}  // namespace tourlab
