#include "tourlab/diamonds.hpp"

#include "tourlab/linalg.hpp"

namespace tourlab {
namespace {

bool dominates_all(const Tournament& t, int v, VertexSet others) {
  return others.subset_of(t.out_set(v));
}

bool is_three_cycle(const Tournament& t, int a, int b, int c) {
  return (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
         (t.arc(b, a) && t.arc(c, b) && t.arc(a, c));
}

void check_census_order(const Tournament& t) {
  if (t.order() > kMaxCensusOrder) {
    throw CapacityError("diamond census supports n <= " + std::to_string(kMaxCensusOrder));
  }
}

}  // namespace

bool is_diamond(const Tournament& t4) {
  if (t4.order() != 4) throw ArgumentError("is_diamond() needs a 4-tournament");
  bool structural = false;
  for (int apex = 1; apex <= 4; ++apex) {
    const VertexSet rest = t4.vertices().without(apex);
    const std::vector<int> r = rest.members();
    if (!is_three_cycle(t4, r[0], r[1], r[2])) continue;
    if (dominates_all(t4, apex, rest) || rest.subset_of(t4.in_set(apex))) structural = true;
  }
  const ExactInt det = determinant(t4);
  if (structural != (det == 9)) {
    throw InvariantError("diamond predicate and determinant disagree on " + t4.to_bits());
  }
  return structural;
}

bool induces_diamond(const Tournament& t, VertexSet x) noexcept {
  // 4-tournament score multisets: transitive {3,2,1,0}, strong {2,2,1,1},
  // diamonds {3,1,1,1} and {2,2,2,0}; only diamonds have sum of squares 12.
  int squares = 0;
  x.for_each([&](int v) {
    const int s = (t.out_set(v) & x).size();
    squares += s * s;
  });
  return squares == 12;
}

std::int64_t diamond_count(const Tournament& t) {
  check_census_order(t);
  std::int64_t delta = 0;
  for_each_subset_of_size(t.vertices(), 4, [&](VertexSet x) {
    if (induces_diamond(t, x)) ++delta;
    return true;
  });
  return delta;
}

DiamondCensus diamond_census(const Tournament& t) {
  check_census_order(t);
  DiamondCensus census;
  for_each_subset_of_size(t.vertices(), 4, [&](VertexSet x) {
    if (induces_diamond(t, x)) census.witnesses.push_back(x);
    return true;
  });
  census.delta = static_cast<std::int64_t>(census.witnesses.size());
  return census;
}

bool delta_within_bounds(int n, std::int64_t delta) {
  if (delta == 0) return true;
  const std::int64_t c4 = static_cast<std::int64_t>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  return delta >= n - 3 && 5 * delta <= 2 * c4;
}

bool check_delta_bounds(const Tournament& t) {
  if (t.order() < 5) throw ArgumentError("delta bounds need n >= 5");
  return delta_within_bounds(t.order(), diamond_count(t));
}

}  // namespace tourlab
