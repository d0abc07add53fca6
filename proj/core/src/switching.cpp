#include "tourlab/switching.hpp"

#include <array>
#include <span>

namespace tourlab {

Tournament switched(const Tournament& t, SwitchSet w) {
  const int n = t.order();
  if (!w.vertices.subset_of(t.vertices())) {
    throw ArgumentError("switch set " + w.vertices.to_string() + " outside 1.." +
                        std::to_string(n));
  }
  const std::uint64_t inside = w.vertices.mask();
  const std::uint64_t outside = w.vertices.complement(n).mask();
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int v = 1; v <= n; ++v) {
    const std::uint64_t same = w.vertices.contains(v) ? inside : outside;
    rows[v - 1] = (t.out_set(v).mask() & same) | (t.in_set(v).mask() & ~same);
  }
  return Tournament::from_out_masks(std::span(rows.data(), n));
}

std::optional<SwitchSet> switching_equivalent_labeled(const Tournament& t1,
                                                      const Tournament& t2) {
  const int n = t1.order();
  if (t2.order() != n) {
    throw ArgumentError("switching equivalence needs tournaments of equal order");
  }
  // d_1 = +1, d_j = s2_1j * s1_1j; W collects the -1 entries.
  VertexSet w;
  for (int j = 2; j <= n; ++j) {
    if (t1.arc(1, j) != t2.arc(1, j)) w = w.with(j);
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool flip = w.contains(i) != w.contains(j);
      if ((t1.arc(i, j) != t2.arc(i, j)) != flip) return std::nullopt;
    }
  }
  return SwitchSet{w};
}

Tournament switching_canonical(const Tournament& t) {
  const int n = t.order();
  if (n > kMaxCanonicalOrder) {
    throw CapacityError("switching_canonical supports n <= " +
                        std::to_string(kMaxCanonicalOrder));
  }
  std::optional<std::string> best_bits;
  std::optional<Tournament> best;
  // Masks over vertices 2..n only: vertex 1 is never switched.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < limit; ++m) {
    const Tournament c = canonical_form(switched(t, VertexSet::from_mask(m << 1)));
    std::string bits = c.to_bits();
    if (!best_bits || bits > *best_bits) {
      best_bits = std::move(bits);
      best = c;
    }
  }
  return *best;
}

}  // namespace tourlab
