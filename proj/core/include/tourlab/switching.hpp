#pragma once

#include <optional>

#include "tourlab/tournament.hpp"

namespace tourlab {

/// The vertex set W of a switch. W and its complement induce the same switch;
/// normalized() picks the representative that avoids vertex 1.
struct SwitchSet {
  VertexSet vertices;

  SwitchSet normalized(int n) const noexcept {
    return vertices.contains(1) ? SwitchSet{vertices.complement(n)} : *this;
  }
  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;
};

/// Reverses every arc between W and V \ W.
Tournament switched(const Tournament& t, SwitchSet w);
inline Tournament switched(const Tournament& t, VertexSet w) { return switched(t, SwitchSet{w}); }

/// A W with switched(t1, W) == t2, found by propagating the ±1 diagonal
/// similarity from vertex 1; the result never contains vertex 1.
std::optional<SwitchSet> switching_equivalent_labeled(const Tournament& t1,
                                                      const Tournament& t2);

/// Greatest canonical_form() over the 2^{n-1} distinct switches of T. Equal
/// for two tournaments iff one is isomorphic to a switch of the other.
/// Throws CapacityError for n > 10.
Tournament switching_canonical(const Tournament& t);

}  // namespace tourlab
