#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

/// Signed run lengths (a_1,...,a_t) of a vertex u against the transitive
/// order x_1 -> ... -> x_m of a set X: the first |a_1| vertices are all
/// dominated by u if a_1 > 0 (all dominate u otherwise), then the next |a_2|
/// with the opposite sign, and so on.
class PsiPattern {
 public:
  /// Throws ArgumentError on zero entries or non-alternating signs.
  explicit PsiPattern(std::vector<int> alphas);

  const std::vector<int>& alphas() const noexcept { return alphas_; }
  int length() const noexcept { return static_cast<int>(alphas_.size()); }
  /// Sum of |a_i|.
  int order() const noexcept;
  /// Half-open index range [begin, end) of block i (1-based) in the order.
  std::pair<int, int> block(int i) const;
  /// Arc signs per position: +1 where u dominates the vertex.
  std::vector<int> signs() const;
  PsiPattern negated() const;
  /// "+1 -1 +1".
  std::string to_string() const;

  /// Maximal runs of a nonempty ±1 sequence.
  static PsiPattern from_signs(const std::vector<int>& signs);

  friend bool operator==(const PsiPattern&, const PsiPattern&) = default;

 private:
  std::vector<int> alphas_;
};

/// Throws ArgumentError if u is in X or X is empty, StructureError if T[X]
/// is not transitive.
PsiPattern psi(const Tournament& t, int u, VertexSet x);

/// The tournament on the transitive order 1..m plus vertex m+1 whose arcs
/// against 1..m follow the pattern.
Tournament with_psi(const PsiPattern& pattern);

enum class ThetaSign : int { Minus = -1, Plus = 1 };

/// +1 iff u -> v; ArgumentError when u == v.
ThetaSign theta(const Tournament& t, int u, int v);

/// Every third vertex sees u and v the same way.
bool covertices(const Tournament& t, int u, int v);
/// Every third vertex sees u and v in opposite ways.
bool revertices(const Tournament& t, int u, int v);

}  // namespace tourlab
