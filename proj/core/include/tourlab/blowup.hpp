#pragma once

#include <optional>
#include <vector>

#include "tourlab/linalg.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// R(T_1,...,T_n): base vertex i replaced by parts[i-1].
struct BlowupSpec {
  Tournament base;
  std::vector<Tournament> parts;
};

/// Result of a blowup. Part i occupies a contiguous label range, in part
/// order; part_of[v-1] is the base vertex vertex v came from.
struct Blowup {
  Tournament tournament;
  std::vector<int> part_of;

  VertexSet part(int i) const;
};

/// Throws ArgumentError if the part count differs from the base order,
/// CapacityError if the total exceeds 64.
Blowup blowup(const BlowupSpec& spec);
/// R(a_1,...,a_n) with transitive parts; ArgumentError on counts < 1.
Blowup transitive_blowup_with_parts(const Tournament& base, const std::vector<int>& counts);
Tournament transitive_blowup(const Tournament& base, const std::vector<int>& counts);

/// det(R[U]) for U the base vertices with odd count (1 when U is empty).
ExactInt blowup_det_formula(const Tournament& base, const std::vector<int>& counts);

/// Vertices of the blowup spanning a 3-cycle of the first non-transitive
/// part plus the first vertex of every other part; its determinant is
/// 9 det(R). ArgumentError when every part is transitive.
VertexSet nine_det_witness(const BlowupSpec& spec);

/// A partition of T into transitive modules and the quotient on them.
struct BlowupStructure {
  Tournament base;
  /// Ordered by least member; base vertex i is parts[i-1].
  std::vector<VertexSet> parts;
};

/// Grows classes greedily in label order. A class absorbs the next vertex
/// when the smallest module containing both (a set every outside vertex
/// sees uniformly; for two vertices, a covertex pair) is proper, transitive
/// and disjoint from earlier classes. Absent when every class is a
/// singleton. Recovers the parts of any transitive blowup whose base has
/// order >= 3 and no transitive module of its own. CapacityError for n > 16.
std::optional<BlowupStructure> detect_blowup_structure(const Tournament& t);

/// base(T[X_1],...,T[X_m]) mapped back onto the original labels.
Tournament reassemble(const Tournament& t, const BlowupStructure& s);

}  // namespace tourlab
