#pragma once

#include <vector>

#include "tourlab/linalg.hpp"
#include "tourlab/patterns.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

inline constexpr int kMaxLnOrder = 20;

/// 1 -> 2 -> ... -> n-1 transitive; vertex n dominates 1, 3, 5, ... and is
/// dominated by 2, 4, .... CapacityError outside 2..20.
Tournament make_ln(int n);

/// The m x m bordered matrix: first column alternating +1,-1,...; for
/// column c >= 2, row r holds 0 if r = c-1, +1 if r < c-1, -1 otherwise.
SignMatrix q_matrix(int m);
/// det(q_matrix(m)), computed directly and by the recurrence from Q_3 = 3,
/// Q_m = -Q_{m-1} (m even), Q_m = 2 - Q_{m-1} (m odd); InvariantError if
/// the two disagree. ArgumentError for m < 3, CapacityError for m > 20.
ExactInt q_value(int m);
ExactInt q_value_recurrence(int m);

/// (n-1)^2, checked against determinant(make_ln(n)) and the recurrence
/// det(L_n) = det(L_{n-2}) + 4(n-2). ArgumentError for odd n.
ExactInt ln_det(int n);

/// Isomorphic to L_n. CapacityError for n > 10.
bool is_ln(const Tournament& t);

struct ExtensionReport {
  int order = 0;
  ExactInt max_det = 0;
  /// Patterns of the extra vertex reaching max_det, in mask order.
  std::vector<PsiPattern> achievers;
  /// max_det == (n-1)^2 and the achievers are exactly the two fully
  /// alternating patterns.
  bool holds = false;
};

/// Sweeps all 2^{n-1} ways to attach one vertex to the transitive
/// (n-1)-tournament. ArgumentError for odd n, CapacityError for n > 10.
ExtensionReport max_onevertex_ext_det(int n);

}  // namespace tourlab
