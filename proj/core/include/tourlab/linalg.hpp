#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourlab/tournament.hpp"

namespace tourlab {

/// Exact carrier for determinants and Pfaffians. 128 bits hold every
/// minor of an order-20 {-1,0,1} matrix (Hadamard: 20^10 < 2^127) and every
/// Bareiss cross product along the way.
__extension__ typedef __int128 ExactInt;

std::string to_string(ExactInt value);

inline constexpr int kMaxDeterminantOrder = 20;

/// Square matrix with entries in {-1, 0, 1}, 0-based (row, col) indexing.
class SignMatrix {
 public:
  explicit SignMatrix(int n);
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int order() const noexcept { return n_; }
  int operator()(int r, int c) const noexcept { return a_[r * n_ + c]; }
  void set(int r, int c, int value);

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int n_;
  std::vector<std::int8_t> a_;
};

/// Skew-adjacency matrix S_T: zero diagonal, s_ij = 1 = -s_ji iff i -> j.
class SkewMatrix {
 public:
  /// Throws FormatError unless `m` is skew with nonzero off-diagonal entries.
  explicit SkewMatrix(SignMatrix m);

  int order() const noexcept { return m_.order(); }
  /// Entry for vertices i, j (1-based).
  int entry(int i, int j) const noexcept { return m_(i - 1, j - 1); }
  const SignMatrix& matrix() const noexcept { return m_; }
  /// The tournament read off the +1 entries.
  Tournament to_tournament() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  SignMatrix m_;
};

SkewMatrix skew_matrix(const Tournament& t);

/// Bareiss fraction-free elimination. Throws CapacityError above order 20.
ExactInt determinant(const SignMatrix& m);
/// det(S_T). Throws CapacityError for n > 20.
ExactInt determinant(const Tournament& t);
/// det(S_{T[X]}) without materialising T[X]; det of the empty set is 1.
ExactInt determinant(const Tournament& t, VertexSet x);

/// Pfaffian of S_T by expansion along the lowest remaining vertex, memoised
/// over vertex subsets. Throws ArgumentError for odd n, CapacityError for
/// n > 20.
ExactInt pfaffian(const Tournament& t);
ExactInt pfaffian(const SkewMatrix& s);

// Plain-text matrix form used by `convert`: n lines of n integers.
SkewMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const SkewMatrix& s);

}  // namespace tourlab
