#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourlab/errors.hpp"
#include "tourlab/vertex_set.hpp"

namespace tourlab {

inline constexpr int kMaxOrder = 64;

/// A tournament on vertices 1..n, stored as one out-neighbour mask per vertex.
///
/// The canonical serialisation is the upper-triangle bit string in pair order
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n); bit (i,j) is '1' iff i -> j.
/// Values are cheap to copy and safe to share between threads; the only
/// mutator, set_arc(), is meant for construction.
class Tournament {
 public:
  /// The transitive tournament 1 -> 2 -> ... -> n.
  explicit Tournament(int n);

  /// Throws CapacityError unless 1 <= n <= 64 and FormatError unless `bits`
  /// has n(n-1)/2 characters from {'0','1'}.
  static Tournament from_bits(int n, std::string_view bits);
  std::string to_bits() const;
  /// From out-neighbour masks (bit v-1 for vertex v). Throws FormatError
  /// unless they describe exactly one arc per pair.
  static Tournament from_out_masks(std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::full(n_); }

  /// Checked: throws ArgumentError for i == j or indices outside 1..n.
  bool dominates(int i, int j) const;
  /// Unchecked variant of dominates().
  bool arc(int i, int j) const noexcept { return (out_[i - 1] >> (j - 1)) & 1u; }

  VertexSet out_set(int v) const noexcept { return VertexSet::from_mask(out_[v - 1]); }
  VertexSet in_set(int v) const noexcept {
    return VertexSet::from_mask(VertexSet::full(n_).mask() & ~out_[v - 1] &
                                ~(std::uint64_t{1} << (v - 1)));
  }
  int out_degree(int v) const noexcept { return out_set(v).size(); }

  /// Orients the pair {from, to} as from -> to.
  void set_arc(int from, int to);

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> out_{};
};

/// Single-vertex tournament K_1.
inline Tournament single_vertex() { return Tournament(1); }
/// The 3-cycle 1 -> 2 -> 3 -> 1.
Tournament three_cycle();

/// T[X] with vertices renumbered 1..|X| in increasing original index.
Tournament induce(const Tournament& t, VertexSet x);
/// Tournament on `vertices` taken in the listed order: new vertex k is
/// vertices[k-1]. Entries must be distinct.
Tournament induce_ordered(const Tournament& t, std::span<const int> vertices);
/// Relabels vertex i as sigma[i-1]; sigma must be a permutation of 1..n.
Tournament relabel(const Tournament& t, std::span<const int> sigma);
/// Every arc reversed.
Tournament converse(const Tournament& t);

/// T1 -> T2: disjoint union with every T1 vertex dominating every T2 vertex.
/// T1 keeps labels 1..n1, T2 is shifted by n1.
Tournament join(const Tournament& t1, const Tournament& t2);
/// T+ : a new last vertex dominated by all of T.
Tournament cone_plus(const Tournament& t);
/// T- : a new first vertex dominating all of T.
Tournament cone_minus(const Tournament& t);

bool is_transitive(const Tournament& t) noexcept;
/// The dominance order v_1 -> ... -> v_n when T is transitive.
std::optional<std::vector<int>> transitive_order(const Tournament& t);
/// Same as transitive_order() restricted to T[X], in original labels.
std::optional<std::vector<int>> transitive_order(const Tournament& t, VertexSet x);

inline constexpr int kMaxCanonicalOrder = 10;

/// Order of original vertices giving the canonical relabelling.
std::vector<int> canonical_labeling(const Tournament& t);
/// Relabelling with the lexicographically greatest bit encoding (so every
/// transitive tournament maps to all ones). Throws CapacityError for n > 10.
Tournament canonical_form(const Tournament& t);

// .trn text format: line 1 is n, line 2 the pair-order bit string.
Tournament parse_trn(std::string_view text);
std::string format_trn(const Tournament& t);
Tournament read_trn_file(const std::string& path);
void write_trn_file(const std::string& path, const Tournament& t);

}  // namespace tourlab
