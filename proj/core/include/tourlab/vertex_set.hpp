#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tourlab {

/// A subset of {1..64}, one bit per vertex (vertex v is bit v-1).
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;

  static constexpr VertexSet from_mask(std::uint64_t mask) noexcept {
    VertexSet s;
    s.mask_ = mask;
    return s;
  }
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(const std::vector<int>& vertices);
  /// {1..n}.
  static constexpr VertexSet full(int n) noexcept {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// Parses "1,3,5" (empty string or "-" is the empty set).
  static VertexSet parse(std::string_view text);

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(int v) const noexcept {
    return v >= 1 && v <= 64 && ((mask_ >> (v - 1)) & 1u);
  }
  /// Smallest member; 0 for the empty set.
  constexpr int first() const noexcept {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }
  /// Largest member; 0 for the empty set.
  constexpr int last() const noexcept {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
  }
  constexpr VertexSet with(int v) const noexcept {
    return from_mask(mask_ | (std::uint64_t{1} << (v - 1)));
  }
  constexpr VertexSet without(int v) const noexcept {
    return from_mask(mask_ & ~(std::uint64_t{1} << (v - 1)));
  }
  constexpr bool subset_of(VertexSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Complement inside {1..n}.
  constexpr VertexSet complement(int n) const noexcept {
    return from_mask(~mask_ & full(n).mask_);
  }

  std::vector<int> members() const;
  /// "1,3,5"; "-" for the empty set.
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      f(std::countr_zero(m) + 1);
    }
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.mask_ ^ b.mask_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on the increasing member lists ({1,2} < {1,2,3} < {1,3}).
bool lex_less(VertexSet a, VertexSet b) noexcept;

/// Calls f(VertexSet) for every k-subset of `universe`, in lexicographic
/// order of member lists. Stops early when f returns false.
template <class F>
void for_each_subset_of_size(VertexSet universe, int k, F&& f) {
  const std::vector<int> pool = universe.members();
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << (pool[i] - 1);
    if (!f(VertexSet::from_mask(mask))) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tourlab
