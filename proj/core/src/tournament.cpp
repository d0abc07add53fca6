#include "tourlab/tournament.hpp"

#include <algorithm>
#include <numeric>

namespace tourlab {
namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw CapacityError("tournament order " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxOrder));
  }
}

}  // namespace

Tournament::Tournament(int n) : n_(n) {
  check_order(n);
  for (int i = 1; i <= n; ++i) {
    out_[i - 1] = VertexSet::full(n).mask() & ~VertexSet::full(i).mask();
  }
}

Tournament Tournament::from_bits(int n, std::string_view bits) {
  check_order(n);
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != expected) {
    throw FormatError("expected " + std::to_string(expected) + " pair bits for n=" +
                      std::to_string(n) + ", got " + std::to_string(bits.size()));
  }
  Tournament t(n);
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if (bits[k] == '1') {
        t.set_arc(i, j);
      } else if (bits[k] == '0') {
        t.set_arc(j, i);
      } else {
        throw FormatError(std::string("invalid pair bit '") + bits[k] + "'");
      }
    }
  }
  return t;
}

Tournament Tournament::from_out_masks(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Tournament t(n);
  const std::uint64_t all = VertexSet::full(n).mask();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t self = std::uint64_t{1} << i;
    if ((rows[i] & ~all) != 0 || (rows[i] & self) != 0) {
      throw FormatError("out-mask of vertex " + std::to_string(i + 1) + " is invalid");
    }
    t.out_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (((rows[i] >> j) & 1u) == ((rows[j] >> i) & 1u)) {
        throw FormatError("out-masks do not orient the pair (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") exactly once");
      }
    }
  }
  return t;
}

std::string Tournament::to_bits() const {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) bits += arc(i, j) ? '1' : '0';
  }
  return bits;
}

bool Tournament::dominates(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw ArgumentError("vertex outside 1.." + std::to_string(n_));
  }
  if (i == j) throw ArgumentError("dominates() needs two distinct vertices");
  return arc(i, j);
}

void Tournament::set_arc(int from, int to) {
  if (from < 1 || from > n_ || to < 1 || to > n_ || from == to) {
    throw ArgumentError("set_arc(" + std::to_string(from) + ", " + std::to_string(to) +
                        ") invalid for n=" + std::to_string(n_));
  }
  out_[from - 1] |= std::uint64_t{1} << (to - 1);
  out_[to - 1] &= ~(std::uint64_t{1} << (from - 1));
}

Tournament three_cycle() { return Tournament::from_bits(3, "101"); }

Tournament induce(const Tournament& t, VertexSet x) {
  if (x.empty()) throw ArgumentError("induce() needs a nonempty vertex set");
  if (!x.subset_of(t.vertices())) {
    throw ArgumentError("vertex set " + x.to_string() + " not inside 1.." +
                        std::to_string(t.order()));
  }
  const std::vector<int> vs = x.members();
  return induce_ordered(t, vs);
}

Tournament induce_ordered(const Tournament& t, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  if (m == 0) throw ArgumentError("induce() needs a nonempty vertex set");
  Tournament r(m);
  VertexSet seen;
  for (int v : vertices) {
    if (v < 1 || v > t.order() || seen.contains(v)) {
      throw ArgumentError("induce_ordered(): bad or repeated vertex " + std::to_string(v));
    }
    seen = seen.with(v);
  }
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (!t.arc(vertices[a - 1], vertices[b - 1])) r.set_arc(b, a);
    }
  }
  return r;
}

Tournament relabel(const Tournament& t, std::span<const int> sigma) {
  const int n = t.order();
  if (static_cast<int>(sigma.size()) != n) {
    throw ArgumentError("relabel(): permutation length mismatch");
  }
  std::vector<int> inverse(n, 0);
  for (int i = 1; i <= n; ++i) {
    const int image = sigma[i - 1];
    if (image < 1 || image > n || inverse[image - 1] != 0) {
      throw ArgumentError("relabel(): not a permutation of 1..n");
    }
    inverse[image - 1] = i;
  }
  return induce_ordered(t, inverse);
}

Tournament converse(const Tournament& t) {
  Tournament r(t.order());
  for (int i = 1; i <= t.order(); ++i) {
    for (int j = i + 1; j <= t.order(); ++j) {
      if (t.arc(i, j)) r.set_arc(j, i);
    }
  }
  return r;
}

Tournament join(const Tournament& t1, const Tournament& t2) {
  const int n1 = t1.order(), n2 = t2.order();
  if (n1 + n2 > kMaxOrder) {
    throw CapacityError("join would have " + std::to_string(n1 + n2) + " vertices");
  }
  Tournament r(n1 + n2);  // cross arcs already point from T1 to T2
  for (int i = 1; i <= n1; ++i) {
    for (int j = i + 1; j <= n1; ++j) {
      if (!t1.arc(i, j)) r.set_arc(j, i);
    }
  }
  for (int i = 1; i <= n2; ++i) {
    for (int j = i + 1; j <= n2; ++j) {
      if (!t2.arc(i, j)) r.set_arc(n1 + j, n1 + i);
    }
  }
  return r;
}

Tournament cone_plus(const Tournament& t) { return join(t, single_vertex()); }
Tournament cone_minus(const Tournament& t) { return join(single_vertex(), t); }

bool is_transitive(const Tournament& t) noexcept {
  // Transitive iff the score sequence is exactly {0, ..., n-1}.
  std::uint64_t seen = 0;
  for (int v = 1; v <= t.order(); ++v) seen |= std::uint64_t{1} << t.out_degree(v);
  return seen == VertexSet::full(t.order()).mask();
}

std::optional<std::vector<int>> transitive_order(const Tournament& t) {
  return transitive_order(t, t.vertices());
}

std::optional<std::vector<int>> transitive_order(const Tournament& t, VertexSet x) {
  const int k = x.size();
  std::vector<int> order(k, 0);
  bool ok = true;
  x.for_each([&](int v) {
    const int score = (t.out_set(v) & x).size();
    // Position k-1-score; a collision means two equal scores.
    int& slot = order[k - 1 - score];
    if (slot != 0) ok = false;
    slot = v;
  });
  if (!ok) return std::nullopt;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (!t.arc(order[a], order[b])) return std::nullopt;
    }
  }
  return order;
}

// Canonical labelling by ordered-partition refinement. Row p of the encoding
// depends only on which vertex sits at position p and how it splits the cells
// after it, so each position greedily takes a vertex of the leading cell with
// the best split profile and only ties are branched on.
namespace {

struct CanonSearch {
  const Tournament& t;
  int n;
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_order;
  std::vector<std::uint64_t> rows;
  std::vector<int> order;
  bool have_best = false;

  // cmp compares the committed rows with the same rows of the best labelling:
  // 0 equal, 1 greater. Worse prefixes are never expanded.
  void run(std::vector<std::uint64_t> cells, int depth, int cmp) {
    if (depth == n) {
      if (!have_best || cmp > 0) {
        best_rows = rows;
        best_order = order;
        have_best = true;
      }
      return;
    }
    const std::uint64_t lead = cells.front();
    // Score each candidate by the out-count it leaves in every cell.
    std::vector<std::uint64_t> keys;
    std::vector<int> candidates;
    std::uint64_t best_key = 0;
    bool first = true;
    for (std::uint64_t m = lead; m != 0; m &= m - 1) {
      const int v0 = std::countr_zero(m);
      const std::uint64_t out = t.out_set(v0 + 1).mask();
      std::uint64_t row = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint64_t cell = cells[c];
        if (c == 0) cell &= ~(std::uint64_t{1} << v0);
        const int size = std::popcount(cell);
        const int ones = std::popcount(cell & out);
        row <<= size;
        row |= ((std::uint64_t{1} << ones) - 1) << (size - ones);
      }
      if (first || row > best_key) {
        best_key = row;
        candidates.assign(1, v0 + 1);
        first = false;
      } else if (row == best_key) {
        candidates.push_back(v0 + 1);
      }
    }
    int next_cmp = cmp;
    if (have_best && cmp == 0) {
      if (best_key < best_rows[depth]) return;
      if (best_key > best_rows[depth]) next_cmp = 1;
    }
    rows[depth] = best_key;
    for (int v : candidates) {
      const std::uint64_t out = t.out_set(v).mask();
      std::vector<std::uint64_t> next;
      next.reserve(cells.size() * 2);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint64_t cell = cells[c];
        if (c == 0) cell &= ~(std::uint64_t{1} << (v - 1));
        if (cell & out) next.push_back(cell & out);
        if (cell & ~out) next.push_back(cell & ~out);
      }
      order[depth] = v;
      run(std::move(next), depth + 1, next_cmp);
      // The first child of a strictly better prefix always becomes the new
      // best, so later siblings compare equal on this prefix.
      if (next_cmp > 0) next_cmp = 0;
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Tournament& t) {
  if (t.order() > kMaxCanonicalOrder) {
    throw CapacityError("canonical form supports n <= " +
                        std::to_string(kMaxCanonicalOrder));
  }
  CanonSearch search{t, t.order(), {}, {}, std::vector<std::uint64_t>(t.order(), 0),
                     std::vector<int>(t.order(), 0)};
  search.run({t.vertices().mask()}, 0, 0);
  return search.best_order;
}

Tournament canonical_form(const Tournament& t) {
  const std::vector<int> order = canonical_labeling(t);
  return induce_ordered(t, order);
}

}  // namespace tourlab
