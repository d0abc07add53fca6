#include "tourlab/linalg.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace tourlab {

std::string to_string(ExactInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag != 0) {
    digits += static_cast<char>('0' + static_cast<int>(mag % 10));
    mag /= 10;
  }
  if (negative) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

SignMatrix::SignMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw ArgumentError("negative matrix order");
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SignMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.order(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.order()) {
      throw FormatError("matrix row " + std::to_string(r + 1) + " has wrong length");
    }
    for (int c = 0; c < m.order(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void SignMatrix::set(int r, int c, int value) {
  if (value < -1 || value > 1) throw FormatError("matrix entries must be -1, 0 or 1");
  a_[r * n_ + c] = static_cast<std::int8_t>(value);
}

SkewMatrix::SkewMatrix(SignMatrix m) : m_(std::move(m)) {
  for (int i = 0; i < order(); ++i) {
    if (m_(i, i) != 0) throw FormatError("skew matrix needs a zero diagonal");
    for (int j = i + 1; j < order(); ++j) {
      if (m_(i, j) == 0 || m_(i, j) != -m_(j, i)) {
        throw FormatError("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") are not a tournament skew pair");
      }
    }
  }
}

Tournament SkewMatrix::to_tournament() const {
  Tournament t(order());
  for (int i = 1; i <= order(); ++i) {
    for (int j = i + 1; j <= order(); ++j) {
      if (entry(i, j) < 0) t.set_arc(j, i);
    }
  }
  return t;
}

SkewMatrix skew_matrix(const Tournament& t) {
  SignMatrix m(t.order());
  for (int i = 1; i <= t.order(); ++i) {
    for (int j = 1; j <= t.order(); ++j) {
      if (i != j) m.set(i - 1, j - 1, t.arc(i, j) ? 1 : -1);
    }
  }
  return SkewMatrix(std::move(m));
}

namespace {

// Bareiss elimination with row pivoting on a dense k x k buffer. Every
// intermediate is a minor, so Int only needs room for the Hadamard bound of
// the cross products.
template <class Int>
Int bareiss(std::array<Int, kMaxDeterminantOrder * kMaxDeterminantOrder>& a, int k) {
  if (k == 0) return 1;
  auto at = [&](int r, int c) -> Int& { return a[r * kMaxDeterminantOrder + c]; };
  Int sign = 1;
  Int prev = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r) {
        if (at(r, p) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = p; c < k; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    const Int pivot = at(p, p);
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) {
        at(r, c) = (at(r, c) * pivot - at(r, p) * at(p, c)) / prev;
      }
    }
    prev = pivot;
  }
  return sign * at(k - 1, k - 1);
}

// Orders up to 14 stay inside int64: the largest cross product is at most
// 2 * 14^14 < 2^63.
constexpr int kInt64Order = 14;

template <class Fill>
ExactInt eliminate(int k, Fill&& fill) {
  if (k <= kInt64Order) {
    std::array<std::int64_t, kMaxDeterminantOrder * kMaxDeterminantOrder> a;
    fill([&](int r, int c, int v) { a[r * kMaxDeterminantOrder + c] = v; });
    return bareiss(a, k);
  }
  std::array<ExactInt, kMaxDeterminantOrder * kMaxDeterminantOrder> a;
  fill([&](int r, int c, int v) { a[r * kMaxDeterminantOrder + c] = v; });
  return bareiss(a, k);
}

void check_det_order(int n) {
  if (n > kMaxDeterminantOrder) {
    throw CapacityError("exact determinants support order <= " +
                        std::to_string(kMaxDeterminantOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

ExactInt determinant(const SignMatrix& m) {
  check_det_order(m.order());
  return eliminate(m.order(), [&](auto&& put) {
    for (int r = 0; r < m.order(); ++r) {
      for (int c = 0; c < m.order(); ++c) put(r, c, m(r, c));
    }
  });
}

ExactInt determinant(const Tournament& t) { return determinant(t, t.vertices()); }

ExactInt determinant(const Tournament& t, VertexSet x) {
  if (!x.subset_of(t.vertices())) throw ArgumentError("vertex set outside the tournament");
  const int k = x.size();
  check_det_order(k);
  std::array<int, kMaxDeterminantOrder> vs{};
  int idx = 0;
  x.for_each([&](int v) { vs[idx++] = v; });
  return eliminate(k, [&](auto&& put) {
    for (int r = 0; r < k; ++r) {
      const std::uint64_t out = t.out_set(vs[r]).mask();
      for (int c = 0; c < k; ++c) {
        put(r, c, r == c ? 0 : (((out >> (vs[c] - 1)) & 1u) ? 1 : -1));
      }
    }
  });
}

namespace {

class PfaffianExpansion {
 public:
  explicit PfaffianExpansion(const SkewMatrix& s)
      : s_(s), n_(s.order()), memo_(std::size_t{1} << n_), known_(std::size_t{1} << n_, 0) {}

  ExactInt run() { return pf(VertexSet::full(n_).mask()); }

 private:
  // Pf over the index set `mask`: expand along its lowest member i,
  // Pf = sum_j (-1)^{#members strictly between i and j} s_ij Pf(mask - {i,j}).
  ExactInt pf(std::uint64_t mask) {
    if (mask == 0) return 1;
    if (known_[mask]) return memo_[mask];
    const int i = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    ExactInt total = 0;
    int between = 0;
    for (std::uint64_t m = rest; m != 0; m &= m - 1, ++between) {
      const int j = std::countr_zero(m);
      const ExactInt sub = pf(rest & ~(std::uint64_t{1} << j));
      const ExactInt term = s_.entry(i + 1, j + 1) * sub;
      total += (between % 2 == 0) ? term : -term;
    }
    known_[mask] = 1;
    memo_[mask] = total;
    return total;
  }

  const SkewMatrix& s_;
  int n_;
  std::vector<ExactInt> memo_;
  std::vector<std::uint8_t> known_;
};

}  // namespace

ExactInt pfaffian(const SkewMatrix& s) {
  if (s.order() % 2 != 0) throw ArgumentError("Pfaffian needs even order");
  check_det_order(s.order());
  return PfaffianExpansion(s).run();
}

ExactInt pfaffian(const Tournament& t) {
  if (t.order() % 2 != 0) throw ArgumentError("Pfaffian needs even order");
  check_det_order(t.order());
  return pfaffian(skew_matrix(t));
}

SkewMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok != "-1" && tok != "0" && tok != "1") {
        throw FormatError("matrix entry '" + tok + "' is not -1, 0 or 1");
      }
      row.push_back(std::stoi(tok));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("empty matrix");
  if (static_cast<int>(rows.size()) > kMaxOrder) throw CapacityError("matrix too large");
  return SkewMatrix(SignMatrix::from_rows(rows));
}

std::string format_matrix_text(const SkewMatrix& s) {
  std::string out;
  for (int i = 1; i <= s.order(); ++i) {
    for (int j = 1; j <= s.order(); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(s.entry(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace tourlab
