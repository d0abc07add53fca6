#include "tourlab/lnfamily.hpp"

#include <cstdint>

namespace tourlab {

Tournament make_ln(int n) {
  if (n < 2 || n > kMaxLnOrder) throw CapacityError("L_n is built for 2 <= n <= 20");
  Tournament t(n);
  for (int i = 1; i < n; ++i) {
    if (i % 2 == 1) {
      t.set_arc(n, i);
    } else {
      t.set_arc(i, n);
    }
  }
  return t;
}

SignMatrix q_matrix(int m) {
  if (m < 3) throw ArgumentError("Q_m is defined for m >= 3");
  if (m > kMaxDeterminantOrder) throw CapacityError("Q_m supports m <= 20");
  SignMatrix q(m);
  for (int r = 1; r <= m; ++r) {
    q.set(r - 1, 0, r % 2 == 1 ? 1 : -1);
    for (int c = 2; c <= m; ++c) {
      q.set(r - 1, c - 1, r == c - 1 ? 0 : (r < c - 1 ? 1 : -1));
    }
  }
  return q;
}

ExactInt q_value_recurrence(int m) {
  if (m < 3) throw ArgumentError("Q_m is defined for m >= 3");
  ExactInt q = 3;
  for (int k = 4; k <= m; ++k) q = k % 2 == 0 ? -q : 2 - q;
  return q;
}

ExactInt q_value(int m) {
  const ExactInt direct = determinant(q_matrix(m));
  const ExactInt recurrence = q_value_recurrence(m);
  if (direct != recurrence) {
    throw InvariantError("Q_" + std::to_string(m) + ": determinant " + to_string(direct) +
                         " but recurrence " + to_string(recurrence));
  }
  return direct;
}

ExactInt ln_det(int n) {
  if (n % 2 != 0) throw ArgumentError("ln_det needs even n");
  if (n < 2 || n > kMaxLnOrder) throw CapacityError("ln_det supports 2 <= n <= 20");
  const ExactInt closed = static_cast<ExactInt>(n - 1) * (n - 1);
  ExactInt recurrence = 1;
  for (int k = 4; k <= n; k += 2) recurrence += 4 * (k - 2);
  const ExactInt direct = determinant(make_ln(n));
  if (direct != closed || recurrence != closed) {
    throw InvariantError("det(L_" + std::to_string(n) + ") mismatch: direct " + to_string(direct) +
                         ", recurrence " + to_string(recurrence));
  }
  return closed;
}

bool is_ln(const Tournament& t) {
  if (t.order() > kMaxCanonicalOrder) throw CapacityError("is_ln supports n <= 10");
  if (t.order() < 2) return false;
  return canonical_form(t) == canonical_form(make_ln(t.order()));
}

ExtensionReport max_onevertex_ext_det(int n) {
  if (n % 2 != 0) throw ArgumentError("the extension sweep needs even n");
  if (n < 2 || n > kMaxCanonicalOrder) throw CapacityError("the extension sweep supports n <= 10");
  ExtensionReport report;
  report.order = n;
  const int m = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> signs(m);
    for (int i = 0; i < m; ++i) signs[i] = (mask >> i) & 1u ? 1 : -1;
    const PsiPattern pattern = PsiPattern::from_signs(signs);
    const ExactInt d = determinant(with_psi(pattern));
    if (d > report.max_det) {
      report.max_det = d;
      report.achievers.clear();
    }
    if (d == report.max_det) report.achievers.push_back(pattern);
  }
  bool alternating = report.achievers.size() == 2;
  for (const PsiPattern& p : report.achievers) alternating = alternating && p.length() == m;
  report.holds = report.max_det == static_cast<ExactInt>(m) * m && alternating;
  return report;
}

}  // namespace tourlab
