#include "tourlab/patterns.hpp"

#include <cstdlib>

namespace tourlab {

PsiPattern::PsiPattern(std::vector<int> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw ArgumentError("empty pattern");
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (alphas_[i] == 0) throw ArgumentError("pattern entries must be nonzero");
    if (i > 0 && (alphas_[i] > 0) == (alphas_[i - 1] > 0)) {
      throw ArgumentError("pattern signs must alternate");
    }
  }
}

int PsiPattern::order() const noexcept {
  int total = 0;
  for (int a : alphas_) total += std::abs(a);
  return total;
}

std::pair<int, int> PsiPattern::block(int i) const {
  if (i < 1 || i > length()) throw ArgumentError("block index out of range");
  int begin = 0;
  for (int k = 0; k < i - 1; ++k) begin += std::abs(alphas_[k]);
  return {begin, begin + std::abs(alphas_[i - 1])};
}

std::vector<int> PsiPattern::signs() const {
  std::vector<int> out;
  for (int a : alphas_) out.insert(out.end(), std::abs(a), a > 0 ? 1 : -1);
  return out;
}

PsiPattern PsiPattern::negated() const {
  std::vector<int> neg(alphas_);
  for (int& a : neg) a = -a;
  return PsiPattern(std::move(neg));
}

std::string PsiPattern::to_string() const {
  std::string out;
  for (int a : alphas_) {
    if (!out.empty()) out += ' ';
    out += (a > 0 ? "+" : "") + std::to_string(a);
  }
  return out;
}

PsiPattern PsiPattern::from_signs(const std::vector<int>& signs) {
  if (signs.empty()) throw ArgumentError("empty sign sequence");
  std::vector<int> runs;
  for (int s : signs) {
    if (!runs.empty() && (runs.back() > 0) == (s > 0)) {
      runs.back() += s > 0 ? 1 : -1;
    } else {
      runs.push_back(s > 0 ? 1 : -1);
    }
  }
  return PsiPattern(std::move(runs));
}

PsiPattern psi(const Tournament& t, int u, VertexSet x) {
  if (u < 1 || u > t.order()) throw ArgumentError("vertex out of range");
  if (x.empty()) throw ArgumentError("psi needs a nonempty set");
  if (x.contains(u)) throw ArgumentError("vertex " + std::to_string(u) + " lies in the set");
  if (!x.subset_of(t.vertices())) throw ArgumentError("set exceeds the vertex range");
  const auto order = transitive_order(t, x);
  if (!order) throw StructureError("set " + x.to_string() + " is not transitive");
  std::vector<int> signs;
  signs.reserve(order->size());
  for (int v : *order) signs.push_back(t.arc(u, v) ? 1 : -1);
  return PsiPattern::from_signs(signs);
}

Tournament with_psi(const PsiPattern& pattern) {
  const int m = pattern.order();
  Tournament t(m + 1);
  const std::vector<int> signs = pattern.signs();
  for (int i = 1; i <= m; ++i) {
    if (signs[i - 1] > 0) {
      t.set_arc(m + 1, i);
    } else {
      t.set_arc(i, m + 1);
    }
  }
  return t;
}

ThetaSign theta(const Tournament& t, int u, int v) {
  return t.dominates(u, v) ? ThetaSign::Plus : ThetaSign::Minus;
}

bool covertices(const Tournament& t, int u, int v) {
  t.dominates(u, v);  // range and distinctness check
  const VertexSet others = t.vertices().without(u).without(v);
  return ((t.out_set(u) ^ t.out_set(v)) & others).empty();
}

bool revertices(const Tournament& t, int u, int v) {
  t.dominates(u, v);
  const VertexSet others = t.vertices().without(u).without(v);
  return ((t.out_set(u) & t.out_set(v)) & others).empty() &&
         ((t.in_set(u) & t.in_set(v)) & others).empty();
}

}  // namespace tourlab
