#include "tourlab/vertex_set.hpp"

#include <algorithm>
#include <charconv>

#include "tourlab/errors.hpp"

namespace tourlab {

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  return of(std::vector<int>(vertices));
}

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 1 || v > 64) {
      throw ArgumentError("vertex " + std::to_string(v) + " outside 1..64");
    }
    s = s.with(v);
  }
  return s;
}

VertexSet VertexSet::parse(std::string_view text) {
  VertexSet s;
  if (text.empty() || text == "-") return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw FormatError("malformed vertex list '" + std::string(text) + "'");
    }
    if (v < 1 || v > 64) {
      throw FormatError("vertex " + std::to_string(v) + " outside 1..64");
    }
    s = s.with(v);
    pos = comma + 1;
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

bool lex_less(VertexSet a, VertexSet b) noexcept {
  // Walk both member lists in step; the first difference decides, and a
  // proper prefix sorts first.
  std::uint64_t x = a.mask(), y = b.mask();
  while (x != 0 && y != 0) {
    const int vx = std::countr_zero(x), vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace tourlab
