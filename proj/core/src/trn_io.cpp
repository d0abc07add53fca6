#include <charconv>
#include <fstream>
#include <sstream>

#include "tourlab/tournament.hpp"

namespace tourlab {

Tournament parse_trn(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // n = 1 has an empty (possibly omitted) second line.
  if (lines.size() == 1) lines.emplace_back();
  if (lines.size() != 2) {
    throw FormatError(".trn input must have exactly two lines, got " +
                      std::to_string(lines.size()));
  }
  int n = 0;
  const std::string_view head = lines[0];
  const auto [end, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (head.empty() || ec != std::errc{} || end != head.data() + head.size()) {
    throw FormatError(".trn first line must be a decimal vertex count");
  }
  return Tournament::from_bits(n, lines[1]);
}

std::string format_trn(const Tournament& t) {
  return std::to_string(t.order()) + "\n" + t.to_bits() + "\n";
}

Tournament read_trn_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trn(buf.str());
}

void write_trn_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << format_trn(t);
}

}  // namespace tourlab
