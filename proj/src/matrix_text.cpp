#include <vector>

#include "trop/error.hpp"
#include "trop/normal_matrix.hpp"

namespace trop {

NormalMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  if (lines.empty()) throw ParseError("empty matrix text");

  const int n = static_cast<int>(lines.size());
  if (n > kMaxOrder) {
    throw ParseError("matrix order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  std::vector<LineMask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n) {
      throw ParseError("line " + std::to_string(i + 1) + " has " +
                       std::to_string(lines[i].size()) + " glyphs, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const char c = lines[i][j];
      if (c == '0') {
        rows[i] |= static_cast<LineMask>(1u << j);
      } else if (c != '-') {
        throw ParseError("unexpected character '" + std::string(1, c) + "' at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
    if (!((rows[i] >> i) & 1u)) {
      throw ParseError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                       ") must be '0'");
    }
  }
  return NormalMatrix::from_rows(rows);
}

std::string format_matrix(const NormalMatrix& a) {
  std::string out;
  const int n = a.order();
  out.reserve(static_cast<std::size_t>(n * (n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(a.is_zero_at(i, j) ? '0' : '-');
    out.push_back('\n');
  }
  return out;
}

}  // namespace trop
