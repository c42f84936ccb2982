#pragma once

// Matrix text format:
//
//   # optional comment line(s)
//   n
//   n lines of exactly n characters from {0,1}
//
// A single trailing newline is optional. Nothing else is accepted.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkex/bit_matrix.hpp"

namespace walkex {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the matrix text format. When `loops_allowed` is unset the mode is
/// inferred: a matrix with any diagonal 1 allows loops.
inline BitMatrix parse_matrix(std::string_view text, std::optional<bool> loops_allowed = std::nullopt)
{
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  std::size_t cur = 0;
  while (cur < lines.size() && !lines[cur].empty() && lines[cur].front() == '#') ++cur;
  if (cur >= lines.size()) throw ParseError(static_cast<int>(cur) + 1, "missing order line");

  const auto header = lines[cur];
  if (header.empty() || header.size() > 2 ||
      header.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError(static_cast<int>(cur) + 1, "expected decimal order, got '" + std::string(header) + "'");
  const int n = std::stoi(std::string(header));
  if (n < 1 || n > kMaxOrder) throw ParseError(static_cast<int>(cur) + 1, "order must be in 1..64");
  ++cur;

  if (lines.size() - cur != static_cast<std::size_t>(n))
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(n) + " rows, got " + std::to_string(lines.size() - cur));

  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  bool diagonal = false;
  for (int r = 0; r < n; ++r) {
    const auto line = lines[cur + static_cast<std::size_t>(r)];
    const int lineno = static_cast<int>(cur) + r + 1;
    if (static_cast<int>(line.size()) != n)
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " characters, expected " +
                                   std::to_string(n));
    for (int c = 0; c < n; ++c) {
      if (line[c] == '1') {
        rows[r] |= bit(c);
        diagonal = diagonal || r == c;
      } else if (line[c] != '0') {
        throw ParseError(lineno, "entries must be 0 or 1");
      }
    }
  }

  const bool loops = loops_allowed.value_or(diagonal);
  if (diagonal && !loops) throw ParseError(static_cast<int>(cur) + 1, "diagonal 1 in a loop-free matrix");
  BitMatrix m(n, loops);
  for (int r = 0; r < n; ++r) m.set_row(r, rows[r]);
  return m;
}

inline std::string to_text(const BitMatrix& a)
{
  std::string out = std::to_string(a.order()) + "\n";
  for (int r = 0; r < a.order(); ++r) {
    for (int c = 0; c < a.order(); ++c) out.push_back(a.test(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline BitMatrix read_matrix_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

inline void write_matrix_file(const std::string& path, const BitMatrix& a)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_text(a);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace walkex
