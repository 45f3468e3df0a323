#pragma once

// Text formats.
//
// Arrangement file: the first meaningful line holds n; every later
// meaningful line holds n rationals (`p` or `p/q`), one normal per line.
// Subspace file: the first meaningful line holds `n k`, followed by exactly
// k rows of n rationals spanning the subspace.
// `#` starts a comment running to the end of the line; blank lines are
// ignored.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "grassarr/arrangement.hpp"
#include "grassarr/error.hpp"
#include "grassarr/exactlin.hpp"
#include "grassarr/rational.hpp"

namespace grassarr {

struct TextLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> meaningful_lines(std::istream& in) {
  std::vector<TextLine> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    TextLine line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_count(const TextLine& line, std::size_t pos, const char* what) {
  const std::string& tok = line.tokens.at(pos);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw ParseError(line.number, std::string("expected a nonnegative integer ") + what + ", got '" + tok + "'");
  return value;
}

inline Vector parse_row(const TextLine& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError(line.number, "expected " + std::to_string(n) + " entries, got " +
                                      std::to_string(line.tokens.size()));
  Vector row;
  row.reserve(n);
  for (const auto& tok : line.tokens) {
    auto q = parse_rational(tok);
    if (!q) throw ParseError(line.number, "malformed rational '" + tok + "'");
    row.push_back(std::move(*q));
  }
  return row;
}

inline Arrangement parse_arrangement(std::istream& in) {
  const auto lines = meaningful_lines(in);
  if (lines.empty()) throw ParseError(1, "empty arrangement file (expected dimension n)");
  if (lines[0].tokens.size() != 1)
    throw ParseError(lines[0].number, "header must be the single dimension n");
  const std::size_t n = parse_count(lines[0], 0, "dimension n");
  std::vector<Vector> normals;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    normals.push_back(parse_row(lines[l], n));
    try {
      build_arrangement(n, normals);
    } catch (const InputError& e) {
      throw ParseError(lines[l].number, e.what());
    }
  }
  return build_arrangement(n, normals);
}

inline Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

inline Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open arrangement file '" + path + "'");
  return parse_arrangement(in);
}

inline Subspace parse_subspace(std::istream& in) {
  const auto lines = meaningful_lines(in);
  if (lines.empty()) throw ParseError(1, "empty subspace file (expected `n k`)");
  if (lines[0].tokens.size() != 2) throw ParseError(lines[0].number, "header must be `n k`");
  const std::size_t n = parse_count(lines[0], 0, "dimension n");
  const std::size_t k = parse_count(lines[0], 1, "dimension k");
  if (k > n) throw ParseError(lines[0].number, "k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (lines.size() - 1 != k)
    throw ParseError(lines.back().number, "expected " + std::to_string(k) + " rows, got " +
                                              std::to_string(lines.size() - 1));
  std::vector<Vector> rows;
  for (std::size_t l = 1; l < lines.size(); ++l) rows.push_back(parse_row(lines[l], n));
  Subspace s = span_of(rows, n);
  if (s.dim() != k)
    throw ParseError(lines.back().number, "rows span a subspace of dimension " + std::to_string(s.dim()) +
                                              ", not " + std::to_string(k));
  return s;
}

inline Subspace parse_subspace(const std::string& text) {
  std::istringstream in(text);
  return parse_subspace(in);
}

inline Subspace read_subspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open subspace file '" + path + "'");
  return parse_subspace(in);
}

inline std::string format_row(std::span<const Rational> row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += to_string(row[i]);
  }
  return out;
}

inline std::string format_arrangement(const Arrangement& a) {
  std::string out = std::to_string(a.ambient_dim) + "\n";
  for (const auto& v : a.normals) out += format_row(v) + "\n";
  return out;
}

inline std::string format_subspace(const Subspace& s) {
  std::string out = std::to_string(s.ambient_dim()) + " " + std::to_string(s.dim()) + "\n";
  for (std::size_t r = 0; r < s.dim(); ++r) out += format_row(s.basis().row(r)) + "\n";
  return out;
}

}  // namespace grassarr
