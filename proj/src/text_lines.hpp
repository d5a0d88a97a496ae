#pragma once

// Line/token scanning shared by the text parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "quadsurf/embedding_io.hpp"

namespace quadsurf::detail {

struct Token {
  std::string_view text;
  std::size_t column = 1;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      l.tokens.push_back(Token{line.substr(i, j - i), i + 1});
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] inline void parse_fail(const Line& line, const Token& tok, const std::string& msg) {
  throw ParseError(line.number, tok.column, msg + " ('" + std::string(tok.text) + "')");
}

[[noreturn]] inline void parse_fail(const Line& line, const std::string& msg) {
  throw ParseError(line.number, 1, msg);
}

inline long parse_long(const Line& line, const Token& tok, std::string_view digits) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) parse_fail(line, tok, "expected an integer");
  return value;
}

inline unsigned long parse_index(const Line& line, const Token& tok, std::string_view digits) {
  long v = parse_long(line, tok, digits);
  if (v < 0) parse_fail(line, tok, "negative id");
  return static_cast<unsigned long>(v);
}

// "key=value" -> value
inline std::string_view expect_key(const Line& line, const Token& tok, std::string_view key) {
  if (tok.text.size() <= key.size() + 1 || tok.text.substr(0, key.size()) != key || tok.text[key.size()] != '=') {
    parse_fail(line, tok, "expected " + std::string(key) + "=<value>");
  }
  return tok.text.substr(key.size() + 1);
}

}  // namespace quadsurf::detail
