#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "comgraph/errors.hpp"

namespace comgraph::detail {

struct Token {
  std::string text;
  std::size_t column = 1;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Splits text into non-empty, non-comment lines of whitespace-separated
// tokens. A line whose first visible character is '#' is a comment.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

// Sequential reader over tokenized lines with positioned errors.
class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take() {
    if (done()) fail_at_end("unexpected end of input");
    return lines_[next_++];
  }

  [[noreturn]] void fail_at_end(const std::string& msg) const {
    std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(msg, line, 1);
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

[[noreturn]] inline void fail(const Line& line, const Token& token, const std::string& msg) {
  throw ParseError(msg, line.number, token.column);
}

}  // namespace comgraph::detail
