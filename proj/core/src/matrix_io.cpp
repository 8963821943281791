#include "comgraph/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "comgraph/errors.hpp"
#include "text_lines.hpp"

namespace comgraph {

namespace {

struct Header {
  std::size_t n = 0;
  std::string semiring;
};

Header read_header(detail::LineCursor& cursor) {
  const detail::Line& line = cursor.take();
  if (line.tokens.size() != 4 || line.tokens[0].text != "matrix" || line.tokens[2].text != "over") {
    detail::fail(line, line.tokens[0], "expected 'matrix <n> over <semiring-name>'");
  }
  Header h;
  const auto& tok = line.tokens[1];
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), h.n);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || h.n == 0) {
    detail::fail(line, tok, "invalid dimension '" + tok.text + "'");
  }
  h.semiring = line.tokens[3].text;
  return h;
}

// Reads n rows of n tokens, handing each to `entry`.
template <typename Entry>
void read_rows(detail::LineCursor& cursor, std::size_t n, Entry&& entry) {
  for (std::size_t r = 0; r < n; ++r) {
    if (cursor.done()) cursor.fail_at_end("expected " + std::to_string(n) + " rows, got " + std::to_string(r));
    const detail::Line& line = cursor.take();
    if (line.tokens.size() != n) {
      detail::fail(line, line.tokens[std::min(line.tokens.size(), n) - 1],
                   "expected " + std::to_string(n) + " entries, got " + std::to_string(line.tokens.size()));
    }
    for (std::size_t c = 0; c < n; ++c) entry(line, line.tokens[c], r, c);
  }
  if (!cursor.done()) {
    const auto& extra = cursor.peek();
    detail::fail(extra, extra.tokens[0], "expected " + std::to_string(n) + " rows, found more");
  }
}

}  // namespace

std::string matrix_semiring_name(std::string_view text) {
  detail::LineCursor cursor(detail::tokenize_lines(text));
  return read_header(cursor).semiring;
}

Matrix parse_matrix_text(std::string_view text, const SemiringPtr& s) {
  detail::LineCursor cursor(detail::tokenize_lines(text));
  const Header h = read_header(cursor);
  if (h.semiring != s->name()) {
    throw ParseError("matrix is over '" + h.semiring + "' but semiring '" + s->name() + "' was expected", 1, 1);
  }
  Matrix m(s, h.n);
  read_rows(cursor, h.n, [&](const detail::Line& line, const detail::Token& tok, std::size_t r, std::size_t c) {
    auto id = s->find(tok.text);
    if (!id) detail::fail(line, tok, "unknown element '" + tok.text + "' for semiring '" + s->name() + "'");
    m.set(r, c, *id);
  });
  return m;
}

TropicalMatrix parse_tropical_matrix_text(std::string_view text) {
  detail::LineCursor cursor(detail::tokenize_lines(text));
  const Header h = read_header(cursor);
  if (h.semiring != "tropical") {
    throw ParseError("matrix is over '" + h.semiring + "' but 'tropical' was expected", 1, 1);
  }
  TropicalMatrix m(h.n);
  read_rows(cursor, h.n, [&](const detail::Line& line, const detail::Token& tok, std::size_t r, std::size_t c) {
    auto value = TropicalScalar::parse(tok.text);
    if (!value) detail::fail(line, tok, "invalid tropical entry '" + tok.text + "'");
    m.set(r, c, std::move(*value));
  });
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Matrix parse_matrix_file(const std::string& path, const SemiringPtr& s) {
  return parse_matrix_text(read_text_file(path), s);
}

TropicalMatrix parse_tropical_matrix_file(const std::string& path) {
  return parse_tropical_matrix_text(read_text_file(path));
}

std::string serialize_matrix(const Matrix& m) {
  std::ostringstream out;
  out << "matrix " << m.dim() << " over " << m.table().name() << "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m.table().name_of(m(i, j));
    out << "\n";
  }
  return out.str();
}

std::string serialize_matrix(const TropicalMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.dim() << " over tropical\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m(i, j).to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace comgraph
