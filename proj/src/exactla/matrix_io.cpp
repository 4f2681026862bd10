#include "explab/exactla/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace explab {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

Integer to_integer_token(const Token& t) {
  auto v = Integer::parse(t.text);
  if (!v) throw ParseError("expected an integer, found '" + t.text + "'", t.line, t.column);
  return *v;
}

std::size_t to_count(const Token& t) {
  Integer v = to_integer_token(t);
  if (v.sign() < 0 || !v.is_small()) {
    throw ParseError("expected a nonnegative count, found '" + t.text + "'", t.line, t.column);
  }
  return static_cast<std::size_t>(v.small_value());
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing 'rows cols' header", 1, 1);
  const auto& header = lines.front();
  if (header.size() != 2) {
    throw ParseError("header must be 'rows cols'", header.front().line, header.front().column);
  }
  const std::size_t rows = to_count(header[0]);
  const std::size_t cols = to_count(header[1]);
  if (lines.size() - 1 != rows) {
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, found " +
                         std::to_string(lines.size() - 1),
                     header.front().line, 1);
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& line = lines[i + 1];
    if (line.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(line.size()),
                       line.front().line, line.front().column);
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_integer_token(line[j]);
  }
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path));
}

std::string format_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path.string());
  out << format_matrix(m);
}

IntVector parse_int_vector(std::string_view text) {
  IntVector out;
  for (const auto& line : tokenize_lines(text))
    for (const auto& t : line) out.push_back(to_integer_token(t));
  return out;
}

IntVector read_vector_file(const std::filesystem::path& path) {
  return parse_int_vector(read_text_file(path));
}

}  // namespace explab
