#include "explab/complexes/presentation.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace explab {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }
  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string name() {
    skip_space();
    if (pos_ >= text_.size() || !name_start(text_[pos_])) fail("expected a generator name");
    std::string out;
    while (pos_ < text_.size() && name_char(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  // Immediately follows a name: "^" then an optionally signed integer.
  std::optional<long> exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return std::nullopt;
    advance();
    const std::size_t line = line_, col = col_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("malformed exponent", line, col);
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw ParseError("exponent too large", line, col);
      advance();
    }
    if (pos_ < text_.size() && name_char(text_[pos_])) throw ParseError("malformed exponent", line, col);
    return negative ? -value : value;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, line_, col_); }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  GroupPresentation run() {
    keyword("gens");
    while (Lexer::name_start(lex_.peek())) {
      const std::size_t line = lex_.line(), col = lex_.column();
      std::string g = lex_.name();
      if (index_.count(g)) throw ParseError("duplicate generator '" + g + "'", line, col);
      index_[g] = out_.generators.size();
      out_.generators.push_back(std::move(g));
    }
    while (!lex_.at_end()) {
      lex_.expect(';', "';'");
      if (lex_.at_end()) break;  // trailing separator
      keyword("rel");
      if (lex_.at_end() || lex_.peek() == ';') continue;
      Word w = word(false);
      out_.relators.push_back(std::move(w));
    }
    return std::move(out_);
  }

 private:
  void keyword(const std::string& kw) {
    lex_.skip_space();
    const std::size_t line = lex_.line(), col = lex_.column();
    std::string got = Lexer::name_start(lex_.peek()) ? lex_.name() : std::string();
    if (got != kw) throw ParseError("expected '" + kw + ":'", line, col);
    lex_.expect(':', "':'");
  }

  // Sequence of factors until ';', ',', ']' or end.
  Word word(bool nested) {
    Word w;
    for (;;) {
      const char c = lex_.peek();
      if (c == '\0' || c == ';') {
        if (nested) lex_.fail("unbalanced '['");
        return w;
      }
      if (c == ',' || c == ']') {
        if (!nested) lex_.fail(std::string("unexpected '") + c + "'");
        return w;
      }
      if (c == '[') {
        lex_.advance();
        Word u = word(true);
        lex_.expect(',', "',' inside commutator");
        Word v = word(true);
        lex_.expect(']', "']'");
        append(w, commutator(u, v), lex_.exponent());
      } else if (c == '1') {
        lex_.advance();
      } else if (Lexer::name_start(c)) {
        const std::size_t line = lex_.line(), col = lex_.column();
        const std::string name = lex_.name();
        auto it = index_.find(name);
        if (it == index_.end()) throw ParseError("unknown generator '" + name + "'", line, col);
        append(w, Word{{it->second, 1}}, lex_.exponent());
      } else {
        lex_.fail(std::string("unexpected character '") + c + "'");
      }
    }
  }

  static void append(Word& w, const Word& base, std::optional<long> exponent) {
    const long e = exponent.value_or(1);
    const Word piece = e < 0 ? inverse(base) : base;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) w.insert(w.end(), piece.begin(), piece.end());
  }

  Lexer lex_;
  GroupPresentation out_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).run(); }

std::string format_presentation(const GroupPresentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  for (const auto& r : p.relators) {
    out += "; rel:";
    if (r.empty()) out += " 1";
    for (const auto& l : r) {
      out += " " + p.generators.at(l.generator);
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Word commutator(const Word& u, const Word& w) {
  Word out = u;
  out.insert(out.end(), w.begin(), w.end());
  const Word ui = inverse(u), wi = inverse(w);
  out.insert(out.end(), ui.begin(), ui.end());
  out.insert(out.end(), wi.begin(), wi.end());
  return out;
}

IntMatrix presentation_d1(const GroupPresentation& p) {
  IntMatrix d(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const auto& l : p.relators[r]) {
      if (l.generator >= p.generators.size()) {
        throw DimensionError("relator " + std::to_string(r + 1) + " uses generator index " +
                             std::to_string(l.generator) + " out of range");
      }
      d(r, l.generator) += Integer(l.exponent);
    }
  }
  return d;
}

GroupPresentation braid_presentation(std::size_t n) {
  if (n < 2) throw DimensionError("braid group B_n needs n >= 2");
  GroupPresentation p;
  for (std::size_t i = 1; i < n; ++i) p.generators.push_back("s" + std::to_string(i));
  auto s = [](std::size_t i) { return Word{{i - 1, 1}}; };
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) p.relators.push_back(commutator(s(i), s(j)));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    p.relators.push_back(Word{{i - 1, 1}, {i, 1}, {i - 1, 1}, {i, -1}, {i - 1, -1}, {i, -1}});
  }
  return p;
}

GroupPresentation steinberg_presentation(std::size_t n) {
  if (n < 2) throw DimensionError("Steinberg group St_n needs n >= 2");
  GroupPresentation p;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      index[{i, j}] = pairs.size();
      pairs.push_back({i, j});
      p.generators.push_back(n <= 9 ? "x" + std::to_string(i) + std::to_string(j)
                                    : "x_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  auto x = [&](std::size_t i, std::size_t j) { return Word{{index.at({i, j}), 1}}; };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (i != l && j != k) p.relators.push_back(commutator(x(i, j), x(k, l)));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        Word r = commutator(x(i, j), x(j, k));
        r.push_back({index.at({i, k}), -1});
        p.relators.push_back(std::move(r));
      }
    }
  }
  return p;
}

}  // namespace explab
