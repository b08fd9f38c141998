#include <cctype>
#include <charconv>

#include "nuengine/fp.hpp"

namespace nuengine::fp {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_group_name_char(char c) { return is_ident_char(c) || c == '-' || c == '.'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Presentation> file() {
    std::vector<Presentation> out;
    skip_space();
    while (!at_end()) {
      out.push_back(group());
      skip_space();
    }
    return out;
  }

 private:
  Presentation group() {
    expect_keyword("group");
    Presentation p;
    p.name = group_name();
    expect('{');
    expect_keyword("gens");
    expect(':');
    skip_space();
    if (peek() != ';') {
      while (true) {
        const std::size_t at = pos_;
        std::string name = identifier();
        if (p.find(name)) fail("duplicate generator '" + name + "'", at);
        p.generators.push_back({name, false});
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(';');
    expect_keyword("rels");
    expect(':');
    skip_space();
    if (peek() != ';') {
      while (true) {
        Word lhs = word(p);
        skip_space();
        if (peek() == '=') {
          ++pos_;
          lhs = lhs * word(p).inverse();
        }
        if (!lhs.empty()) p.relators.push_back(std::move(lhs));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(';');
    expect('}');
    return p;
  }

  // word := term (("*")? term)*
  Word word(const Presentation& p) {
    Word w = term(p);
    while (true) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        w *= term(p);
      } else if (is_ident_start(c) || c == '(' || c == '[') {
        w *= term(p);
      } else {
        return w;
      }
    }
  }

  // term := atom ("^" sword)?
  Word term(const Presentation& p) {
    Word base = atom(p);
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return base.pow(integer());
    return conjugate(base, atom(p));
  }

  // atom := NAME | "(" word ")" | "[" word "," word ("," word)* "]"
  Word atom(const Presentation& p) {
    skip_space();
    const std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word(p);
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word w = word(p);
      expect(',');
      w = commutator(w, word(p));
      skip_space();
      while (peek() == ',') {
        ++pos_;
        w = commutator(w, word(p));
        skip_space();
      }
      expect(']');
      return w;
    }
    if (!is_ident_start(c)) fail(describe("expected generator, '(' or '['"), at);
    std::string name = identifier();
    auto idx = p.find(name);
    if (!idx) fail("undeclared generator '" + name + "'", at);
    return Word::generator(*idx);
  }

  long long integer() {
    skip_space();
    const std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(describe("expected integer"), at);
    long long v = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc()) fail("integer out of range", at);
    return neg ? -v : v;
  }

  std::string identifier() {
    skip_space();
    const std::size_t at = pos_;
    if (!is_ident_start(peek())) fail(describe("expected identifier"), at);
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string group_name() {
    skip_space();
    const std::size_t at = pos_;
    std::size_t start = pos_;
    while (!at_end() && is_group_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(describe("expected group name"), at);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_keyword(std::string_view kw) {
    skip_space();
    const std::size_t at = pos_;
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    if (text_.substr(start, pos_ - start) != kw) {
      pos_ = start;
      fail(describe("expected '" + std::string(kw) + "'"), at);
    }
  }

  void expect(char c) {
    skip_space();
    const std::size_t at = pos_;
    if (peek() != c) fail(describe(std::string("expected '") + c + "'"), at);
    ++pos_;
  }

  std::string describe(const std::string& what) const {
    if (at_end()) return what + ", found end of input";
    return what + ", found '" + std::string(1, text_[pos_]) + "'";
  }

  void skip_space() {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Presentation> parse_presentations(std::string_view text) {
  return Parser(text).file();
}

Presentation parse_presentation(std::string_view text) {
  auto all = parse_presentations(text);
  if (all.size() != 1)
    throw ParseError("expected exactly one group, found " + std::to_string(all.size()), 1, 1);
  return std::move(all.front());
}

}  // namespace nuengine::fp
