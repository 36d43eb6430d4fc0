#include "klab/parse.hpp"

#include <cctype>

#include "klab/error.hpp"

namespace klab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = expression();
    skip_space();
    if (pos_ < text_.size()) {
      if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' || text_[pos_] == '_') {
        fail("expected an operator (products need an explicit '*')");
      }
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 65535) fail("exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& field = ring_.field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = field.add(field.mul(v, 10), static_cast<Coeff>(text_[pos_] - '0'));
        ++pos_;
      }
      return Polynomial::monomial(field, ring_.unit_monomial(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx && name == "p" && ring_.dvr_proxy_variable()) idx = ring_.index_of(*ring_.dvr_proxy_variable());
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.var(*idx);
    }
    fail(std::string("malformed token '") + c + "'");
  }

  std::string_view text_;
  const RingSpec& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingSpec& ring) { return Parser(text, ring, 0).parse_all(); }

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingSpec& ring) {
  std::vector<Polynomial> out;
  if (blank(text)) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view piece = text.substr(start, i - start);
      if (blank(piece)) throw ParseError("empty list entry", start);
      out.push_back(Parser(piece, ring, start).parse_all());
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      if (cur.empty() && std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("variable names must start with a letter", i);
      }
      cur.push_back(c);
    } else {
      throw ParseError(std::string("invalid character '") + c + "' in variable list", i);
    }
  }
  flush();
  return out;
}

}  // namespace klab
