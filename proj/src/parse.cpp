#include "hamflat/parse.hpp"

#include <cctype>

namespace hamflat {

ParseError::ParseError(int line_, int col_, const std::string& message)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + message),
      line(line_), col(col_) {}

namespace {

enum class Tok { integer, variable, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;  // digits of an integer or of a variable index
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) step();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::end, "", line, col};
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '+': step(); current_ = {Tok::plus, "+", line, col}; return;
      case '-': step(); current_ = {Tok::minus, "-", line, col}; return;
      case '*': step(); current_ = {Tok::star, "*", line, col}; return;
      case '/': step(); current_ = {Tok::slash, "/", line, col}; return;
      case '^': step(); current_ = {Tok::caret, "^", line, col}; return;
      case '(': step(); current_ = {Tok::lparen, "(", line, col}; return;
      case ')': step(); current_ = {Tok::rparen, ")", line, col}; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_ = {Tok::integer, take_digits(), line, col};
      return;
    }
    if (c == 'u') {
      step();
      // "u^3" is normalized to u3 here.
      if (pos_ < src_.size() && src_[pos_] == '^') step();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError(line, col, "expected variable index after 'u'");
      current_ = {Tok::variable, take_digits(), line, col};
      return;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

  std::string take_digits() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      digits += src_[pos_];
      step();
    }
    return digits;
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_{Tok::end, "", 1, 1};
};

class Parser {
 public:
  Parser(const std::string& src, int dim) : lex_(src), dim_(dim) {}

  Poly parse() {
    Poly p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::end) throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly p = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::plus) {
        lex_.take();
        p += term();
      } else if (k == Tok::minus) {
        lex_.take();
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (lex_.peek().kind == Tok::star) {
      lex_.take();
      p *= factor();
    }
    return p;
  }

  Poly factor() {
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      return -factor();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (lex_.peek().kind != Tok::caret) return base;
    Token caret = lex_.take();
    const Token& t = lex_.peek();
    if (t.kind == Tok::minus) throw ParseError(t.line, t.col, "negative exponent");
    if (t.kind != Tok::integer)
      throw ParseError(caret.line, caret.col, "exponent must be an integer literal");
    Token e = lex_.take();
    if (e.text.size() > 6) throw ParseError(e.line, e.col, "exponent too large");
    unsigned long exp = std::stoul(e.text);
    return base.pow(static_cast<unsigned>(exp));
  }

  Poly atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::integer: {
        Rational value = Rational::from_string(t.text);
        if (lex_.peek().kind == Tok::slash) {
          lex_.take();
          const Token& d = lex_.peek();
          if (d.kind != Tok::integer)
            throw ParseError(d.line, d.col, "expected integer denominator");
          Token den = lex_.take();
          Rational q = Rational::from_string(den.text);
          if (q.is_zero()) throw ParseError(den.line, den.col, "zero denominator");
          value /= q;
        }
        return Poly::constant(dim_, value);
      }
      case Tok::variable: {
        if (t.text.size() > 6) throw ParseError(t.line, t.col, "variable index too large");
        long index = std::stol(t.text);
        if (index < 1 || index > dim_)
          throw ParseError(t.line, t.col,
                           "variable u" + t.text + " out of range (dimension " +
                               std::to_string(dim_) + ")");
        return Poly::variable(dim_, static_cast<int>(index));
      }
      case Tok::lparen: {
        Poly p = expr();
        const Token& close = lex_.peek();
        if (close.kind != Tok::rparen) throw ParseError(close.line, close.col, "expected ')'");
        lex_.take();
        return p;
      }
      case Tok::end: throw ParseError(t.line, t.col, "unexpected end of input");
      default: throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
    }
  }

  Lexer lex_;
  int dim_;
};

}  // namespace

Poly parse_poly(const std::string& src, int dim) {
  if (dim < 0) throw std::invalid_argument("parse_poly: negative dimension");
  return Parser(src, dim).parse();
}

std::string print_canonical(const Poly& p) { return p.str(); }

}  // namespace hamflat
