#include "pncalc/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "pncalc/error.hpp"

namespace pncalc {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::integer:
      return "integer '" + t.text + "'";
    case Tok::ident:
      return "identifier '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::integer, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw SyntaxError(start, {"number", "identifier", "operator", "parenthesis"},
                          "character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart) : toks_(tokenize(text)), chart_(chart) {}

  RatFunc parse() {
    RatFunc v = expr();
    if (peek().kind != Tok::end) fail({"operator", "end of input"});
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, std::move(expected), describe(peek()));
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (peek().kind == Tok::plus) {
        next();
        acc += term();
      } else if (peek().kind == Tok::minus) {
        next();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (peek().kind == Tok::star) {
        next();
        acc *= factor();
      } else if (peek().kind == Tok::slash) {
        next();
        const Token& at = peek();
        if (at.kind == Tok::integer && Integer(at.text) == 0 && peek(1).kind != Tok::caret)
          throw DivisionByZeroConstant(at.pos);
        acc /= factor();
      } else if (peek().kind == Tok::integer || peek().kind == Tok::ident ||
                 peek().kind == Tok::lparen) {
        fail({"'*'", "'/'", "'+'", "'-'", "end of input"});  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    bool negate = false;
    if (peek().kind == Tok::minus) {
      next();
      negate = true;
    }
    RatFunc b = base();
    if (peek().kind == Tok::caret) {
      next();
      bool neg_exp = false;
      if (peek().kind == Tok::minus) {
        next();
        neg_exp = true;
      }
      if (peek().kind != Tok::integer) fail({"integer exponent"});
      const Integer e(next().text);
      if (!e.fits_slong_p()) fail({"exponent of reasonable size"});
      const long exponent = e.get_si();
      b = b.pow(neg_exp ? -exponent : exponent);
    }
    return negate ? -b : b;
  }

  RatFunc base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        next();
        Integer num(t.text);
        if (peek().kind == Tok::slash && peek(1).kind == Tok::integer) {
          const Token& d = peek(1);
          const Integer den(d.text);
          if (den == 0) throw DivisionByZeroConstant(d.pos);
          next();
          next();
          Rational r(num, den);
          r.canonicalize();
          return RatFunc(r);
        }
        return RatFunc(Rational(num));
      }
      case Tok::ident: {
        next();
        if (peek().kind == Tok::lparen) {
          throw SyntaxError(peek().pos, {"operator", "end of input"},
                            "'(' (function application is not supported)");
        }
        const std::size_t idx = chart_.find(t.text);
        if (idx == chart_.dim()) throw UnknownIdentifier(t.text);
        return RatFunc::variable(idx);
      }
      case Tok::lparen: {
        next();
        RatFunc v = expr();
        if (peek().kind != Tok::rparen) fail({"')'"});
        next();
        return v;
      }
      default:
        fail({"number", "identifier", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

}  // namespace

RatFunc parse_expr(std::string_view text, const Chart& chart) { return Parser(text, chart).parse(); }

}  // namespace pncalc
