#include "deltacompat/expression.hpp"

#include <cctype>
#include <optional>

#include "deltacompat/error.hpp"

namespace deltacompat {

namespace {

constexpr long kMaxExponent = 100000;

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view s, std::size_t line, std::size_t column) : s_(s), line_(line), col_(column) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    const std::size_t line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        digits += s_[pos_];
        advance();
      }
      return {Tok::Int, digits, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        id += s_[pos_];
        advance();
      }
      return {Tok::Ident, id, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
};

class Parser {
 public:
  Parser(std::string_view s, const ContextPtr& ctx, std::size_t line, std::size_t column)
      : lex_(s, line, column), ctx_(ctx) {
    tok_ = lex_.next();
  }

  RatFunc parse() {
    if (tok_.kind == Tok::End) fail("empty expression");
    RatFunc r = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, tok_.line, tok_.column); }

  void bump() { tok_ = lex_.next(); }

  RatFunc expr() {
    RatFunc acc = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      bump();
      RatFunc rhs = term();
      if (minus) acc -= rhs;
      else acc += rhs;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const bool divide = tok_.kind == Tok::Slash;
      const Token op = tok_;
      bump();
      RatFunc rhs = unary();
      if (divide) {
        if (rhs.is_zero()) throw ParseError("division by zero", op.line, op.column);
        acc /= rhs;
      } else {
        acc *= rhs;
      }
    }
    return acc;
  }

  RatFunc unary() {
    if (tok_.kind == Tok::Minus) {
      bump();
      return -unary();
    }
    if (tok_.kind == Tok::Plus) {
      bump();
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (tok_.kind != Tok::Caret) return base;
    const Token caret = tok_;
    bump();
    long e = exponent();
    if (e < 0 && base.is_zero()) throw ParseError("division by zero", caret.line, caret.column);
    return base.pow(e);
  }

  // Integer exponent: optional sign, literal or parenthesized, right-associative ^.
  long exponent() {
    const Token start = tok_;
    long sign = 1;
    while (tok_.kind == Tok::Minus || tok_.kind == Tok::Plus) {
      if (tok_.kind == Tok::Minus) sign = -sign;
      bump();
    }
    long value;
    if (tok_.kind == Tok::Int) {
      value = literal();
    } else if (tok_.kind == Tok::LParen) {
      bump();
      value = exponent();
      if (tok_.kind != Tok::RParen) fail("expected ')'");
      bump();
    } else {
      fail("exponent must be an integer");
    }
    if (tok_.kind == Tok::Caret) {
      bump();
      const long e = exponent();
      if (e < 0) throw ParseError("negative exponent inside an integer power", start.line, start.column);
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(value).get_mpz_t(), static_cast<unsigned long>(e));
      if (abs(p) > kMaxExponent) throw ParseError("exponent too large", start.line, start.column);
      value = p.get_si();
    }
    return sign * value;
  }

  long literal() {
    mpz_class v(tok_.text);
    if (v > kMaxExponent) fail("exponent too large");
    bump();
    return v.get_si();
  }

  RatFunc atom() {
    switch (tok_.kind) {
      case Tok::Int: {
        RatFunc r = RatFunc::constant(ctx_, mpq_class(mpz_class(tok_.text)));
        bump();
        return r;
      }
      case Tok::Ident: {
        auto v = ctx_->find(tok_.text);
        if (!v || ctx_->block(*v) == Block::Aux) fail("unknown identifier '" + tok_.text + "'");
        bump();
        return RatFunc::variable(ctx_, *v);
      }
      case Tok::LParen: {
        bump();
        RatFunc r = expr();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        bump();
        return r;
      }
      case Tok::End: fail("unexpected end of expression");
      default: fail("unexpected '" + tok_.text + "'");
    }
  }

  Lexer lex_;
  const ContextPtr& ctx_;
  Token tok_;
};

std::string monomial_string(const VarContext& ctx, const Monomial& m) {
  std::string out;
  const auto& prio = ctx.priority();
  for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
    const auto e = m[*it];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(*it);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool single_factor(const MultiPoly& p) {
  if (p.size() != 1) return false;
  const auto& t = p.leading();
  if (t.coef < 0 || t.coef.get_den() != 1) return false;
  int parts = t.coef == 1 ? 0 : 1;
  for (auto e : t.exps) parts += e != 0;
  return parts <= 1;
}

}  // namespace

RatFunc parse_expression(std::string_view text, const ContextPtr& ctx, std::size_t line,
                         std::size_t column) {
  return Parser(text, ctx, line, column).parse();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = *p.context();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_string(ctx, t.exps);
    mpq_class c = t.coef;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + '*' + mono;
    }
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  // A numerator like "1/2*x" would bind wrongly without parentheses.
  const bool plain_num = f.num().size() == 1 && f.num().leading_coefficient().get_den() == 1;
  std::string n = plain_num ? to_string(f.num()) : "(" + to_string(f.num()) + ")";
  std::string d = single_factor(f.den()) ? to_string(f.den()) : "(" + to_string(f.den()) + ")";
  return n + "/" + d;
}

}  // namespace deltacompat
