#include <cctype>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"

namespace absurd {

ExprPtr Expr::number(Rational v, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::number;
  e->value = std::move(v);
  e->position = pos;
  return e;
}

ExprPtr Expr::negate(ExprPtr operand, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::negate;
  e->lhs = std::move(operand);
  e->position = pos;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->position = pos;
  return e;
}

ExprPtr Expr::power(ExprPtr base, Rational exponent, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::power;
  e->lhs = std::move(base);
  e->exponent = std::move(exponent);
  e->position = pos;
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw ParseError(Errc::SyntaxError, at.value_or(pos_), msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  ExprPtr sum() {
    ExprPtr left = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      ExprPtr right = product();
      left = Expr::binary(c == '+' ? Expr::Kind::add : Expr::Kind::subtract, left, right, at);
    }
    return left;
  }

  ExprPtr product() {
    ExprPtr left = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t at = pos_++;
      ExprPtr right = unary();
      left = Expr::binary(c == '*' ? Expr::Kind::multiply : Expr::Kind::divide, left, right, at);
    }
    return left;
  }

  ExprPtr unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_++;
      ExprPtr operand = unary();
      return c == '-' ? Expr::negate(operand, at) : operand;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    const std::size_t exponent_at = (skip_space(), pos_);
    ++exponent_depth_;
    ExprPtr exponent = unary();
    --exponent_depth_;
    return Expr::power(base, fold_exponent(*exponent, exponent_at), at);
  }

  Rational fold_exponent(const Expr& e, std::size_t at) const {
    const SumOfAbsurds s = simplify(e);
    if (s.is_zero()) return 0;
    if (s.is_single() && s.terms[0].is_rational()) return s.terms[0].coefficient();
    throw ParseError(Errc::NonRationalExponent, at, "exponent must be rational");
  }

  ExprPtr primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '\0') fail("expected a number or '(' but input ended");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::number(Rational(Integer(std::string(text_.substr(at, pos_ - at)))), at);
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      if (name == "sqrt") {
        expect('(');
        ExprPtr inner = sum();
        expect(')');
        return Expr::power(inner, Rational(1, 2), at);
      }
      if (exponent_depth_ > 0) {
        throw ParseError(Errc::NonRationalExponent, at, "exponent must be rational, found symbol '" + name + "'");
      }
      fail("unknown identifier '" + name + "'", at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int exponent_depth_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_debug_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: return to_string(e.value);
    case Expr::Kind::negate: return "(-" + to_debug_string(*e.lhs) + ")";
    case Expr::Kind::power: return "(" + to_debug_string(*e.lhs) + "^" + to_string(e.exponent) + ")";
    case Expr::Kind::add: return "(" + to_debug_string(*e.lhs) + " + " + to_debug_string(*e.rhs) + ")";
    case Expr::Kind::subtract: return "(" + to_debug_string(*e.lhs) + " - " + to_debug_string(*e.rhs) + ")";
    case Expr::Kind::multiply: return "(" + to_debug_string(*e.lhs) + " * " + to_debug_string(*e.rhs) + ")";
    case Expr::Kind::divide: return "(" + to_debug_string(*e.lhs) + " / " + to_debug_string(*e.rhs) + ")";
  }
  return "?";
}

}  // namespace absurd
