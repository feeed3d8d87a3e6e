#include "riordan/series_expr.hpp"

#include <cctype>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t order) : text_(text), order_(order) {}

  PowerSeries run() {
    PowerSeries s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  PowerSeries expr() {
    PowerSeries s = term();
    for (;;) {
      if (eat('+')) s = s + term();
      else if (eat('-')) s = s - term();
      else return s;
    }
  }

  PowerSeries term() {
    PowerSeries s = factor();
    for (;;) {
      if (eat('*')) s = s * factor();
      else if (eat('/')) {
        s = s / factor();
      } else return s;
    }
  }

  PowerSeries factor() {
    PowerSeries base = unary();
    if (!eat('^')) return base;
    long e = integer();
    bool negative = e < 0;
    if (negative) {
      if (!base.is_unit()) fail("negative power of a non-unit series");
      base = PowerSeries::one(base.order()) / base;
      e = -e;
    }
    PowerSeries r = PowerSeries::one(base.order());
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  PowerSeries unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  PowerSeries primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return PowerSeries::constant(Rational(integer()), order_);
    if (c == '(') {
      ++pos_;
      PowerSeries s = expr();
      if (!eat(')')) fail("expected ')'");
      return s;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "x") return PowerSeries::identity(order_);
      if (!eat('(')) fail("expected '(' after '" + name + "'");
      std::vector<PowerSeries> args;
      args.push_back(expr());
      while (eat(',')) args.push_back(expr());
      if (!eat(')')) fail("expected ')'");
      return call(name, args);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  PowerSeries call(const std::string& name, const std::vector<PowerSeries>& args) {
    auto one_arg = [&]() -> const PowerSeries& {
      if (args.size() != 1) fail(name + " takes one argument");
      return args[0];
    };
    if (name == "revert") return one_arg().revert();
    if (name == "sqrt") return one_arg().sqrt();
    if (name == "exp") return one_arg().exp();
    if (name == "log") return one_arg().log();
    if (name == "deriv" || name == "derivative") return one_arg().derivative();
    if (name == "integral") return one_arg().integral();
    if (name == "aerate") return one_arg().aerate();
    if (name == "compose") {
      if (args.size() != 2) fail("compose takes two arguments");
      return args[0].compose(args[1]);
    }
    fail("unknown function '" + name + "'");
  }

  const std::string& text_;
  std::size_t order_;
  std::size_t pos_ = 0;
};

}  // namespace

PowerSeries parse_series(const std::string& text, std::size_t order) {
  return Parser(text, order).run();
}

}  // namespace riordan
