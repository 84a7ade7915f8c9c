#include "expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace fracvar::cli {

namespace {

using Fn = std::function<double(double)>;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Fn parse() {
    Fn e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse function \"" + std::string(src_) + "\" at column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Fn expr() {
    Fn lhs;
    if (accept('-')) {
      Fn t = term();
      lhs = [t](double x) { return -t(x); };
    } else {
      accept('+');
      lhs = term();
    }
    for (;;) {
      if (accept('+')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double x) { return lhs(x) + rhs(x); };
      } else if (accept('-')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double x) { return lhs(x) - rhs(x); };
      } else {
        return lhs;
      }
    }
  }

  Fn term() {
    Fn lhs = factor();
    while (accept('*')) {
      Fn rhs = factor();
      lhs = [lhs, rhs](double x) { return lhs(x) * rhs(x); };
    }
    return lhs;
  }

  double number() {
    skip_space();
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void variable() {
    if (identifier() != "t") fail("expected 't'");
  }

  Fn factor() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Fn e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double v = number();
      return [v](double) { return v; };
    }
    const std::string name = identifier();
    if (name == "t") return [](double x) { return x; };
    if (name == "pow") {
      expect('(');
      variable();
      expect(',');
      const bool negative = accept('-');
      if (!negative) accept('+');
      const double p = negative ? -number() : number();
      expect(')');
      return [p](double x) { return std::pow(x, p); };
    }
    double (*unary)(double) = nullptr;
    if (name == "sin") unary = [](double x) { return std::sin(x); };
    if (name == "cos") unary = [](double x) { return std::cos(x); };
    if (name == "exp") unary = [](double x) { return std::exp(x); };
    if (unary == nullptr) fail(name.empty() ? "expected a term" : "unknown function '" + name + "'");
    expect('(');
    variable();
    expect(')');
    return [unary](double x) { return unary(x); };
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  return Expression(std::string(text), Parser(text).parse());
}

}  // namespace fracvar::cli
