#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracvar::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function of t built from numeric literals, t, pow(t,c), sin(t), cos(t),
/// exp(t), parentheses, sums, differences and products.
class Expression {
 public:
  static Expression parse(std::string_view text);

  double operator()(double t) const { return fn_(t); }
  const std::string& text() const noexcept { return text_; }

 private:
  Expression(std::string text, std::function<double(double)> fn)
      : text_(std::move(text)), fn_(std::move(fn)) {}

  std::string text_;
  std::function<double(double)> fn_;
};

}  // namespace fracvar::cli
