#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dryreach/interval.hpp"

namespace dryreach {

// Arithmetic expression over named variables with +, -, *, /, ^ and the
// functions sin, cos, exp. Used for scripted ODE right-hand sides.
class Expr {
 public:
  // `vars` fixes the variable-name -> slot mapping; unknown identifiers throw
  // SchemaError.
  static Expr parse(const std::string& text, const std::vector<std::string>& vars);

  double eval(const Vec& values) const;
  const std::string& text() const { return text_; }
  bool operator==(const Expr& o) const { return text_ == o.text_; }

  struct Node;  // parse-tree detail, defined with the implementation

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// c0 + sum(coeffs[i] * var_i), over the scenario's state variables plus the
// reserved name `t` (mode-local time). Parsed from strings like
// "syB - syA" or "2*t - 0.5". Non-linear input throws SchemaError.
struct LinExpr {
  std::vector<std::pair<int, double>> coeffs;  // (state dim, coefficient)
  double tcoeff = 0.0;
  double constant = 0.0;

  static LinExpr parse(const std::string& text, const std::vector<std::string>& vars);

  double eval(const Vec& x, double t) const;
  // Exact range over a box cross a local-time interval.
  Interval range(const Box& b, const Interval& tw) const;
};

}  // namespace dryreach
