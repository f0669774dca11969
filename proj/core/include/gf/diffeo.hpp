#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

enum class DiffeoDomain { line, circle };

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Expression tree over the variable x: literals, + - * /, integer ^, unary
/// minus, and sin cos exp log tanh atan. Closed under derivative().
class Expr {
 public:
  enum class Kind { num, var, add, sub, mul, div, pow, neg, fun };
  enum class Fun { sin, cos, exp, log, tanh, atan };

  using Ptr = std::shared_ptr<const Expr>;

  static Ptr num(double v);
  static Ptr var();
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr div(Ptr a, Ptr b);
  static Ptr pow(Ptr a, int k);
  static Ptr neg(Ptr a);
  static Ptr fun(Fun f, Ptr a);

  Kind kind;
  double value = 0;       // num
  int exponent = 0;       // pow
  Fun f = Fun::sin;       // fun
  Ptr lhs, rhs;

  double eval(double x) const;
  /// Structural substitution x -> inner; composes expressions.
  Ptr substitute(const Ptr& inner) const;

  bool equal(const Expr& o) const;
};

/// First derivative with conservative simplification (constant folding and
/// 0/1 identities); stays within the same function set.
Expr::Ptr derivative(const Expr::Ptr& e);

struct DiffeoExpr {
  Expr::Ptr ast;
  DiffeoDomain domain = DiffeoDomain::line;

  double operator()(double x) const { return ast->eval(x); }
};

/// Recursive-descent parser for the documented grammar; precedence
/// ^  >  unary-  >  * /  >  + -, whitespace-insensitive.
DiffeoExpr parse_diffeo(const std::string& src, DiffeoDomain domain);

std::string render(const Expr::Ptr& e);

/// k-th symbolic derivative, k in {1,2,3}.
DiffeoExpr derivative(const DiffeoExpr& e, int k);

/// g after f as expressions (substitution), keeping f's domain.
DiffeoExpr compose(const DiffeoExpr& g, const DiffeoExpr& f);

struct ValidationReport {
  bool monotone = false;
  double min_derivative = 0;
  double equivariance_residual = 0;  // circle only
  int grid = 0;
};

/// Sampled validation: f' > 0 on the grid (period cell [0, 2pi) for circle,
/// [-8, 8] for line) and, on the circle, |f(x+2pi) - f(x) - 2pi| below 1e-9.
/// Sampling is a check, not a certificate; the grid size is reported.
ValidationReport validate(const DiffeoExpr& e, int grid);

}  // namespace gf
