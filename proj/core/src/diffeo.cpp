#include "gf/diffeo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace gf {

Expr::Ptr Expr::num(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::num;
  e->value = v;
  return e;
}

Expr::Ptr Expr::var() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::var;
  return e;
}

namespace {

std::shared_ptr<Expr> node(Expr::Kind k, Expr::Ptr a, Expr::Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool is_const(const Expr::Ptr& e, double v) {
  return e->kind == Expr::Kind::num && e->value == v;
}

}  // namespace

Expr::Ptr Expr::add(Ptr a, Ptr b) {
  if (a->kind == Kind::num && b->kind == Kind::num) return num(a->value + b->value);
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  return node(Kind::add, std::move(a), std::move(b));
}

Expr::Ptr Expr::sub(Ptr a, Ptr b) {
  if (a->kind == Kind::num && b->kind == Kind::num) return num(a->value - b->value);
  if (is_const(b, 0)) return a;
  if (is_const(a, 0)) return neg(std::move(b));
  return node(Kind::sub, std::move(a), std::move(b));
}

Expr::Ptr Expr::mul(Ptr a, Ptr b) {
  if (a->kind == Kind::num && b->kind == Kind::num) return num(a->value * b->value);
  if (is_const(a, 0) || is_const(b, 0)) return num(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  return node(Kind::mul, std::move(a), std::move(b));
}

Expr::Ptr Expr::div(Ptr a, Ptr b) {
  if (is_const(a, 0)) return num(0);
  if (is_const(b, 1)) return a;
  return node(Kind::div, std::move(a), std::move(b));
}

Expr::Ptr Expr::pow(Ptr a, int k) {
  if (k == 0) return num(1);
  if (k == 1) return a;
  auto e = node(Kind::pow, std::move(a), nullptr);
  e->exponent = k;
  return e;
}

Expr::Ptr Expr::neg(Ptr a) {
  if (a->kind == Kind::num) return num(-a->value);
  if (a->kind == Kind::neg) return a->lhs;
  return node(Kind::neg, std::move(a), nullptr);
}

Expr::Ptr Expr::fun(Fun f, Ptr a) {
  auto e = node(Kind::fun, std::move(a), nullptr);
  e->f = f;
  return e;
}

double Expr::eval(double x) const {
  switch (kind) {
    case Kind::num: return value;
    case Kind::var: return x;
    case Kind::add: return lhs->eval(x) + rhs->eval(x);
    case Kind::sub: return lhs->eval(x) - rhs->eval(x);
    case Kind::mul: return lhs->eval(x) * rhs->eval(x);
    case Kind::div: return lhs->eval(x) / rhs->eval(x);
    case Kind::pow: return std::pow(lhs->eval(x), exponent);
    case Kind::neg: return -lhs->eval(x);
    case Kind::fun: {
      double a = lhs->eval(x);
      switch (f) {
        case Fun::sin: return std::sin(a);
        case Fun::cos: return std::cos(a);
        case Fun::exp: return std::exp(a);
        case Fun::log: return std::log(a);
        case Fun::tanh: return std::tanh(a);
        case Fun::atan: return std::atan(a);
      }
    }
  }
  return 0;
}

Expr::Ptr Expr::substitute(const Ptr& inner) const {
  switch (kind) {
    case Kind::num: return num(value);
    case Kind::var: return inner;
    case Kind::add: return add(lhs->substitute(inner), rhs->substitute(inner));
    case Kind::sub: return sub(lhs->substitute(inner), rhs->substitute(inner));
    case Kind::mul: return mul(lhs->substitute(inner), rhs->substitute(inner));
    case Kind::div: return div(lhs->substitute(inner), rhs->substitute(inner));
    case Kind::pow: return pow(lhs->substitute(inner), exponent);
    case Kind::neg: return neg(lhs->substitute(inner));
    case Kind::fun: return fun(f, lhs->substitute(inner));
  }
  return nullptr;
}

bool Expr::equal(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::num: return value == o.value;
    case Kind::var: return true;
    case Kind::pow: return exponent == o.exponent && lhs->equal(*o.lhs);
    case Kind::neg: return lhs->equal(*o.lhs);
    case Kind::fun: return f == o.f && lhs->equal(*o.lhs);
    default: return lhs->equal(*o.lhs) && rhs->equal(*o.rhs);
  }
}

Expr::Ptr derivative(const Expr::Ptr& e) {
  using K = Expr::Kind;
  using F = Expr::Fun;
  switch (e->kind) {
    case K::num: return Expr::num(0);
    case K::var: return Expr::num(1);
    case K::add: return Expr::add(derivative(e->lhs), derivative(e->rhs));
    case K::sub: return Expr::sub(derivative(e->lhs), derivative(e->rhs));
    case K::mul:
      return Expr::add(Expr::mul(derivative(e->lhs), e->rhs),
                       Expr::mul(e->lhs, derivative(e->rhs)));
    case K::div:
      // (a/b)' = a'/b - a b'/b^2
      return Expr::sub(
          Expr::div(derivative(e->lhs), e->rhs),
          Expr::div(Expr::mul(e->lhs, derivative(e->rhs)), Expr::pow(e->rhs, 2)));
    case K::pow:
      return Expr::mul(Expr::mul(Expr::num(e->exponent),
                                 Expr::pow(e->lhs, e->exponent - 1)),
                       derivative(e->lhs));
    case K::neg: return Expr::neg(derivative(e->lhs));
    case K::fun: {
      Expr::Ptr inner = derivative(e->lhs);
      Expr::Ptr outer;
      switch (e->f) {
        case F::sin: outer = Expr::fun(F::cos, e->lhs); break;
        case F::cos: outer = Expr::neg(Expr::fun(F::sin, e->lhs)); break;
        case F::exp: outer = Expr::fun(F::exp, e->lhs); break;
        case F::log: outer = Expr::div(Expr::num(1), e->lhs); break;
        case F::tanh:
          outer = Expr::sub(Expr::num(1), Expr::pow(Expr::fun(F::tanh, e->lhs), 2));
          break;
        case F::atan:
          outer = Expr::div(Expr::num(1),
                            Expr::add(Expr::num(1), Expr::pow(e->lhs, 2)));
          break;
      }
      return Expr::mul(outer, inner);
    }
  }
  return nullptr;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Expr::Ptr parse() {
    Expr::Ptr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, "trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Expr::Ptr expr() {
    Expr::Ptr e = term();
    while (true) {
      if (consume('+')) e = Expr::add(e, term());
      else if (consume('-')) e = Expr::sub(e, term());
      else return e;
    }
  }

  Expr::Ptr term() {
    Expr::Ptr e = unary();
    while (true) {
      if (consume('*')) e = Expr::mul(e, unary());
      else if (consume('/')) e = Expr::div(e, unary());
      else return e;
    }
  }

  Expr::Ptr unary() {
    if (consume('-')) return Expr::neg(unary());
    return power();
  }

  Expr::Ptr power() {
    Expr::Ptr base = atom();
    if (consume('^')) {
      skip_ws();
      bool negexp = consume('-');
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError(pos_, "expected integer exponent");
      int k = std::stoi(src_.substr(start, pos_ - start));
      return Expr::pow(base, negexp ? -k : k);
    }
    return base;
  }

  Expr::Ptr atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Expr::Ptr e = expr();
      if (!consume(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  Expr::Ptr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
            src_[pos_] == 'e' || src_[pos_] == 'E' ||
            ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
             (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
      ++pos_;
    try {
      return Expr::num(std::stod(src_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      throw ParseError(start, "bad numeric literal");
    }
  }

  Expr::Ptr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name == "x") return Expr::var();
    static const std::map<std::string, Expr::Fun> funs = {
        {"sin", Expr::Fun::sin},   {"cos", Expr::Fun::cos},
        {"exp", Expr::Fun::exp},   {"log", Expr::Fun::log},
        {"tanh", Expr::Fun::tanh}, {"atan", Expr::Fun::atan}};
    auto it = funs.find(name);
    if (it == funs.end()) throw ParseError(start, "unknown identifier '" + name + "'");
    if (!consume('(')) throw ParseError(pos_, "expected '(' after function name");
    Expr::Ptr arg = expr();
    if (!consume(')')) throw ParseError(pos_, "expected ')'");
    return Expr::fun(it->second, arg);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffeoExpr parse_diffeo(const std::string& src, DiffeoDomain domain) {
  return DiffeoExpr{Parser(src).parse(), domain};
}

std::string render(const Expr::Ptr& e) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::num: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e->value);
      return buf;
    }
    case K::var: return "x";
    case K::add: return "(" + render(e->lhs) + " + " + render(e->rhs) + ")";
    case K::sub: return "(" + render(e->lhs) + " - " + render(e->rhs) + ")";
    case K::mul: return "(" + render(e->lhs) + "*" + render(e->rhs) + ")";
    case K::div: return "(" + render(e->lhs) + "/" + render(e->rhs) + ")";
    case K::pow: return "(" + render(e->lhs) + ")^" + std::to_string(e->exponent);
    case K::neg: return "(-" + render(e->lhs) + ")";
    case K::fun: {
      static const char* names[] = {"sin", "cos", "exp", "log", "tanh", "atan"};
      return std::string(names[static_cast<int>(e->f)]) + "(" + render(e->lhs) + ")";
    }
  }
  return "";
}

DiffeoExpr derivative(const DiffeoExpr& e, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("derivative order must be 1..3");
  Expr::Ptr d = e.ast;
  for (int i = 0; i < k; ++i) d = derivative(d);
  return DiffeoExpr{d, e.domain};
}

DiffeoExpr compose(const DiffeoExpr& g, const DiffeoExpr& f) {
  return DiffeoExpr{g.ast->substitute(f.ast), f.domain};
}

ValidationReport validate(const DiffeoExpr& e, int grid) {
  if (grid < 64) throw std::invalid_argument("validate: grid >= 64");
  ValidationReport rep;
  rep.grid = grid;
  DiffeoExpr d1 = derivative(e, 1);
  const double two_pi = 2 * std::acos(-1.0);
  double lo = e.domain == DiffeoDomain::circle ? 0.0 : -8.0;
  double hi = e.domain == DiffeoDomain::circle ? two_pi : 8.0;
  double mind = std::numeric_limits<double>::infinity();
  double eqres = 0;
  for (int i = 0; i < grid; ++i) {
    double x = lo + (hi - lo) * i / grid;
    mind = std::min(mind, d1(x));
    if (e.domain == DiffeoDomain::circle)
      eqres = std::max(eqres, std::abs(e(x + two_pi) - e(x) - two_pi));
  }
  rep.min_derivative = mind;
  rep.monotone = mind > 0;
  rep.equivariance_residual = eqres;
  return rep;
}

}  // namespace gf
