#include "gf/cocycles.hpp"

#include <cmath>

namespace gf {

DiffeoExpr group_product(const DiffeoExpr& g1, const DiffeoExpr& g2) {
  return compose(g2, g1);
}

QuadResult gv_cocycle(const DiffeoExpr& f, const DiffeoExpr& g,
                      const DiffeoExpr& h, double x,
                      const QuadratureConfig& cfg) {
  DiffeoExpr g1 = derivative(g, 1), g2 = derivative(g, 2);
  DiffeoExpr h1 = derivative(h, 1);
  auto integrand = [&](double t) {
    double gp = g1(t);
    return std::log(std::abs(h1(g(t)))) * g2(t) / gp;
  };
  return integrate(integrand, x, f(x), cfg);
}

QuadResult bott_cocycle(const DiffeoExpr& g1, const DiffeoExpr& g2,
                        const QuadratureConfig& cfg) {
  DiffeoExpr gbar2 = compose(g2, g1);
  DiffeoExpr g1d = derivative(g1, 1);
  DiffeoExpr b1 = derivative(gbar2, 1), b2 = derivative(gbar2, 2);
  const double two_pi = 2 * std::acos(-1.0);
  auto integrand = [&](double t) {
    return std::log(g1d(t)) * b2(t) / b1(t);
  };
  return integrate(integrand, 0.0, two_pi, cfg);
}

QuadResult bott_cocycle(const std::vector<DiffeoExpr>& gs,
                        const std::vector<int>& s_partition,
                        const QuadratureConfig& cfg) {
  int n = 0;
  for (int s : s_partition) n += s;
  if (n != 1 || s_partition.size() != 1 || gs.size() != 2)
    throw std::invalid_argument(
        "bott_cocycle: only the circle case (two arguments, partition (1)) is implemented");
  return bott_cocycle(gs[0], gs[1], cfg);
}

double coboundary(const GroupCochain& c, const std::vector<DiffeoExpr>& args) {
  const int p = c.arity;
  if (int(args.size()) != p + 1)
    throw std::invalid_argument("coboundary: arity mismatch");
  // leading module-action term: the action on R is trivial
  std::vector<DiffeoExpr> head(args.begin() + 1, args.end());
  double out = c.evaluate(head);
  for (int i = 1; i <= p; ++i) {
    std::vector<DiffeoExpr> merged;
    merged.reserve(p);
    for (int k = 0; k < i - 1; ++k) merged.push_back(args[k]);
    merged.push_back(group_product(args[i - 1], args[i]));
    for (int k = i + 1; k <= p; ++k) merged.push_back(args[k]);
    out += (i % 2 == 0 ? 1.0 : -1.0) * c.evaluate(merged);
  }
  std::vector<DiffeoExpr> tail(args.begin(), args.end() - 1);
  out += ((p + 1) % 2 == 0 ? 1.0 : -1.0) * c.evaluate(tail);
  return out;
}

GroupCochain gv_cochain(double x, const QuadratureConfig& cfg) {
  GroupCochain c;
  c.arity = 3;
  c.evaluate = [x, cfg](const std::vector<DiffeoExpr>& gs) {
    return gv_cocycle(gs.at(0), gs.at(1), gs.at(2), x, cfg).value;
  };
  return c;
}

GroupCochain bott_cochain(const QuadratureConfig& cfg) {
  GroupCochain c;
  c.arity = 2;
  c.evaluate = [cfg](const std::vector<DiffeoExpr>& gs) {
    return bott_cocycle(gs.at(0), gs.at(1), cfg).value;
  };
  return c;
}

namespace {

Expr::Ptr sin_shift(double a, double phi) {
  return Expr::mul(Expr::num(a),
                   Expr::fun(Expr::Fun::sin, Expr::add(Expr::var(), Expr::num(phi))));
}

}  // namespace

DiffeoExpr DiffeoSampler::line() {
  std::uniform_real_distribution<double> amp(0.05, 0.45), ph(0.0, 6.28),
      rho(-1.0, 1.0), sgn(-1.0, 1.0);
  double a = amp(rng_) * (sgn(rng_) < 0 ? -1 : 1);
  double bmax = 0.9 - std::abs(a);
  double b = std::uniform_real_distribution<double>(0.05, bmax)(rng_) *
             (sgn(rng_) < 0 ? -1 : 1);
  Expr::Ptr ast = Expr::add(
      Expr::add(Expr::var(), sin_shift(a, ph(rng_))),
      Expr::add(Expr::mul(Expr::num(b), Expr::fun(Expr::Fun::tanh, Expr::var())),
                Expr::num(rho(rng_))));
  return DiffeoExpr{ast, DiffeoDomain::line};
}

DiffeoExpr DiffeoSampler::circle() {
  std::uniform_real_distribution<double> amp(0.05, 0.8), ph(0.0, 6.28), sgn(-1.0, 1.0);
  double a = amp(rng_) * (sgn(rng_) < 0 ? -1 : 1);
  Expr::Ptr ast = Expr::add(Expr::add(Expr::var(), sin_shift(a, ph(rng_))),
                            Expr::num(ph(rng_)));
  return DiffeoExpr{ast, DiffeoDomain::circle};
}

}  // namespace gf
