#include "gf/relative.hpp"

namespace gf {

LinearFieldBasis LinearFieldBasis::gl(int n, int order) {
  LinearFieldBasis b{Kind::gl, {}};
  for (int a = 1; a <= n; ++a)
    for (int j = 1; j <= n; ++j)
      b.elements.push_back(FormalVectorField::linear(n, order, a, j));
  return b;
}

LinearFieldBasis LinearFieldBasis::so(int n, int order) {
  LinearFieldBasis b{Kind::so, {}};
  for (int a = 1; a <= n; ++a)
    for (int j = a + 1; j <= n; ++j) {
      FormalVectorField f(n, order);
      std::vector<int> ej(n, 0), ea(n, 0);
      ej[j - 1] = 1;
      ea[a - 1] = 1;
      f.add_monomial(a, ej, 1);
      f.add_monomial(j, ea, -1);
      b.elements.push_back(f);
    }
  return b;
}

Form contract(const Form& c, const FormalVectorField& X) {
  Form out;
  for (const auto& [m, coef] : c.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      Rational v = pair_generator(m[k], X);
      if (v == 0) continue;
      Monomial rest;
      rest.reserve(m.size() - 1);
      for (std::size_t a = 0; a < m.size(); ++a)
        if (a != k) rest.push_back(m[a]);
      out.add_term(rest, (k % 2 == 0 ? coef : -coef) * v);
    }
  }
  return out;
}

Form lie_derivative(const WnComplex& wn, const Form& c,
                    const FormalVectorField& X) {
  return contract(wn.differential(c), X) + wn.differential(contract(c, X));
}

RelativityReport is_relative(const WnComplex& wn, const Form& c,
                             const LinearFieldBasis& basis) {
  RelativityReport rep;
  rep.relative = true;
  int idx = 0;
  for (const auto& X : basis.elements) {
    ++idx;
    Form h = contract(c, X);
    if (!h.is_zero()) {
      rep.relative = false;
      rep.failures.push_back("i_X != 0 for basis element #" + std::to_string(idx));
    }
    Form l = lie_derivative(wn, c, X);
    if (!l.is_zero()) {
      rep.relative = false;
      rep.failures.push_back("L_X != 0 for basis element #" + std::to_string(idx));
    }
  }
  return rep;
}

Form sign_flip(const Form& c) {
  Form out;
  for (const auto& [m, coef] : c.terms()) {
    int sign = 1;
    for (const auto& g : m) {
      if (g.family != GenId::Family::C || g.upper != 1)
        throw std::invalid_argument("sign_flip is defined for n = 1 cochains");
      if ((g.order + 1) % 2 == 1) sign = -sign;
    }
    out.add_term(m, coef * sign);
  }
  return out;
}

}  // namespace gf
