#include "gf/vector_field.hpp"

#include <algorithm>
#include <numeric>

namespace gf {

FormalVectorField::FormalVectorField(int n, int order)
    : n_(n), order_(order), comps_(n) {
  if (n < 1) throw std::invalid_argument("FormalVectorField: n >= 1");
  if (order < 0) throw std::invalid_argument("FormalVectorField: order >= 0");
}

void FormalVectorField::add_monomial(int i, const std::vector<int>& exps,
                                     const Rational& c) {
  if (i < 1 || i > n_) throw std::invalid_argument("component index");
  if (int(exps.size()) != n_) throw std::invalid_argument("exponent arity");
  int deg = std::accumulate(exps.begin(), exps.end(), 0);
  if (deg > max_degree()) throw std::invalid_argument("degree exceeds R+1");
  if (c == 0) return;
  auto& p = comps_[i - 1];
  auto it = p.find(exps);
  if (it == p.end()) {
    p.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

FormalVectorField FormalVectorField::linear(int n, int order, int a, int b) {
  FormalVectorField f(n, order);
  std::vector<int> e(n, 0);
  e[b - 1] = 1;
  f.add_monomial(a, e, 1);
  return f;
}

FormalVectorField formal_bracket(const FormalVectorField& xi,
                                 const FormalVectorField& eta) {
  if (xi.n() != eta.n() || xi.order() != eta.order())
    throw std::invalid_argument("bracket: mismatched field spaces");
  const int n = xi.n();
  FormalVectorField out(n, xi.order());
  const int maxdeg = out.max_degree();

  auto accumulate = [&](const FormalVectorField& A, const FormalVectorField& B,
                        int sign) {
    // sign * A^j d_j B^i
    for (int j = 1; j <= n; ++j) {
      for (const auto& [ea, ca] : A.component(j)) {
        for (int i = 1; i <= n; ++i) {
          for (const auto& [eb, cb] : B.component(i)) {
            if (eb[j - 1] == 0) continue;
            std::vector<int> e = eb;
            e[j - 1] -= 1;
            Rational c = ca * cb * eb[j - 1] * sign;
            int deg = 0;
            for (std::size_t k = 0; k < e.size(); ++k) {
              e[k] += ea[k];
              deg += e[k];
            }
            if (deg > maxdeg) continue;  // truncation
            out.add_monomial(i, e, c);
          }
        }
      }
    }
  };
  accumulate(xi, eta, 1);
  accumulate(eta, xi, -1);
  return out;
}

Rational pair_generator(const GenId& g, const FormalVectorField& xi) {
  if (g.family != GenId::Family::C) return 0;
  std::vector<int> exps(xi.n(), 0);
  for (int k = 0; k < g.order; ++k) exps[g.lower[k] - 1] += 1;
  const auto& p = xi.component(g.upper);
  auto it = p.find(exps);
  if (it == p.end()) return 0;
  Rational c = it->second;
  for (int e : exps) c *= factorial(e);
  return c;
}

namespace {

Rational monomial_eval(const Monomial& m,
                       std::span<const FormalVectorField> fields) {
  const std::size_t q = m.size();
  // Alternating sum over permutations: det of the pairing matrix.
  std::vector<std::vector<Rational>> M(q, std::vector<Rational>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) M[a][b] = pair_generator(m[a], fields[b]);
  // Exact Gaussian elimination would need pivoting logic; q is tiny, use
  // Leibniz expansion over permutations.
  std::vector<std::size_t> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int sign = 1;
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = a + 1; b < q; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    Rational prod = sign;
    for (std::size_t a = 0; a < q && prod != 0; ++a) prod *= M[a][perm[a]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

Rational evaluate_cochain(const Form& c,
                          std::span<const FormalVectorField> fields) {
  if (c.is_zero()) return 0;
  auto deg = c.degree();
  if (!deg) throw std::invalid_argument("evaluate_cochain: mixed-degree form");
  if (std::size_t(*deg) != fields.size())
    throw std::invalid_argument("evaluate_cochain: arity mismatch");
  if (*deg == 0) return c.terms().begin()->second;
  Rational out = 0;
  for (const auto& [m, coef] : c.terms()) out += coef * monomial_eval(m, fields);
  return out;
}

Rational ce_differential_oracle(const Form& c,
                                std::span<const FormalVectorField> fields) {
  if (c.is_zero()) return 0;
  auto deg = c.degree();
  if (!deg) throw std::invalid_argument("oracle: mixed-degree form");
  const std::size_t q1 = fields.size();
  if (q1 != std::size_t(*deg) + 1)
    throw std::invalid_argument("oracle: arity mismatch");
  if (*deg == 0) return 0;  // no pairs and the module action is trivial
  Rational out = 0;
  for (std::size_t i = 0; i < q1; ++i) {
    for (std::size_t j = i + 1; j < q1; ++j) {
      std::vector<FormalVectorField> rest;
      rest.reserve(q1 - 1);
      rest.push_back(formal_bracket(fields[i], fields[j]));
      for (std::size_t k = 0; k < q1; ++k)
        if (k != i && k != j) rest.push_back(fields[k]);
      // (-1)^{i+j} with 1-based indices
      int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
      out += sign * evaluate_cochain(c, rest);
    }
  }
  return out;
}

}  // namespace gf
