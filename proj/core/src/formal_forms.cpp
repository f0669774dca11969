#include "gf/formal_forms.hpp"

#include <algorithm>

namespace gf {

FormalFormsComplex::FormalFormsComplex(WnComplexConfig cfg)
    : cfg_(cfg), wn_(WnComplexConfig{cfg.n, cfg.order + 1}) {}

Form FormalFormsComplex::f(int i, const std::vector<int>& J) const {
  if (int(J.size()) > cfg_.order + 1)
    throw TruncationError("generator order exceeds truncation R+1");
  return Form::generator(GenId::f(i, J));
}

Form FormalFormsComplex::dx(int i) const { return Form::generator(GenId::dx(i)); }

Form FormalFormsComplex::generator_differential(const GenId& g) const {
  const int n = cfg_.n;
  if (g.family == GenId::Family::DX) {
    Form out;
    Monomial merged;
    for (int j = 1; j <= n; ++j) {
      Monomial a{GenId::f(g.upper, {j})}, b{GenId::dx(j)};
      int sign = merge_monomials(a, b, merged);
      if (sign != 0) out.add_term(merged, sign);
    }
    return out;
  }
  if (g.family != GenId::Family::F)
    throw std::invalid_argument("bicomplex differential: expected f or dx generator");
  const auto J = g.lower_vec();
  const int r = static_cast<int>(J.size());
  if (r > cfg_.order)
    throw TruncationError("differential of an order-" + std::to_string(r) +
                          " generator exceeds truncation R=" + std::to_string(cfg_.order));
  Form out;
  Monomial merged;
  // Nonempty position subsets only; the empty subset is replaced by the
  // -f^i_{lJ} ^ dx^l term.
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> S, rest;
    for (int k = 0; k < r; ++k) ((mask >> k) & 1u ? S : rest).push_back(J[k]);
    for (int l = 1; l <= n; ++l) {
      std::vector<int> first = rest;
      first.push_back(l);
      Monomial a{GenId::f(g.upper, first)}, b{GenId::f(l, S)};
      int sign = merge_monomials(a, b, merged);
      if (sign != 0) out.add_term(merged, sign);
    }
  }
  for (int l = 1; l <= n; ++l) {
    std::vector<int> first = J;
    first.push_back(l);
    Monomial a{GenId::f(g.upper, first)}, b{GenId::dx(l)};
    int sign = merge_monomials(a, b, merged);
    if (sign != 0) out.add_term(merged, -sign);
  }
  return out;
}

const Antiderivation& FormalFormsComplex::table() const {
  if (!built_) {
    for (const GenId& g : generators(cfg_.order))
      table_.set(g, generator_differential(g));
    built_ = true;
  }
  return table_;
}

Form FormalFormsComplex::differential(const Form& a) const {
  for (const auto& [m, c] : a.terms())
    for (const auto& g : m)
      if (g.family == GenId::Family::F && g.order > cfg_.order)
        throw TruncationError("form contains f-generators of order > R");
  return table().apply(a);
}

const Antiderivation& FormalFormsComplex::target_table() const {
  if (!target_built_) {
    for (const GenId& g : wn_.generators(cfg_.order + 1))
      target_table_.set(g, g.order <= cfg_.order
                               ? wn_.generator_differential(g.upper, g.lower_vec())
                               : Form::zero());
    for (int i = 1; i <= cfg_.n; ++i) target_table_.set(GenId::e(i), Form::zero());
    target_built_ = true;
  }
  return target_table_;
}

Form FormalFormsComplex::target_differential(const Form& a) const {
  return target_table().apply(a);
}

namespace {

Form apply_generator_map(const Form& a, const std::function<Form(const GenId&)>& img) {
  Form out;
  for (const auto& [m, c] : a.terms()) {
    Form prod = Form::scalar(c);
    for (const auto& g : m) prod = wedge(prod, img(g));
    out = out + prod;
  }
  return out;
}

}  // namespace

Form FormalFormsComplex::mu(const Form& a) const {
  return apply_generator_map(a, [](const GenId& g) -> Form {
    switch (g.family) {
      case GenId::Family::F:
        if (g.order == 0)
          return Form::generator(GenId::e(g.upper)) +
                 Form::generator(GenId::c(g.upper, {}));
        return Form::generator(GenId::c(g.upper, g.lower_vec()));
      case GenId::Family::DX:
        return -Form::generator(GenId::c(g.upper, {}));
      default:
        throw std::invalid_argument("mu: expected f or dx generator");
    }
  });
}

Form FormalFormsComplex::mu_inverse(const Form& a) const {
  return apply_generator_map(a, [](const GenId& g) -> Form {
    switch (g.family) {
      case GenId::Family::C:
        if (g.order == 0) return -Form::generator(GenId::dx(g.upper));
        return Form::generator(GenId::f(g.upper, g.lower_vec()));
      case GenId::Family::E:
        return Form::generator(GenId::f(g.upper, {})) +
               Form::generator(GenId::dx(g.upper));
      default:
        throw std::invalid_argument("mu_inverse: expected c or e generator");
    }
  });
}

std::vector<GenId> FormalFormsComplex::generators(int max_order) const {
  std::vector<GenId> out;
  for (int r = 0; r <= max_order; ++r)
    for (int i = 1; i <= cfg_.n; ++i)
      for (const auto& J : multisets(cfg_.n, r)) out.push_back(GenId::f(i, J));
  for (int i = 1; i <= cfg_.n; ++i) out.push_back(GenId::dx(i));
  std::sort(out.begin(), out.end());
  return out;
}

int bicomplex_order(const Form& a) {
  int r = -1;
  for (const auto& [m, c] : a.terms())
    for (const auto& g : m)
      if (g.family == GenId::Family::F) r = std::max(r, int(g.order));
  return r;
}

}  // namespace gf
