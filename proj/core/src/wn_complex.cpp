#include "gf/wn_complex.hpp"

#include <algorithm>

namespace gf {

WnComplex::WnComplex(WnComplexConfig cfg) : cfg_(cfg) {
  if (cfg_.n < 1) throw std::invalid_argument("WnComplex: n must be >= 1");
  if (cfg_.order < 0) throw std::invalid_argument("WnComplex: order must be >= 0");
}

void WnComplex::check_indices(int i, const std::vector<int>& J) const {
  if (i < 1 || i > cfg_.n) throw std::invalid_argument("upper index out of range");
  for (int j : J)
    if (j < 1 || j > cfg_.n) throw std::invalid_argument("lower index out of range");
}

Form WnComplex::c(int i, const std::vector<int>& J) const {
  check_indices(i, J);
  if (int(J.size()) > cfg_.order + 1)
    throw TruncationError("generator order exceeds truncation R+1");
  return Form::generator(GenId::c(i, J));
}

Form WnComplex::generator_differential(int i, const std::vector<int>& J) const {
  check_indices(i, J);
  const int r = static_cast<int>(J.size());
  if (r > cfg_.order)
    throw TruncationError("differential of an order-" + std::to_string(r) +
                          " generator exceeds truncation R=" + std::to_string(cfg_.order));
  std::vector<int> sorted = J;
  std::sort(sorted.begin(), sorted.end());

  Form out;
  Monomial merged;
  // Subsets S of the r positions; repeated lower indices contribute with
  // multiplicity.
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> S, rest;
    for (int k = 0; k < r; ++k)
      ((mask >> k) & 1u ? S : rest).push_back(sorted[k]);
    for (int l = 1; l <= cfg_.n; ++l) {
      std::vector<int> first = rest;
      first.push_back(l);
      GenId g1 = GenId::c(i, first);
      GenId g2 = GenId::c(l, S);
      Monomial a{g1}, b{g2};
      int sign = merge_monomials(a, b, merged);
      if (sign != 0) out.add_term(merged, sign);
    }
  }
  return out;
}

const Antiderivation& WnComplex::table() const {
  if (!table_built_) {
    for (const GenId& g : generators(cfg_.order))
      table_.set(g, generator_differential(g.upper, g.lower_vec()));
    table_built_ = true;
  }
  return table_;
}

Form WnComplex::differential(const Form& a) const {
  if (a.order() > cfg_.order)
    throw TruncationError("form contains generators of order > R");
  return table().apply(a);
}

std::vector<GenId> WnComplex::generators(int max_order) const {
  std::vector<GenId> out;
  for (int r = 0; r <= max_order; ++r)
    for (int i = 1; i <= cfg_.n; ++i)
      for (const auto& J : multisets(cfg_.n, r)) out.push_back(GenId::c(i, J));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> multisets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j <= n; ++j) {
      cur.push_back(j);
      self(self, j, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 1, r);
  return out;
}

}  // namespace gf
