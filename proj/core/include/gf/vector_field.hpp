#pragma once

#include "gf/form.hpp"

#include <map>
#include <span>
#include <vector>

namespace gf {

/// Truncated polynomial vector field in n variables: the jet at 0 of a vector
/// field, with components of total degree <= R+1. The extra degree keeps
/// generators of order R+1 (produced by one differential at order R)
/// evaluable, so the evaluation oracle stays exact at the truncation
/// boundary.
class FormalVectorField {
 public:
  /// Exponent vector (length n) -> coefficient.
  using Poly = std::map<std::vector<int>, Rational>;

  FormalVectorField(int n, int order);

  int n() const { return n_; }
  int order() const { return order_; }
  int max_degree() const { return order_ + 1; }

  /// Add c * x^exps d/dx^i (i in 1..n). Degree beyond R+1 is rejected.
  void add_monomial(int i, const std::vector<int>& exps, const Rational& c);
  const Poly& component(int i) const { return comps_[i - 1]; }

  /// Coefficient field x^b d/da for gl; below, so uses the antisymmetric
  /// combinations.
  static FormalVectorField linear(int n, int order, int a, int b);

  bool operator==(const FormalVectorField&) const = default;

 private:
  int n_;
  int order_;
  std::vector<Poly> comps_;
};

/// [xi, eta]^i = sum_j (xi^j d_j eta^i - eta^j d_j xi^i), truncated to total
/// degree <= R+1.
FormalVectorField formal_bracket(const FormalVectorField& xi,
                                 const FormalVectorField& eta);

/// Pairing of a single generator with a field: c^i_J(xi) is the J-th partial
/// derivative of xi^i at 0. Non-C generator families pair to zero.
Rational pair_generator(const GenId& g, const FormalVectorField& xi);

/// Skew multilinear evaluation of a homogeneous cochain on degree-many
/// fields. Throws std::invalid_argument on arity mismatch.
Rational evaluate_cochain(const Form& c, std::span<const FormalVectorField> fields);

/// The Chevalley-Eilenberg differential evaluated directly through the
/// bracket (trivial coefficients):
///   sum_{i<j} (-1)^{i+j} c([xi_i,xi_j], ..hat i..hat j..).
/// Implementation-independent of the symbolic differential; used as its
/// oracle.
Rational ce_differential_oracle(const Form& c,
                                std::span<const FormalVectorField> fields);

}  // namespace gf
