#pragma once

#include "gf/wn_complex.hpp"

namespace gf {

/// The bicomplex C*(W_n; Omega*_n) of cochains with values in formal forms,
/// truncated like WnComplex. Generators are f^i_{j1..jr} (r >= 0) and dx^i;
/// the total differential D acts by
///   D f^i_J   = sum over nonempty subsets S of positions of J of
///               f^i_{l,(J minus S)} ^ f^l_S   -  sum_l f^i_{lJ} ^ dx^l
///   D dx^i    = sum_j f^i_j ^ dx^j .
/// mu is the algebra isomorphism onto C*(W_n) (x) Lambda*((R^n)') with
///   mu(f^i) = e^i + c^i,  mu(f^i_J) = c^i_J (|J| >= 1),  mu(dx^i) = -c^i,
/// where e^i are the exterior-factor generators, killed by the target
/// differential.
class FormalFormsComplex {
 public:
  explicit FormalFormsComplex(WnComplexConfig cfg);

  const WnComplexConfig& config() const { return cfg_; }
  const WnComplex& wn() const { return wn_; }

  Form f(int i, const std::vector<int>& J) const;
  Form dx(int i) const;

  Form generator_differential(const GenId& g) const;
  Form differential(const Form& a) const;

  /// mu and its inverse, extended multiplicatively.
  Form mu(const Form& a) const;
  Form mu_inverse(const Form& a) const;

  /// Differential on the target C*(W_n) (x) Lambda*: d on the c-generators,
  /// zero on the e-generators.
  Form target_differential(const Form& a) const;

  /// Generators f^i_J (|J| <= max_order) and dx^i.
  std::vector<GenId> generators(int max_order) const;

 private:
  const Antiderivation& table() const;
  const Antiderivation& target_table() const;

  WnComplexConfig cfg_;
  WnComplex wn_;
  mutable Antiderivation table_, target_table_;
  mutable bool built_ = false, target_built_ = false;
};

/// Order of a bicomplex cochain: the largest |J| over its f-generators
/// (the filtration degree); -1 for the zero form.
int bicomplex_order(const Form& a);

}  // namespace gf
