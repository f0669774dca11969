#pragma once

#include "gf/matrix_form.hpp"
#include "gf/wn_complex.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gf {

/// The characteristic matrices over C*(W_n):
///   gamma^i_j = c^i_j            psi^i_j = sum_k c^i_{jk} ^ c^k
///   lambda    = (gamma + gamma^T)/2      alpha = (gamma - gamma^T)/2
/// and the derived cocycles/transgressions built from them.
class CharTable {
 public:
  /// R >= 2 is required to even write psi; R >= 3 lets d act on everything
  /// the structure identities touch.
  explicit CharTable(int n, int order = 3);

  const WnComplex& complex() const { return *wn_; }
  int n() const { return n_; }

  const MatrixForm& gamma() const { return gamma_; }
  const MatrixForm& psi() const { return psi_; }
  const MatrixForm& psi_transposed() const { return psi_t_; }
  const MatrixForm& lambda() const { return lambda_; }
  const MatrixForm& alpha() const { return alpha_; }

  /// tr(psi^p), degree 2p, 1 <= p <= n. Closed; relative to GL_n.
  Form psi_p(int p) const;
  /// tr(gamma^(2p-1)), degree 2p-1.
  Form gamma_p(int p) const;
  /// tr(lambda^(2p-1)); vanishes identically for even p.
  Form lambda_p(int p) const;

  /// The curvature interpolant  Psi(t) = t/2 Psi + (t-1)/2 Psi^T
  /// + (t - t^2) [lambda, lambda],  a t-polynomial matrix of degree-2 forms.
  MatrixTPoly psi_interpolant() const;

  /// The relative transgression
  ///   Lambda_p = p p! 2^{p-1} / ((p+1)...(2p+1)) * int_0^1 Qp(lambda, Psi(t)) dt
  /// for odd p, where Qp(X, X') polarizes tr(X^p) with one X slot.
  /// d Lambda_p = kappa_p Psi_p for a rational constant kappa_p.
  Form lambda_cap_p(int p) const;

  /// The prefactor in front of the integral above.
  static Rational lambda_cap_prefactor(int p);

  /// int_0^1 Qp(lambda, Psi(t)) dt without the prefactor.
  Form transgression_integral(int p) const;

  /// If a == c * b exactly for a rational c (b != 0), return c.
  static std::optional<Rational> proportionality(const Form& a, const Form& b);

  /// Quotient to C*(gl_n): keep only monomials all of whose generators have
  /// exactly one lower index.
  static Form restrict_to_gl(const Form& a);

 private:
  int n_;
  std::shared_ptr<WnComplex> wn_;
  MatrixForm gamma_, psi_, psi_t_, lambda_, alpha_;
};

/// One structure-identity residual: name plus whether it vanished, with the
/// leftover form rendered when it did not.
struct IdentityResidual {
  std::string name;
  bool holds = false;
  std::string residual;  // empty when holds
};

/// Symbolic verification of the differential identities for lambda, psi,
/// psi^T. The identity for d psi is checked against several candidate right
/// sides (the source formula is ambiguous); each candidate is reported.
std::vector<IdentityResidual> verify_structure_identities(const CharTable& tbl);

/// Residual of the invariance identity for the polarized trace form:
///   sum_i (-1)^{k_1+..+k_{i-1}+1} Q(w_1, .., [w, w_i], .., w_p)
/// for a degree-1 matrix w. Zero for every substitution.
Form pinv_residual(const std::vector<const MatrixForm*>& args,
                   const MatrixForm& w);

}  // namespace gf
