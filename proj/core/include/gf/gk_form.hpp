#pragma once

#include "gf/form.hpp"
#include "gf/jet_form.hpp"

#include <string>
#include <vector>

namespace gf {

/// Conventions for the 1-D frame-space computation, fixed here and cited by
/// every cross-check:
///   * jets on S(R) carry coordinates x_0..x_R (derivatives of k at 0),
///     with x_1 != 0; computations restrict to the x_1 > 0 chart and the
///     orientation-reversing part of O(1) is handled by the explicit
///     sign-flip involution of the relative-complex module;
///   * the canonical 1-form is  omega(tau) = - d/dt (k_0^{-1} after k_t)(0),
///     the minus sign included;
///   * the group product is g1 g2 = g2 after g1 (right action), matching the
///     group-cocycle module;
///   * jet_compose(a, b) is the jet of (b after a);
///   * logarithmic coordinates enter only through their exact differentials
///     (dy^1 = dx_1/x_1); no transcendental functions appear.
///
/// Variables of the JetForm context: 0..R are x_0..x_R.
struct GkComponents {
  int R = 2;
  /// omega_r = the c^1_{1..1 (r ones)}-component, a 1-form in dx_0..dx_R
  /// with coefficients rational in x_1..x_R.
  std::vector<JetForm> omega;

  std::vector<std::string> names() const;
};

/// Build the components by differentiating jet_compose(jet_invert(k_0), k_t)
/// with a symbolic velocity, R >= 2.
GkComponents gk_form_components(int R);

/// Residual of the Maurer-Cartan condition in component r (valid for
/// r <= R-1):  d omega_r + sum_a C(r,a) omega_a ^ omega_{r-a+1}.
JetForm maurer_cartan_residual(const GkComponents& gk, int r);

/// The realization alpha: C*(W_1) -> Omega*(S(R)) along the components,
/// c^1_{1^r} |-> omega_r, extended multiplicatively and linearly.
JetForm alpha_realize(const GkComponents& gk, const Form& c);

struct GvLocalCandidate {
  std::string name;       // rendered y^2 candidate
  bool proportional = false;
  std::string constant;   // rational constant when proportional
};

struct GvLocalReport {
  int R = 3;
  bool maurer_cartan_ok = false;
  bool closed = false;            // d alpha(c_{1,1}) = 0
  bool denominators_x1_only = false;
  std::string local_form;         // rendered alpha(c_{1,1})
  std::vector<GvLocalCandidate> candidates;
  /// Name of the candidate (if any) matching with a nonzero constant.
  std::string matched;
  std::string matched_constant;
};

/// Compare alpha(Lambda_1 ^ Psi_1) against dy ^ dy^1 ^ dy^2 for the
/// candidate second-order coordinates y^2 in {x_2/x_1, x_2/x_1^2, x_2/x_0^2}
/// (the last is the printed form of the source; the report decides).
GvLocalReport gv_local_form(int R = 3);

}  // namespace gf
