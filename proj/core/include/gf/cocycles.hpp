#pragma once

#include "gf/diffeo.hpp"
#include "gf/quadrature.hpp"

#include <functional>
#include <random>
#include <vector>

namespace gf {

/// Continuous nonhomogeneous group cochain with values in R (trivial
/// action). The group product throughout is g1 g2 = g2 after g1.
struct GroupCochain {
  int arity = 1;
  std::function<double(const std::vector<DiffeoExpr>&)> evaluate;
};

/// Product in the diffeomorphism group: g1 g2 = g2 after g1.
DiffeoExpr group_product(const DiffeoExpr& g1, const DiffeoExpr& g2);

/// The degree-3 cocycle on Diff(R) at basepoint x:
///   c(f,g,h) = int_x^{f(x)} log|h'(g(t))| dlog|g'(t)| .
/// Vanishes identically when g is affine, f = id, or h is affine with
/// |h'| = 1; for affine h it reduces to log|h'| (log|g'(f(x))| - log|g'(x)|).
QuadResult gv_cocycle(const DiffeoExpr& f, const DiffeoExpr& g,
                      const DiffeoExpr& h, double x,
                      const QuadratureConfig& cfg = {});

/// The degree-2 cocycle on Diff+(S^1) with the flat metric, evaluated on
/// lifts: with composite arguments gbar_1 = g_1 and gbar_2 = g_2 after g_1,
///   c(g_1,g_2) = int_0^{2pi} log(gbar_1'(t)) (log gbar_2')'(t) dt .
/// The general entry point takes the s-partition; only the n = 1 shape
/// (|gs| = 2, s = (1)) has a known closed formula and is implemented.
QuadResult bott_cocycle(const std::vector<DiffeoExpr>& gs,
                        const std::vector<int>& s_partition,
                        const QuadratureConfig& cfg = {});
QuadResult bott_cocycle(const DiffeoExpr& g1, const DiffeoExpr& g2,
                        const QuadratureConfig& cfg = {});

/// Nonhomogeneous coboundary (trivial module action):
///   (dc)(g_1..g_{p+1}) = c(g_2..g_{p+1})
///     + sum_i (-1)^i c(g_1,..,g_i g_{i+1},..,g_{p+1})
///     + (-1)^{p+1} c(g_1..g_p),
/// so that at p = 1 it is c(g_2) - c(g_1 g_2) + c(g_1) and a constant
/// 0-cochain is closed.
double coboundary(const GroupCochain& c, const std::vector<DiffeoExpr>& args);

GroupCochain gv_cochain(double x, const QuadratureConfig& cfg = {});
GroupCochain bott_cochain(const QuadratureConfig& cfg = {});

/// Random diffeos for property tests: x + a sin(x + phi) + b tanh(x) + rho
/// with |a| + |b| <= 0.9, which keeps f' >= 0.1 everywhere. Circle variants
/// drop the tanh term (lift equivariance) and keep the rotation part.
class DiffeoSampler {
 public:
  explicit DiffeoSampler(std::uint64_t seed) : rng_(seed) {}
  DiffeoExpr line();
  DiffeoExpr circle();

 private:
  std::mt19937_64 rng_;
};

}  // namespace gf
