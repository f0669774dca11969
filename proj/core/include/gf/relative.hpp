#pragma once

#include "gf/vector_field.hpp"
#include "gf/wn_complex.hpp"

#include <string>
#include <vector>

namespace gf {

/// Basis of a linear subalgebra of W_n:
///   gl: E_{ab} = x^b d/dx^a,  a,b in 1..n           (n^2 elements)
///   so: A_{ab} = x^b d/dx^a - x^a d/dx^b,  a < b    (n(n-1)/2 elements)
struct LinearFieldBasis {
  enum class Kind { gl, so };
  Kind kind;
  std::vector<FormalVectorField> elements;

  static LinearFieldBasis gl(int n, int order);
  static LinearFieldBasis so(int n, int order);
};

/// Interior product. On a monomial g_1^..^g_q:
///   sum_k (-1)^{k-1} g_k(X) g_1^..(hat g_k)..^g_q.
/// Degree-0 input contracts to zero.
Form contract(const Form& c, const FormalVectorField& X);

/// Cartan formula L_X = i_X d + d i_X. Truncation errors from d propagate.
Form lie_derivative(const WnComplex& wn, const Form& c,
                    const FormalVectorField& X);

struct RelativityReport {
  bool relative = false;
  // per-basis-element failures; empty when relative
  std::vector<std::string> failures;
};

/// True iff i_X c = 0 and L_X c = 0 for every X in the basis.
RelativityReport is_relative(const WnComplex& wn, const Form& c,
                             const LinearFieldBasis& basis);

/// n = 1 only: the action of the orientation-reversing jet x -> -x, which
/// multiplies c^1_{1..1(r)} by (-1)^{r+1}. The nontrivial component of O(1)
/// acts through this involution.
Form sign_flip(const Form& c);

}  // namespace gf
