#pragma once

#include <functional>
#include <stdexcept>

namespace gf {

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) with stateless interval bisection;
/// deterministic for fixed inputs. Handles a > b by orientation. Throws
/// QuadratureError when the subdivision budget is exhausted before the
/// error estimate meets max(abs_tol, rel_tol*|I|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

}  // namespace gf
