#pragma once

#include "gf/form.hpp"

#include <stdexcept>

namespace gf {

struct WnComplexConfig {
  int n = 1;       // number of formal variables, >= 1
  int order = 2;   // jet truncation order R, >= 0
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The cochain complex C*(W_n) truncated at jet order R.
///
/// Generators c^i_{j1..jr} exist for r <= R+1; the differential is defined on
/// generators of order <= R (one application raises the order by at most one,
/// so its output stays representable). Asking for the differential of a
/// generator of order > R throws TruncationError instead of silently
/// dropping terms.
class WnComplex {
 public:
  explicit WnComplex(WnComplexConfig cfg);

  const WnComplexConfig& config() const { return cfg_; }
  int n() const { return cfg_.n; }
  int order() const { return cfg_.order; }

  /// The generator c^i_J as a Form. J is a multiset of indices in 1..n.
  Form c(int i, const std::vector<int>& J) const;

  /// Right side of the defining relation for d c^i_J: the sum over subsets
  /// S of the positions of J of  c^i_{l,(J minus S)} ^ c^l_S, summed over l.
  Form generator_differential(int i, const std::vector<int>& J) const;

  /// d extended to arbitrary forms as an antiderivation of degree 1.
  Form differential(const Form& a) const;

  /// The antiderivation table for every generator of order <= R (lazily
  /// built, shared). Useful where a raw table is needed (mu targets, tests).
  const Antiderivation& table() const;

  /// Enumerate all generators with order <= max_order.
  std::vector<GenId> generators(int max_order) const;

 private:
  void check_indices(int i, const std::vector<int>& J) const;

  WnComplexConfig cfg_;
  mutable Antiderivation table_;
  mutable bool table_built_ = false;
};

/// All sorted multisets of size r over {1..n}.
std::vector<std::vector<int>> multisets(int n, int r);

}  // namespace gf
