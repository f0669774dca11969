#pragma once

#include "gf/rational.hpp"

#include <stdexcept>
#include <vector>

namespace gf {

struct SingularJetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational inv(const Rational& r) {
  if (r == 0) throw SingularJetError("division by zero");
  return 1 / r;
}

/// Dual numbers over a coefficient ring: a + eps*b with eps^2 = 0. Used to
/// differentiate jet compositions with respect to a formal parameter.
template <class K>
struct Dual {
  K re{};
  K du{};

  Dual() = default;
  explicit Dual(const Rational& r) : re(K(r)) {}
  Dual(K re_, K du_) : re(std::move(re_)), du(std::move(du_)) {}

  Dual operator+(const Dual& o) const { return {re + o.re, du + o.du}; }
  Dual operator-(const Dual& o) const { return {re - o.re, du - o.du}; }
  Dual operator-() const { return {-re, -du}; }
  Dual operator*(const Dual& o) const {
    return {re * o.re, re * o.du + du * o.re};
  }
};

template <class K>
bool is_zero(const Dual<K>& d) {
  return is_zero(d.re) && is_zero(d.du);
}

template <class K>
Dual<K> inv(const Dual<K>& d) {
  K ir = inv(d.re);
  return {ir, -(d.du * ir * ir)};
}

/// Truncated jet of a 1-D map: coefficients x_0..x_R are the derivatives at
/// the source origin, over any commutative coefficient ring K (exact
/// rationals, rational functions, duals of those).
template <class K>
struct Jet1D {
  std::vector<K> x;  // size R+1

  int order() const { return static_cast<int>(x.size()) - 1; }

  static Jet1D identity(int R) {
    Jet1D j;
    j.x.assign(R + 1, K{});
    if (R >= 1) j.x[1] = K(Rational(1));
    return j;
  }
};

namespace detail {

template <class K>
std::vector<K> taylor(const Jet1D<K>& a) {
  std::vector<K> t(a.x.size());
  Rational f = 1;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    if (k > 1) f *= int(k);
    t[k] = a.x[k] * K(Rational(1) / f);
  }
  return t;
}

template <class K>
Jet1D<K> from_taylor(std::vector<K> t) {
  Rational f = 1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 1) f *= int(k);
    t[k] = t[k] * K(f);
  }
  return Jet1D<K>{std::move(t)};
}

template <class K>
std::vector<K> trunc_mul(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j)
      c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

}  // namespace detail

/// Jet of the composite b after a (apply a first), truncated at the common
/// order. Formal substitution of the full series of a into the series of b;
/// exact when a's constant term is zero (or nilpotent), which is how every
/// call site uses it -- callers shift jets to a common basepoint.
template <class K>
Jet1D<K> jet_compose(const Jet1D<K>& a, const Jet1D<K>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("jet_compose: mismatched orders");
  const int R = a.order();
  auto A = detail::taylor(a);
  auto B = detail::taylor(b);
  std::vector<K> pw(R + 1), out(R + 1);
  pw[0] = K(Rational(1));
  out[0] = B[0];
  for (int j = 1; j <= R; ++j) {
    pw = detail::trunc_mul(pw, A);
    for (int k = 0; k <= R; ++k) out[k] = out[k] + B[j] * pw[k];
  }
  return detail::from_taylor(std::move(out));
}

/// Two-sided compositional inverse of the origin-based part of a: the result
/// b has b_0 = 0 and jet_compose(a - a_0, b) = identity up to order R. (As a
/// germ, b is the inverse of a based at a's value.) Requires x_1 invertible.
template <class K>
Jet1D<K> jet_invert(const Jet1D<K>& a) {
  const int R = a.order();
  if (R < 1 || is_zero(a.x[1])) throw SingularJetError("jet_invert: x_1 = 0");
  auto A = detail::taylor(a);
  A[0] = K{};  // shift to the basepoint
  K ia1 = inv(A[1]);
  std::vector<K> B(R + 1);
  B[1] = ia1;
  for (int k = 2; k <= R; ++k) {
    // coefficient of u^k in B(A(u)) with B[k] still zero
    std::vector<K> pw(R + 1), comp(R + 1);
    pw[0] = K(Rational(1));
    for (int j = 1; j <= R; ++j) {
      pw = detail::trunc_mul(pw, A);
      for (int m = 0; m <= R; ++m) comp[m] = comp[m] + B[j] * pw[m];
    }
    K corr = comp[k];
    K a1k = ia1;
    for (int m = 1; m < k; ++m) a1k = a1k * ia1;
    B[k] = -(corr * a1k);
  }
  return detail::from_taylor(std::move(B));
}

template <class K>
Jet1D<Dual<K>> lift_dual(const Jet1D<K>& a) {
  Jet1D<Dual<K>> out;
  out.x.reserve(a.x.size());
  for (const auto& c : a.x) out.x.push_back(Dual<K>{c, K{}});
  return out;
}

}  // namespace gf
