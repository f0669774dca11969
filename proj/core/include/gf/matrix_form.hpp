#pragma once

#include "gf/form.hpp"

#include <vector>

namespace gf {

/// Polynomial in a formal parameter t with Form coefficients. Products
/// convolve in t; integrate_t maps t^k |-> 1/(k+1) exactly. Used for the
/// curvature interpolant in the transgression construction.
class TPolyForm {
 public:
  TPolyForm() = default;
  explicit TPolyForm(Form constant) { coeffs_.push_back(std::move(constant)); }

  static TPolyForm monomial(int k, Form f);

  const std::vector<Form>& coeffs() const { return coeffs_; }
  Form coeff(int k) const {
    return k < int(coeffs_.size()) ? coeffs_[k] : Form::zero();
  }
  int t_degree() const;
  bool is_zero() const;

  void add(int k, const Form& f);
  TPolyForm operator+(const TPolyForm& o) const;
  TPolyForm operator*(const Rational& c) const;

  /// Substitute a rational value for t.
  Form at(const Rational& t) const;

 private:
  void trim();
  std::vector<Form> coeffs_;
};

TPolyForm wedge(const TPolyForm& a, const TPolyForm& b);

/// Exact integral over t in [0,1].
Form integrate_t(const TPolyForm& p);

/// Square matrix with entries in T (Form or TPolyForm), all sharing one
/// homogeneous degree (zero entries allowed).
template <class T>
class Matrix {
 public:
  Matrix(int n, int deg) : n_(n), deg_(deg), entries_(n * n) {}

  int n() const { return n_; }
  int degree() const { return deg_; }
  T& at(int i, int j) { return entries_[(i - 1) * n_ + (j - 1)]; }
  const T& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

  Matrix transpose() const {
    Matrix out(n_, deg_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) out.at(i, j) = at(j, i);
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_n(o);
    Matrix out(n_, deg_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
  }

  Matrix operator-(const Matrix& o) const { return *this + o * Rational(-1); }

  Matrix operator*(const Rational& c) const {
    Matrix out(n_, deg_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = entries_[k] * c;
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  void require_same_n(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  }

 private:
  int n_;
  int deg_;
  std::vector<T> entries_;
};

using MatrixForm = Matrix<Form>;
using MatrixTPoly = Matrix<TPolyForm>;

/// Entry (i,j) = sum_k A^i_k ^ B^k_j. Degrees add.
template <class T>
Matrix<T> matrix_wedge(const Matrix<T>& A, const Matrix<T>& B) {
  A.require_same_n(B);
  Matrix<T> out(A.n(), A.degree() + B.degree());
  for (int i = 1; i <= A.n(); ++i)
    for (int j = 1; j <= A.n(); ++j) {
      T acc{};
      for (int k = 1; k <= A.n(); ++k)
        acc = acc + wedge(A.at(i, k), B.at(k, j));
      out.at(i, j) = acc;
    }
  return out;
}

/// Graded commutator [A,B] = A^B - (-1)^{|A||B|} B^A.
template <class T>
Matrix<T> bracket(const Matrix<T>& A, const Matrix<T>& B) {
  int s = (A.degree() * B.degree()) % 2 ? -1 : 1;
  return matrix_wedge(A, B) - matrix_wedge(B, A) * Rational(s);
}

template <class T>
T trace(const Matrix<T>& A) {
  T acc{};
  for (int i = 1; i <= A.n(); ++i) acc = acc + A.at(i, i);
  return acc;
}

/// k-fold wedge power, k >= 1.
template <class T>
Matrix<T> wedge_power(const Matrix<T>& A, int k) {
  Matrix<T> out = A;
  for (int i = 1; i < k; ++i) out = matrix_wedge(out, A);
  return out;
}

/// Full polarization of tr(X^p) on matrix-valued forms:
///   (1/p!) sum_sigma eps(sigma) tr(X_{s(1)} ^ ... ^ X_{s(p)}),
/// eps the Koszul sign of reordering the graded arguments. This is the
/// convention under which the invariance identity for 1-form insertions
/// holds; the identity is property-tested.
template <class T>
T polarize(const std::vector<const Matrix<T>*>& args) {
  if (args.empty()) throw std::invalid_argument("polarize: empty argument list");
  const std::size_t p = args.size();
  std::vector<std::size_t> perm(p);
  for (std::size_t i = 0; i < p; ++i) perm[i] = i;
  T total{};
  do {
    int sign = 1;
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b)
        if (perm[a] > perm[b] &&
            (args[perm[a]]->degree() % 2) && (args[perm[b]]->degree() % 2))
          sign = -sign;
    Matrix<T> chain = *args[perm[0]];
    for (std::size_t k = 1; k < p; ++k)
      chain = matrix_wedge(chain, *args[perm[k]]);
    total = total + trace(chain) * Rational(sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total * Rational(Integer(1), factorial(int(p)));
}

}  // namespace gf
