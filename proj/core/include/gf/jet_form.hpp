#pragma once

#include "gf/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  using ExpVec = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const Rational& c);

  static MPoly variable(int nvars, int v);
  static MPoly monomial(int nvars, ExpVec e, const Rational& c);

  int nvars() const { return nvars_; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;

  void add_term(const ExpVec& e, const Rational& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& c) const;
  bool operator==(const MPoly& o) const = default;

  MPoly derivative(int v) const;

  /// Exact division; nullopt when o does not divide *this.
  std::optional<MPoly> divide_exact(const MPoly& o) const;

  /// Componentwise min of all exponent vectors (the largest monomial
  /// dividing every term); zero vector for the zero polynomial.
  ExpVec content_monomial() const;
  MPoly divide_monomial(const ExpVec& m) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<ExpVec, Rational> terms_;
};

/// Rational function with monomial denominator: num / x^den. Closed under
/// ring operations and partial derivatives; only monomial-numerator elements
/// are invertible (all singular loci here are coordinate hyperplanes).
class RatFrac {
 public:
  RatFrac() = default;
  explicit RatFrac(MPoly num) : num_(std::move(num)), den_(num_.nvars(), 0) {
    normalize();
  }
  RatFrac(MPoly num, MPoly::ExpVec den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  /// Constant in a zero-variable context is not meaningful; scalar lifts go
  /// through with_vars.
  explicit RatFrac(const Rational& c) : num_(0, c), den_() {}

  static RatFrac constant(int nvars, const Rational& c) {
    return RatFrac(MPoly(nvars, c));
  }
  static RatFrac variable(int nvars, int v) {
    return RatFrac(MPoly::variable(nvars, v));
  }

  const MPoly& num() const { return num_; }
  const MPoly::ExpVec& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFrac operator+(const RatFrac& o) const;
  RatFrac operator-(const RatFrac& o) const;
  RatFrac operator-() const;
  RatFrac operator*(const RatFrac& o) const;
  bool operator==(const RatFrac& o) const;

  RatFrac derivative(int v) const;

  /// If *this == c * o for a rational constant c, return c.
  std::optional<Rational> proportionality(const RatFrac& o) const;

  std::string str(const std::vector<std::string>& names) const;

  friend RatFrac inv(const RatFrac& f);

 private:
  void normalize();
  void promote(int nvars);

  MPoly num_;
  MPoly::ExpVec den_;
};

bool is_zero(const RatFrac& f);
RatFrac inv(const RatFrac& f);

/// Exterior form on a coordinate patch with commuting coordinates x_0..x_{V-1}
/// and their differentials: RatFrac coefficients on strictly increasing
/// differential index sets.
class JetForm {
 public:
  using DxSet = std::vector<int>;

  JetForm() = default;
  explicit JetForm(int nvars) : nvars_(nvars) {}

  static JetForm coefficient(int nvars, RatFrac c);
  static JetForm dx(int nvars, int v);

  int nvars() const { return nvars_; }
  const std::map<DxSet, RatFrac>& terms() const { return terms_; }
  bool is_zero() const;

  void add_term(const DxSet& s, const RatFrac& c);

  JetForm operator+(const JetForm& o) const;
  JetForm operator-(const JetForm& o) const;
  JetForm operator*(const Rational& c) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<DxSet, RatFrac> terms_;
};

JetForm wedge(const JetForm& a, const JetForm& b);

/// Coordinate exterior derivative d(f dx_S) = sum_v df/dx_v dx_v ^ dx_S.
JetForm exterior_d(const JetForm& a);

}  // namespace gf
