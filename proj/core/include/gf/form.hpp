#pragma once

#include "gf/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

/// Identifies one odd generator of the free graded-commutative algebra.
///
/// Families:
///   C   the cochain generators c^i_{j1..jr} on formal vector fields
///   F   the generators f^i_{j1..jr} of the formal-forms bicomplex
///   DX  the formal 1-forms dx^i of the bicomplex
///   E   the exterior-factor generators e^i of the tensor target of mu
///
/// The lower index set is a sorted multiset. The total order on generators is
/// lexicographic in (family, order, upper, lower), which fixes the canonical
/// monomial form everywhere (golden outputs depend on it).
struct GenId {
  enum class Family : std::uint8_t { C = 0, F = 1, DX = 2, E = 3 };

  static constexpr int kMaxOrder = 12;

  Family family = Family::C;
  std::uint8_t upper = 1;                 // 1..n
  std::uint8_t order = 0;                 // = |lower|
  std::array<std::uint8_t, kMaxOrder> lower{};  // sorted ascending, zero-padded

  static GenId c(int i, std::vector<int> js);
  static GenId f(int i, std::vector<int> js);
  static GenId dx(int i);
  static GenId e(int i);

  auto operator<=>(const GenId&) const = default;

  std::vector<int> lower_vec() const;
  std::string str() const;
};

/// Monomial: strictly increasing generator list. Degree = length (all
/// generators are odd).
using Monomial = std::vector<GenId>;

struct UnknownGeneratorError : std::runtime_error {
  explicit UnknownGeneratorError(const GenId& g)
      : std::runtime_error("unknown generator " + g.str()) {}
};

/// Exact linear combination of monomials; always normalized (monomials sorted
/// with Koszul signs folded into coefficients, zero coefficients dropped).
/// Immutable value semantics; every operation returns a fresh Form.
class Form {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Form() = default;
  static Form zero() { return Form(); }
  static Form scalar(Rational c);
  static Form generator(const GenId& g);
  static Form from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_homogeneous() const;
  /// Degree of a homogeneous form; nullopt for 0 or mixed.
  std::optional<int> degree() const;
  /// Max generator order appearing in any monomial (cochain order); -1 for 0.
  int order() const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const Rational& c) const;
  bool operator==(const Form& o) const = default;

  void add_term(const Monomial& m, const Rational& c);

  std::string str() const;

 private:
  TermMap terms_;
};

inline Form operator*(const Rational& c, const Form& f) { return f * c; }

/// Exterior product. Bilinear, associative, graded-commutative.
Form wedge(const Form& a, const Form& b);

/// Merge a sorted generator list product; returns the Koszul sign, or 0 if a
/// generator repeats. `out` receives the canonical merged monomial.
int merge_monomials(const Monomial& a, const Monomial& b, Monomial& out);

/// Degree-1 antiderivation determined by its values on generators.
/// apply() satisfies the graded Leibniz rule exactly and throws
/// UnknownGeneratorError on a generator missing from the table.
class Antiderivation {
 public:
  void set(const GenId& g, Form value) { table_[g] = std::move(value); }
  bool knows(const GenId& g) const { return table_.count(g) != 0; }
  const Form& image(const GenId& g) const;

  Form apply(const Form& a) const;

 private:
  std::map<GenId, Form> table_;
};

}  // namespace gf
