#include "gf/matrix_form.hpp"

namespace gf {

TPolyForm TPolyForm::monomial(int k, Form f) {
  TPolyForm p;
  p.coeffs_.resize(k + 1);
  p.coeffs_[k] = std::move(f);
  p.trim();
  return p;
}

int TPolyForm::t_degree() const {
  for (int k = int(coeffs_.size()) - 1; k >= 0; --k)
    if (!coeffs_[k].is_zero()) return k;
  return -1;
}

bool TPolyForm::is_zero() const { return t_degree() < 0; }

void TPolyForm::add(int k, const Form& f) {
  if (int(coeffs_.size()) <= k) coeffs_.resize(k + 1);
  coeffs_[k] = coeffs_[k] + f;
  trim();
}

TPolyForm TPolyForm::operator+(const TPolyForm& o) const {
  TPolyForm out = *this;
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    out.add(int(k), o.coeffs_[k]);
  return out;
}

TPolyForm TPolyForm::operator*(const Rational& c) const {
  TPolyForm out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& f : coeffs_) out.coeffs_.push_back(f * c);
  out.trim();
  return out;
}

Form TPolyForm::at(const Rational& t) const {
  Form out;
  Rational tk = 1;
  for (const auto& f : coeffs_) {
    out = out + f * tk;
    tk *= t;
  }
  return out;
}

void TPolyForm::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPolyForm wedge(const TPolyForm& a, const TPolyForm& b) {
  TPolyForm out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      out.add(int(i + j), wedge(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return out;
}

Form integrate_t(const TPolyForm& p) {
  Form out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out = out + p.coeffs()[k] * Rational(Integer(1), Integer(k + 1));
  return out;
}

}  // namespace gf
