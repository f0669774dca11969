#include "gf/jet_form.hpp"

#include "gf/jet.hpp"

#include <algorithm>
#include <sstream>

namespace gf {

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
  add_term(ExpVec(nvars, 0), c);
}

MPoly MPoly::variable(int nvars, int v) {
  ExpVec e(nvars, 0);
  e.at(v) = 1;
  return monomial(nvars, std::move(e), 1);
}

MPoly MPoly::monomial(int nvars, ExpVec e, const Rational& c) {
  MPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k != 0) return false;
  return true;
}

std::optional<Rational> MPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  if (int(e.size()) != nvars_) throw std::invalid_argument("MPoly: exponent arity");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MPoly MPoly::operator-() const { return *this * Rational(-1); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

MPoly MPoly::derivative(int v) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    ExpVec d = e;
    d[v] -= 1;
    out.add_term(d, c * e[v]);
  }
  return out;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  MPoly rem = *this;
  MPoly quot(nvars_);
  const auto& [lead_e, lead_c] = *o.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    ExpVec q(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      q[k] = re[k] - lead_e[k];
      if (q[k] < 0) return std::nullopt;
    }
    Rational qc = rc / lead_c;
    MPoly t = MPoly::monomial(nvars_, q, qc);
    quot = quot + t;
    rem = rem - t * o;
  }
  return quot;
}

MPoly::ExpVec MPoly::content_monomial() const {
  ExpVec m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int k = 0; k < nvars_; ++k) m[k] = std::min(m[k], e[k]);
    }
  }
  return m;
}

MPoly MPoly::divide_monomial(const ExpVec& m) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    for (int k = 0; k < nvars_; ++k) {
      d[k] -= m[k];
      if (d[k] < 0) throw std::invalid_argument("divide_monomial: not divisible");
    }
    out.add_term(d, c);
  }
  return out;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool unit = (a == 1);
    bool any = false;
    std::ostringstream vars;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (any) vars << "*";
      any = true;
      vars << names.at(k);
      if (e[k] > 1) vars << "^" << e[k];
    }
    if (!any || !unit) os << a;
    if (any && !unit) os << "*";
    os << vars.str();
  }
  return os.str();
}

void RatFrac::normalize() {
  if (num_.is_zero()) {
    den_.assign(num_.nvars(), 0);
    return;
  }
  if (den_.empty()) den_.assign(num_.nvars(), 0);
  auto content = num_.content_monomial();
  MPoly::ExpVec cancel(num_.nvars(), 0);
  bool any = false;
  for (int k = 0; k < num_.nvars(); ++k) {
    cancel[k] = std::min(content[k], den_[k]);
    if (cancel[k] > 0) any = true;
  }
  if (any) {
    num_ = num_.divide_monomial(cancel);
    for (int k = 0; k < num_.nvars(); ++k) den_[k] -= cancel[k];
  }
}

void RatFrac::promote(int nvars) {
  if (num_.nvars() == nvars) return;
  if (!num_.is_constant() || num_.nvars() != 0)
    throw std::invalid_argument("RatFrac: mixed variable contexts");
  Rational c = num_.constant_value().value_or(0);
  num_ = MPoly(nvars, c);
  den_.assign(nvars, 0);
}

RatFrac RatFrac::operator+(const RatFrac& o) const {
  RatFrac a = *this, b = o;
  if (a.num_.nvars() != b.num_.nvars()) {
    int nv = std::max(a.num_.nvars(), b.num_.nvars());
    a.promote(nv);
    b.promote(nv);
  }
  const int nv = a.num_.nvars();
  MPoly::ExpVec den(nv), ma(nv), mb(nv);
  for (int k = 0; k < nv; ++k) {
    den[k] = std::max(a.den_[k], b.den_[k]);
    ma[k] = den[k] - a.den_[k];
    mb[k] = den[k] - b.den_[k];
  }
  MPoly num = a.num_ * MPoly::monomial(nv, ma, 1) + b.num_ * MPoly::monomial(nv, mb, 1);
  return RatFrac(std::move(num), std::move(den));
}

RatFrac RatFrac::operator-(const RatFrac& o) const { return *this + (-o); }

RatFrac RatFrac::operator-() const {
  RatFrac out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFrac RatFrac::operator*(const RatFrac& o) const {
  RatFrac a = *this, b = o;
  if (a.num_.nvars() != b.num_.nvars()) {
    int nv = std::max(a.num_.nvars(), b.num_.nvars());
    a.promote(nv);
    b.promote(nv);
  }
  MPoly::ExpVec den(a.num_.nvars());
  for (std::size_t k = 0; k < den.size(); ++k) den[k] = a.den_[k] + b.den_[k];
  return RatFrac(a.num_ * b.num_, std::move(den));
}

bool RatFrac::operator==(const RatFrac& o) const {
  return (*this - o).is_zero();
}

RatFrac RatFrac::derivative(int v) const {
  // d/dx_v (num / x^den) = num' / x^den - den_v * num / x^{den + e_v}
  const int nv = num_.nvars();
  RatFrac d1(num_.derivative(v), den_);
  if (den_[v] == 0) return d1;
  MPoly::ExpVec den2 = den_;
  den2[v] += 1;
  RatFrac d2(num_ * Rational(-den_[v]), std::move(den2));
  return d1 + d2;
}

std::optional<Rational> RatFrac::proportionality(const RatFrac& o) const {
  if (o.is_zero()) return is_zero() ? std::optional<Rational>(0) : std::nullopt;
  if (is_zero()) return Rational(0);
  RatFrac a = *this, b = o;
  int nv = std::max(a.num_.nvars(), b.num_.nvars());
  a.promote(nv);
  b.promote(nv);
  // this/o = (a.num * x^b.den) / (b.num * x^a.den)
  MPoly p = a.num_ * MPoly::monomial(nv, b.den_, 1);
  MPoly q = b.num_ * MPoly::monomial(nv, a.den_, 1);
  auto ratio = p.divide_exact(q);
  if (!ratio) return std::nullopt;
  return ratio->constant_value();
}

std::string RatFrac::str(const std::vector<std::string>& names) const {
  std::string s = num_.str(names);
  bool denom = false;
  for (int d : den_)
    if (d > 0) denom = true;
  if (!denom) return s;
  std::ostringstream os;
  os << "(" << s << ")/(";
  bool any = false;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (den_[k] == 0) continue;
    if (any) os << "*";
    any = true;
    os << names.at(k);
    if (den_[k] > 1) os << "^" << den_[k];
  }
  os << ")";
  return os.str();
}

bool is_zero(const RatFrac& f) { return f.is_zero(); }

RatFrac inv(const RatFrac& f) {
  // invertible iff the numerator is a single monomial
  if (f.num().terms().size() != 1)
    throw SingularJetError("RatFrac: only monomial numerators are invertible");
  const auto& [e, c] = *f.num().terms().begin();
  MPoly num = MPoly::monomial(f.num().nvars(), f.den(), 1 / c);
  return RatFrac(std::move(num), e);
}

JetForm JetForm::coefficient(int nvars, RatFrac c) {
  JetForm f(nvars);
  f.add_term({}, c);
  return f;
}

JetForm JetForm::dx(int nvars, int v) {
  JetForm f(nvars);
  f.add_term({v}, RatFrac::constant(nvars, 1));
  return f;
}

bool JetForm::is_zero() const {
  for (const auto& [s, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

void JetForm::add_term(const DxSet& s, const RatFrac& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

JetForm JetForm::operator+(const JetForm& o) const {
  JetForm out = *this;
  out.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [s, c] : o.terms_) out.add_term(s, c);
  return out;
}

JetForm JetForm::operator-(const JetForm& o) const {
  JetForm out = *this;
  out.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [s, c] : o.terms_) out.add_term(s, -c);
  return out;
}

JetForm JetForm::operator*(const Rational& c) const {
  JetForm out(nvars_);
  for (const auto& [s, v] : terms_)
    out.add_term(s, v * RatFrac::constant(nvars_, c));
  return out;
}

JetForm wedge(const JetForm& a, const JetForm& b) {
  JetForm out(std::max(a.nvars(), b.nvars()));
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      // merge strictly increasing index sets with parity sign
      JetForm::DxSet merged;
      merged.reserve(sa.size() + sb.size());
      int sign = 1;
      std::size_t ia = 0, ib = 0;
      bool dup = false;
      while (ia < sa.size() && ib < sb.size()) {
        if (sa[ia] == sb[ib]) {
          dup = true;
          break;
        }
        if (sa[ia] < sb[ib]) {
          merged.push_back(sa[ia++]);
        } else {
          if ((sa.size() - ia) % 2 == 1) sign = -sign;
          merged.push_back(sb[ib++]);
        }
      }
      if (dup) continue;
      while (ia < sa.size()) merged.push_back(sa[ia++]);
      while (ib < sb.size()) merged.push_back(sb[ib++]);
      RatFrac c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(merged, c);
    }
  }
  return out;
}

JetForm exterior_d(const JetForm& a) {
  JetForm out(a.nvars());
  for (const auto& [s, c] : a.terms()) {
    for (int v = 0; v < a.nvars(); ++v) {
      RatFrac dc = c.derivative(v);
      if (dc.is_zero()) continue;
      JetForm piece(a.nvars());
      piece.add_term(s, dc);
      out = out + wedge(JetForm::dx(a.nvars(), v), piece);
    }
  }
  return out;
}

std::string JetForm::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(names) << ")";
    for (int v : s) os << " d" << names.at(v);
  }
  return os.str();
}

}  // namespace gf
