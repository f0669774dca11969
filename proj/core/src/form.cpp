#include "gf/form.hpp"

#include <algorithm>
#include <sstream>

namespace gf {

namespace {

GenId make(GenId::Family fam, int i, std::vector<int> js) {
  if (js.size() > GenId::kMaxOrder)
    throw std::invalid_argument("generator order exceeds kMaxOrder");
  GenId g;
  g.family = fam;
  g.upper = static_cast<std::uint8_t>(i);
  g.order = static_cast<std::uint8_t>(js.size());
  std::sort(js.begin(), js.end());
  for (std::size_t k = 0; k < js.size(); ++k)
    g.lower[k] = static_cast<std::uint8_t>(js[k]);
  return g;
}

}  // namespace

GenId GenId::c(int i, std::vector<int> js) { return make(Family::C, i, std::move(js)); }
GenId GenId::f(int i, std::vector<int> js) { return make(Family::F, i, std::move(js)); }
GenId GenId::dx(int i) { return make(Family::DX, i, {}); }
GenId GenId::e(int i) { return make(Family::E, i, {}); }

std::vector<int> GenId::lower_vec() const {
  std::vector<int> out(order);
  for (int k = 0; k < order; ++k) out[k] = lower[k];
  return out;
}

std::string GenId::str() const {
  static const char* names[] = {"c", "f", "dx", "e"};
  std::string s = names[static_cast<int>(family)];
  s += '[';
  s += std::to_string(int(upper));
  if (family == Family::C || family == Family::F) {
    s += '|';
    for (int k = 0; k < order; ++k) s += std::to_string(int(lower[k]));
  }
  s += ']';
  return s;
}

Form Form::scalar(Rational c) {
  Form f;
  f.add_term({}, c);
  return f;
}

Form Form::generator(const GenId& g) {
  Form f;
  f.add_term({g}, 1);
  return f;
}

Form Form::from_terms(TermMap terms) {
  Form f;
  for (auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::size_t d = terms_.begin()->first.size();
  for (const auto& [m, c] : terms_)
    if (m.size() != d) return false;
  return true;
}

std::optional<int> Form::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return static_cast<int>(terms_.begin()->first.size());
}

int Form::order() const {
  int r = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& g : m) r = std::max(r, int(g.order));
  return r;
}

Form Form::operator+(const Form& o) const {
  Form out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Form Form::operator-(const Form& o) const {
  Form out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Form Form::operator-() const { return *this * Rational(-1); }

Form Form::operator*(const Rational& c) const {
  Form out;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

int merge_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;  // odd generator squares to zero
    if (a[ia] < b[ib]) {
      out.push_back(a[ia++]);
    } else {
      // b[ib] passes the remaining |a|-ia odd generators
      if ((a.size() - ia) % 2 == 1) sign = -sign;
      out.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  return sign;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  Monomial merged;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = merge_monomials(ma, mb, merged);
      if (sign == 0) continue;
      Rational c = ca * cb;
      out.add_term(merged, sign < 0 ? Rational(-c) : c);
    }
  }
  return out;
}

const Form& Antiderivation::image(const GenId& g) const {
  auto it = table_.find(g);
  if (it == table_.end()) throw UnknownGeneratorError(g);
  return it->second;
}

Form Antiderivation::apply(const Form& a) const {
  Form out;
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      const Form& dg = image(m[k]);
      if (dg.is_zero()) continue;
      Monomial prefix(m.begin(), m.begin() + k);
      Monomial suffix(m.begin() + k + 1, m.end());
      Rational coef = (k % 2 == 0) ? c : -c;
      Form piece = wedge(Form::from_terms({{prefix, 1}}),
                         wedge(dg, Form::from_terms({{suffix, 1}})));
      out = out + piece * coef;
    }
  }
  return out;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    os << a;
    for (const auto& g : m) os << (&g == &m.front() ? " " : "^") << g.str();
  }
  return os.str();
}

}  // namespace gf
