#include "gf/char_table.hpp"

namespace gf {

CharTable::CharTable(int n, int order)
    : n_(n),
      wn_(std::make_shared<WnComplex>(WnComplexConfig{n, order})),
      gamma_(n, 1),
      psi_(n, 2),
      psi_t_(n, 2),
      lambda_(n, 1),
      alpha_(n, 1) {
  if (order < 2) throw std::invalid_argument("CharTable needs order >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gamma_.at(i, j) = wn_->c(i, {j});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Form acc;
      for (int k = 1; k <= n; ++k)
        acc = acc + wedge(wn_->c(i, {j, k}), wn_->c(k, {}));
      psi_.at(i, j) = acc;
    }
  psi_t_ = psi_.transpose();
  lambda_ = (gamma_ + gamma_.transpose()) * Rational(1, 2);
  alpha_ = (gamma_ - gamma_.transpose()) * Rational(1, 2);
}

Form CharTable::psi_p(int p) const {
  if (p < 1 || p > n_) throw std::invalid_argument("psi_p: p out of range");
  return trace(wedge_power(psi_, p));
}

Form CharTable::gamma_p(int p) const {
  if (p < 1 || p > n_) throw std::invalid_argument("gamma_p: p out of range");
  return trace(wedge_power(gamma_, 2 * p - 1));
}

Form CharTable::lambda_p(int p) const {
  if (p < 1 || p > n_) throw std::invalid_argument("lambda_p: p out of range");
  return trace(wedge_power(lambda_, 2 * p - 1));
}

MatrixTPoly CharTable::psi_interpolant() const {
  MatrixForm ll = bracket(lambda_, lambda_);
  MatrixTPoly out(n_, 2);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      TPolyForm e;
      e.add(0, psi_t_.at(i, j) * Rational(-1, 2));
      e.add(1, psi_.at(i, j) * Rational(1, 2) +
                   psi_t_.at(i, j) * Rational(1, 2) + ll.at(i, j));
      e.add(2, ll.at(i, j) * Rational(-1));
      out.at(i, j) = e;
    }
  return out;
}

Rational CharTable::lambda_cap_prefactor(int p) {
  Integer den = 1;
  for (int k = p + 1; k <= 2 * p + 1; ++k) den *= k;
  Integer num = Integer(p) * factorial(p);
  for (int k = 0; k < p - 1; ++k) num *= 2;
  return Rational(num, den);
}

Form CharTable::transgression_integral(int p) const {
  if (p % 2 == 0) throw std::invalid_argument("transgression needs odd p");
  if (p < 1 || p > n_) throw std::invalid_argument("transgression: p out of range");
  MatrixTPoly lam_t(n_, 1);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) lam_t.at(i, j) = TPolyForm(lambda_.at(i, j));
  MatrixTPoly psi_t_poly = psi_interpolant();
  std::vector<const MatrixTPoly*> args;
  args.push_back(&lam_t);
  for (int k = 1; k < p; ++k) args.push_back(&psi_t_poly);
  TPolyForm q = polarize(args);
  return integrate_t(q);
}

Form CharTable::lambda_cap_p(int p) const {
  return transgression_integral(p) * lambda_cap_prefactor(p);
}

std::optional<Rational> CharTable::proportionality(const Form& a, const Form& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const auto& [m0, c0] = *b.terms().begin();
  auto it = a.terms().find(m0);
  if (it == a.terms().end()) return a.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  Rational c = it->second / c0;
  if (!(a - b * c).is_zero()) return std::nullopt;
  return c;
}

Form CharTable::restrict_to_gl(const Form& a) {
  Form out;
  for (const auto& [m, c] : a.terms()) {
    bool keep = true;
    for (const auto& g : m)
      if (g.order != 1) {
        keep = false;
        break;
      }
    if (keep) out.add_term(m, c);
  }
  return out;
}

namespace {

MatrixForm d_matrix(const WnComplex& wn, const MatrixForm& A) {
  MatrixForm out(A.n(), A.degree() + 1);
  for (int i = 1; i <= A.n(); ++i)
    for (int j = 1; j <= A.n(); ++j) out.at(i, j) = wn.differential(A.at(i, j));
  return out;
}

std::string residual_str(const MatrixForm& R) {
  std::string s;
  for (int i = 1; i <= R.n(); ++i)
    for (int j = 1; j <= R.n(); ++j)
      if (!R.at(i, j).is_zero())
        s += "(" + std::to_string(i) + "," + std::to_string(j) + "): " +
             R.at(i, j).str() + "; ";
  return s;
}

}  // namespace

std::vector<IdentityResidual> verify_structure_identities(const CharTable& tbl) {
  const WnComplex& wn = tbl.complex();
  std::vector<IdentityResidual> out;

  auto record = [&](std::string name, const MatrixForm& residual) {
    bool ok = residual.is_zero();
    out.push_back({std::move(name), ok, ok ? "" : residual_str(residual)});
  };

  const MatrixForm& lam = tbl.lambda();
  const MatrixForm& alp = tbl.alpha();
  const MatrixForm& psi = tbl.psi();
  const MatrixForm& psit = tbl.psi_transposed();

  // d lambda = [alpha, lambda] + (Psi + Psi^T)/2
  record("d(lambda) = [alpha,lambda] + (Psi+Psi^T)/2",
         d_matrix(wn, lam) - (bracket(alp, lam) + (psi + psit) * Rational(1, 2)));

  // d Psi^T = -[lambda, Psi^T] + [alpha, Psi^T]
  record("d(Psi^T) = -[lambda,Psi^T] + [alpha,Psi^T]",
         d_matrix(wn, psit) -
             (bracket(lam, psit) * Rational(-1) + bracket(alp, psit)));

  // The printed identity for d Psi has an undefined symbol on its right
  // side; candidate readings are all checked and reported.
  MatrixForm dpsi = d_matrix(wn, psi);
  record("d(Psi) = [lambda,Psi] + [alpha,Psi]   (candidate: Omega = Psi)",
         dpsi - (bracket(lam, psi) + bracket(alp, psi)));
  record("d(Psi) = [lambda,Psi^T] + [alpha,Psi]   (candidate: Omega = Psi^T)",
         dpsi - (bracket(lam, psit) + bracket(alp, psi)));
  record("d(Psi) = -[lambda,Psi] + [alpha,Psi]   (candidate: Omega = -Psi)",
         dpsi - (bracket(lam, psi) * Rational(-1) + bracket(alp, psi)));
  record(
      "d(Psi) = [lambda,(Psi+Psi^T)/2] + [alpha,Psi]   (candidate: Omega = (Psi+Psi^T)/2)",
      dpsi - (bracket(lam, (psi + psit) * Rational(1, 2)) + bracket(alp, psi)));
  return out;
}

Form pinv_residual(const std::vector<const MatrixForm*>& args,
                   const MatrixForm& w) {
  if (w.degree() != 1)
    throw std::invalid_argument("pinv_residual: w must be a 1-form");
  Form total;
  for (std::size_t i = 0; i < args.size(); ++i) {
    MatrixForm inserted = bracket(w, *args[i]);
    std::vector<const MatrixForm*> mod = args;
    mod[i] = &inserted;
    int pre = 0;
    for (std::size_t k = 0; k < i; ++k) pre += args[k]->degree();
    int sign = ((pre + 1) % 2 == 0) ? 1 : -1;
    total = total + polarize(mod) * Rational(sign);
  }
  return total;
}

}  // namespace gf
