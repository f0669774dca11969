#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/char_table.hpp"
#include "gf/checks.hpp"

using namespace gf;

namespace {

Form gen(int i, std::vector<int> J) { return Form::generator(GenId::c(i, std::move(J))); }

}  // namespace

TEST_CASE("psi and gamma at n = 1") {
  CharTable t(1, 3);
  CHECK(t.psi_p(1) == wedge(gen(1, {1, 1}), gen(1, {})));
  CHECK(t.gamma_p(1) == gen(1, {1}));
  CHECK(t.lambda_p(1) == gen(1, {1}));
  CHECK(trace(wedge_power(t.psi(), 1)) == t.psi_p(1));
  // psi ^ psi = 0 in one variable: no would-be Psi_2
  CHECK(matrix_wedge(t.psi(), t.psi()).is_zero());
  CHECK_THROWS_AS(t.psi_p(2), std::invalid_argument);
}

TEST_CASE("psi_1 at n = 2 is the double-index sum and is closed") {
  CharTable t(2, 3);
  Form expect;
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      expect = expect + wedge(gen(j, {j, k}), gen(k, {}));
  CHECK(t.psi_p(1) == expect);
  CHECK(t.complex().differential(t.psi_p(1)).is_zero());
}

TEST_CASE("d psi_p = 0 for all p <= n <= 3") {
  for (int n : {1, 2, 3}) {
    CharTable t(n, 3);
    for (int p = 1; p <= n; ++p)
      CHECK(t.complex().differential(t.psi_p(p)).is_zero());
  }
}

TEST_CASE("lambda_p vanishes for even p, survives for odd p") {
  CharTable t2(2, 3);
  CHECK(t2.lambda_p(2).is_zero());
  CHECK(t2.gamma_p(1) == gen(1, {1}) + gen(2, {2}));
  CharTable t3(3, 3);
  CHECK(t3.lambda_p(2).is_zero());
  CHECK(t3.lambda_p(3).term_count() == 24);  // nonzero: generates the top class
  CHECK_FALSE(t3.lambda_p(1).is_zero());
}

TEST_CASE("polarization basics") {
  CharTable t(2, 3);
  // p = 1: polarize = trace
  std::vector<const MatrixForm*> one = {&t.lambda()};
  CHECK(polarize(one) == t.lambda_p(1));
  // p = 2 on equal even arguments: tr(A ^ A)
  MatrixForm ps = t.psi();
  std::vector<const MatrixForm*> two = {&ps, &ps};
  CHECK(polarize(two) == trace(matrix_wedge(ps, ps)));
}

TEST_CASE("invariance identity for random substitutions, n = 2") {
  CharTable t(2, 3);
  const MatrixForm &ga = t.gamma(), &la = t.lambda(), &al = t.alpha(), &ps = t.psi();
  for (const MatrixForm* w : {&ga, &la, &al}) {
    std::vector<const MatrixForm*> args = {&la, &ps};
    CHECK(pinv_residual(args, *w).is_zero());
    std::vector<const MatrixForm*> args3 = {&ps, &la, &la};
    CHECK(pinv_residual(args3, *w).is_zero());
  }
}

TEST_CASE("curvature interpolant endpoints and t-degree") {
  CharTable t(2, 3);
  MatrixTPoly it = t.psi_interpolant();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(it.at(i, j).at(0) == t.psi_transposed().at(i, j) * Rational(-1, 2));
      CHECK(it.at(i, j).at(1) == t.psi().at(i, j) * Rational(1, 2));
    }
  // t-degree is 2 exactly where [lambda,lambda] is nonzero
  MatrixForm ll = bracket(t.lambda(), t.lambda());
  bool saw_deg2 = false;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (!ll.at(i, j).is_zero()) {
        CHECK(it.at(i, j).t_degree() == 2);
        saw_deg2 = true;
      }
    }
  CHECK(saw_deg2);
}

TEST_CASE("transgression at p = 1") {
  CharTable t(1, 3);
  CHECK(CharTable::lambda_cap_prefactor(1) == Rational(1, 6));
  CHECK(t.lambda_cap_p(1) == gen(1, {1}) * Rational(1, 6));
  Form d = t.complex().differential(t.lambda_cap_p(1));
  CHECK(d == t.psi_p(1) * Rational(1, 6));
  CHECK_THROWS_AS(t.lambda_cap_p(2), std::invalid_argument);
}

TEST_CASE("transgression constants, frozen") {
  // kappa_p and the gl-restriction constants; cross-checked against an
  // independent exact prototype before freezing.
  for (int n : {1, 2, 3}) {
    CharTable t(n, 3);
    Form cap = t.lambda_cap_p(1);
    auto kappa = CharTable::proportionality(t.complex().differential(cap), t.psi_p(1));
    REQUIRE(kappa.has_value());
    CHECK(*kappa == Rational(1, 6));
    auto rest = CharTable::proportionality(CharTable::restrict_to_gl(cap), t.lambda_p(1));
    REQUIRE(rest.has_value());
    CHECK(*rest == Rational(1, 6));
    auto rest_int = CharTable::proportionality(
        CharTable::restrict_to_gl(t.transgression_integral(1)), t.lambda_p(1));
    REQUIRE(rest_int.has_value());
    CHECK(*rest_int == Rational(1));
  }
  CharTable t3(3, 3);
  Form cap3 = t3.lambda_cap_p(3);
  CHECK(cap3.term_count() == 627);
  auto kappa3 = CharTable::proportionality(t3.complex().differential(cap3), t3.psi_p(3));
  REQUIRE(kappa3.has_value());
  CHECK(*kappa3 == Rational(1, 140));
  auto rest3 = CharTable::proportionality(CharTable::restrict_to_gl(cap3), t3.lambda_p(3));
  REQUIRE(rest3.has_value());
  CHECK(*rest3 == Rational(2, 175));
  auto rest_int3 = CharTable::proportionality(
      CharTable::restrict_to_gl(t3.transgression_integral(3)), t3.lambda_p(3));
  REQUIRE(rest_int3.has_value());
  CHECK(*rest_int3 == Rational(2, 15));
}

TEST_CASE("gl restriction on the interpolant: Psi(t) -> (t - t^2)[lambda,lambda]") {
  CharTable t(2, 3);
  MatrixTPoly it = t.psi_interpolant();
  MatrixForm ll = bracket(t.lambda(), t.lambda());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(CharTable::restrict_to_gl(it.at(i, j).at(0)).is_zero());
      CHECK(CharTable::restrict_to_gl(it.at(i, j).at(1)) ==
            CharTable::restrict_to_gl(ll.at(i, j)));
    }
}

TEST_CASE("structure identities") {
  for (int n : {1, 2}) {
    CharTable t(n, 3);
    auto ids = verify_structure_identities(t);
    bool dla = false, domt = false, om_psi = false;
    for (const auto& id : ids) {
      if (id.name.rfind("d(lambda)", 0) == 0) dla = id.holds;
      if (id.name.rfind("d(Psi^T)", 0) == 0) domt = id.holds;
      if (id.name.find("Omega = Psi)") != std::string::npos) om_psi = id.holds;
    }
    CHECK(dla);
    CHECK(domt);
    CHECK(om_psi);
  }
  // at n = 2 the readings separate: Omega = Psi^T and Omega = -Psi fail
  CharTable t2(2, 3);
  for (const auto& id : verify_structure_identities(t2)) {
    if (id.name.find("Omega = Psi^T") != std::string::npos) CHECK_FALSE(id.holds);
    if (id.name.find("Omega = -Psi") != std::string::npos) CHECK_FALSE(id.holds);
  }
}

TEST_CASE("full classes report is green for n = 1, 2") {
  for (int n : {1, 2}) {
    ClassesReport rep = check_classes(n);
    for (const auto& c : rep.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
}
