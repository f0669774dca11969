#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/char_table.hpp"
#include "gf/relative.hpp"

#include <random>

using namespace gf;

namespace {

Form gen(int i, std::vector<int> J) { return Form::generator(GenId::c(i, std::move(J))); }

FormalVectorField x_ddx(int n = 1, int R = 3) {
  FormalVectorField f(n, R);
  std::vector<int> e(n, 0);
  e[0] = 1;
  f.add_monomial(1, e, 1);
  return f;
}

}  // namespace

TEST_CASE("contraction examples") {
  FormalVectorField xd = x_ddx();
  CHECK(contract(gen(1, {}), xd).is_zero());
  CHECK(contract(gen(1, {1}), xd) == Form::scalar(1));
  CHECK(contract(wedge(gen(1, {}), gen(1, {1})), xd) == -gen(1, {}));
  CHECK(contract(Form::scalar(Rational(3)), xd).is_zero());  // degree 0 -> 0
}

TEST_CASE("lie derivative examples") {
  WnComplex wn(WnComplexConfig{1, 3});
  FormalVectorField xd = x_ddx();
  CHECK(lie_derivative(wn, gen(1, {}), xd) == gen(1, {}));
  CHECK(lie_derivative(wn, Form::scalar(1), xd).is_zero());
}

TEST_CASE("lie derivative of Psi_1 along gl vanishes, n = 2") {
  CharTable t(2, 3);
  for (const auto& X : LinearFieldBasis::gl(2, 3).elements)
    CHECK(lie_derivative(t.complex(), t.psi_p(1), X).is_zero());
}

TEST_CASE("relativity verdicts") {
  CharTable t1(1, 3);
  LinearFieldBasis gl1 = LinearFieldBasis::gl(1, 3);
  CHECK(is_relative(t1.complex(), t1.psi_p(1), gl1).relative);
  auto bad = is_relative(t1.complex(), gen(1, {}), gl1);
  CHECK_FALSE(bad.relative);
  CHECK_FALSE(bad.failures.empty());

  CharTable t2(2, 3);
  LinearFieldBasis gl2 = LinearFieldBasis::gl(2, 3);
  LinearFieldBasis so2 = LinearFieldBasis::so(2, 3);
  CHECK(so2.elements.size() == 1);
  CHECK(gl2.elements.size() == 4);
  for (int p = 1; p <= 2; ++p)
    CHECK(is_relative(t2.complex(), t2.psi_p(p), gl2).relative);
  CHECK(is_relative(t2.complex(), t2.lambda_cap_p(1), so2).relative);
  // gamma_1 is so-invariant but not horizontal for gl; Lambda_1 is not
  // gl-relative (contraction with the symmetric part survives)
  CHECK_FALSE(is_relative(t2.complex(), t2.lambda_cap_p(1), gl2).relative);
}

TEST_CASE("double contraction anticommutes") {
  std::mt19937_64 rng(47);
  const int n = 2, R = 2;
  WnComplex wn(WnComplexConfig{n, R});
  auto gens = wn.generators(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  LinearFieldBasis gl = LinearFieldBasis::gl(n, R);
  for (int trial = 0; trial < 20; ++trial) {
    Monomial m;
    while (m.size() < 3) {
      GenId g = gens[pick(rng)];
      bool dup = false;
      for (auto& h : m) dup = dup || h == g;
      if (!dup) m.push_back(g);
    }
    std::sort(m.begin(), m.end());
    Form c;
    c.add_term(m, 1 + int(rng() % 3));
    const auto& X = gl.elements[rng() % gl.elements.size()];
    const auto& Y = gl.elements[rng() % gl.elements.size()];
    CHECK((contract(contract(c, X), Y) + contract(contract(c, Y), X)).is_zero());
  }
}

TEST_CASE("lie derivative commutes with d") {
  std::mt19937_64 rng(53);
  const int n = 2;
  WnComplex wn(WnComplexConfig{n, 3});
  auto gens = wn.generators(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  LinearFieldBasis gl = LinearFieldBasis::gl(n, 3);
  for (int trial = 0; trial < 15; ++trial) {
    Monomial m;
    while (m.size() < 2) {
      GenId g = gens[pick(rng)];
      bool dup = false;
      for (auto& h : m) dup = dup || h == g;
      if (!dup) m.push_back(g);
    }
    std::sort(m.begin(), m.end());
    Form c;
    c.add_term(m, 1);
    const auto& X = gl.elements[rng() % gl.elements.size()];
    Form lhs = lie_derivative(wn, wn.differential(c), X);
    Form rhs = wn.differential(lie_derivative(wn, c, X));
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("sign flip on n = 1 generators") {
  // c^1_{1..1 (r)} picks up (-1)^{r+1}
  CHECK(sign_flip(gen(1, {})) == -gen(1, {}));
  CHECK(sign_flip(gen(1, {1})) == gen(1, {1}));
  CHECK(sign_flip(gen(1, {1, 1})) == -gen(1, {1, 1}));
  // the Godbillon-Vey representative is flip-invariant
  CharTable t(1, 3);
  Form c11 = wedge(t.lambda_cap_p(1), t.psi_p(1));
  CHECK(sign_flip(c11) == c11);
  // a non-invariant example
  Form odd = wedge(gen(1, {}), gen(1, {1}));
  CHECK(sign_flip(odd) == -odd);
}
