#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/checks.hpp"
#include "gf/vector_field.hpp"
#include "gf/wn_complex.hpp"

#include <random>

using namespace gf;

namespace {

FormalVectorField monomial_field(int n, int order, int comp, std::vector<int> exps,
                                 Rational c = 1) {
  FormalVectorField f(n, order);
  f.add_monomial(comp, exps, c);
  return f;
}

}  // namespace

TEST_CASE("generator differential, n = 1") {
  WnComplex wn(WnComplexConfig{1, 3});
  // d c^1 = c^1_1 ^ c^1
  CHECK(wn.generator_differential(1, {}) ==
        wedge(wn.c(1, {1}), wn.c(1, {})));
  // d c^1_1 = c^1_11 ^ c^1  (the middle term c^1_1 ^ c^1_1 vanishes)
  CHECK(wn.generator_differential(1, {1}) ==
        wedge(wn.c(1, {1, 1}), wn.c(1, {})));
  // d c^1_11 = c^1_111 ^ c^1 + c^1_11 ^ c^1_1, with multiplicity from the
  // repeated lower index
  Form d11 = wn.generator_differential(1, {1, 1});
  Form expect = wedge(wn.c(1, {1, 1, 1}), wn.c(1, {})) +
                wedge(wn.c(1, {1, 1}), wn.c(1, {1})) * Rational(2) +
                wedge(wn.c(1, {1}), wn.c(1, {1, 1}));
  CHECK(d11 == expect);
}

TEST_CASE("generator differential, n = 2") {
  WnComplex wn(WnComplexConfig{2, 2});
  CHECK(wn.generator_differential(1, {}) ==
        wedge(wn.c(1, {1}), wn.c(1, {})) + wedge(wn.c(1, {2}), wn.c(2, {})));
}

TEST_CASE("d^2 = 0 for every generator, n <= 3, r <= 3") {
  for (int n : {1, 2, 3}) {
    CheckResult r = check_d2(n, 3);
    CHECK(r.pass);
  }
}

TEST_CASE("truncation is an error, not a silent drop") {
  WnComplex wn(WnComplexConfig{1, 2});
  CHECK_THROWS_AS(wn.generator_differential(1, {1, 1, 1}), TruncationError);
  CHECK_THROWS_AS(wn.differential(wn.c(1, {1, 1, 1})), TruncationError);
  CHECK_THROWS_AS(wn.c(1, {1, 1, 1, 1}), TruncationError);
  CHECK_NOTHROW(wn.c(1, {1, 1, 1}));  // order R+1 exists: it is d-image territory
}

TEST_CASE("formal bracket examples") {
  const int n = 1, R = 3;
  auto dd = monomial_field(n, R, 1, {0});     // d/dx
  auto xd = monomial_field(n, R, 1, {1});     // x d/dx
  auto x2d = monomial_field(n, R, 1, {2});    // x^2 d/dx
  CHECK(formal_bracket(dd, xd) == dd);
  CHECK(formal_bracket(xd, xd) == FormalVectorField(n, R));
  CHECK(formal_bracket(x2d, xd) == monomial_field(n, R, 1, {2}, -1));
}

TEST_CASE("bracket truncates back to degree R+1") {
  const int n = 1, R = 1;
  auto a = monomial_field(n, R, 1, {2});  // x^2 d/dx, degree R+1
  auto b = monomial_field(n, R, 1, {2});
  CHECK(formal_bracket(a, b) == FormalVectorField(n, R));  // x^3 terms dropped
}

TEST_CASE("cochain evaluation examples") {
  const int n = 1, R = 2;
  WnComplex wn(WnComplexConfig{n, R});
  auto xd3 = monomial_field(n, R, 1, {1}, 3);  // 3x d/dx
  std::vector<FormalVectorField> one = {xd3};
  CHECK(evaluate_cochain(wn.c(1, {1}), one) == 3);

  auto dd = monomial_field(n, R, 1, {0});
  auto xd = monomial_field(n, R, 1, {1});
  Form m = wedge(wn.c(1, {}), wn.c(1, {1}));
  std::vector<FormalVectorField> same = {xd, xd};
  CHECK(evaluate_cochain(m, same) == 0);  // skew symmetry
  std::vector<FormalVectorField> pair = {dd, xd};
  CHECK(evaluate_cochain(m, pair) == 1);
  std::vector<FormalVectorField> swapped = {xd, dd};
  CHECK(evaluate_cochain(m, swapped) == -1);
}

TEST_CASE("arity mismatch raises") {
  WnComplex wn(WnComplexConfig{1, 2});
  auto xd = monomial_field(1, 2, 1, {1});
  std::vector<FormalVectorField> one = {xd};
  std::vector<FormalVectorField> two = {xd, xd};
  CHECK_THROWS_AS(evaluate_cochain(wn.c(1, {}), two), std::invalid_argument);
  CHECK_THROWS_AS(ce_differential_oracle(wn.c(1, {}), one), std::invalid_argument);
}

TEST_CASE("oracle on the degree-1 example") {
  const int n = 1, R = 3;
  WnComplex wn(WnComplexConfig{n, R});
  auto dd = monomial_field(n, R, 1, {0});
  auto xd = monomial_field(n, R, 1, {1});
  std::vector<FormalVectorField> fields = {dd, xd};
  Rational viaoracle = ce_differential_oracle(wn.c(1, {}), fields);
  CHECK(viaoracle == -1);
  CHECK(evaluate_cochain(wn.differential(wn.c(1, {})), fields) == viaoracle);
}

TEST_CASE("degree-0 cochains have zero differential") {
  const int n = 1, R = 2;
  auto xd = monomial_field(n, R, 1, {1});
  std::vector<FormalVectorField> one = {xd};
  CHECK(ce_differential_oracle(Form::scalar(Rational(7)), one) == 0);
}

TEST_CASE("randomized oracle equivalence") {
  for (int n : {1, 2}) {
    CheckResult r = check_oracle_equivalence(n, 60, 424242);
    CHECK(r.pass);
  }
}

TEST_CASE("evaluation is alternating under argument swaps") {
  std::mt19937_64 rng(31);
  const int n = 2, R = 2;
  WnComplex wn(WnComplexConfig{n, R});
  auto gens = wn.generators(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
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
    c.add_term(m, 1);
    std::vector<FormalVectorField> fs;
    for (int k = 0; k < 3; ++k) {
      FormalVectorField f(n, R);
      for (int mo = 0; mo < 3; ++mo) {
        std::vector<int> e(n, 0);
        int deg = int(rng() % (R + 2));
        for (int d = 0; d < deg; ++d) e[rng() % n] += 1;
        int v = 1 + int(rng() % 6);
        f.add_monomial(1 + int(rng() % n), e, v <= 3 ? Rational(v) : Rational(3 - v));
      }
      fs.push_back(f);
    }
    Rational base = evaluate_cochain(c, fs);
    std::swap(fs[0], fs[2]);
    CHECK(evaluate_cochain(c, fs) == -base);
  }
}
