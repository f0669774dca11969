#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/checks.hpp"
#include "gf/formal_forms.hpp"

using namespace gf;

TEST_CASE("bicomplex differential on the lowest generators, n = 1") {
  FormalFormsComplex ff(WnComplexConfig{1, 3});
  // D(dx^1) = f^1_1 ^ dx^1
  CHECK(ff.generator_differential(GenId::dx(1)) ==
        wedge(ff.f(1, {1}), ff.dx(1)));
  // D f^1 = -f^1_1 ^ dx^1 (the position-subset sum is empty at r = 0)
  CHECK(ff.generator_differential(GenId::f(1, {})) ==
        wedge(ff.f(1, {1}), ff.dx(1)) * Rational(-1));
  // D o D (dx^1) = 0
  CHECK(ff.differential(ff.generator_differential(GenId::dx(1))).is_zero());
}

TEST_CASE("D^2 = 0 on all generators, n <= 2, r <= 3") {
  for (int n : {1, 2}) CHECK(check_bicomplex_d2(n, 3).pass);
}

TEST_CASE("mu on generators") {
  FormalFormsComplex ff(WnComplexConfig{1, 3});
  CHECK(ff.mu(ff.f(1, {})) ==
        Form::generator(GenId::e(1)) + Form::generator(GenId::c(1, {})));
  CHECK(ff.mu(ff.f(1, {1})) == Form::generator(GenId::c(1, {1})));
  CHECK(ff.mu(ff.dx(1)) == -Form::generator(GenId::c(1, {})));
  // multiplicativity: mu(dx^1 ^ f^1_1) = -c^1 ^ c^1_1
  CHECK(ff.mu(wedge(ff.dx(1), ff.f(1, {1}))) ==
        wedge(Form::generator(GenId::c(1, {})),
              Form::generator(GenId::c(1, {1}))) * Rational(-1));
}

TEST_CASE("mu is a chain map and bijective on generators, n <= 2") {
  for (int n : {1, 2}) CHECK(check_mu_chain_map(n, 3).pass);
}

TEST_CASE("mu chain map on f^1 explicitly") {
  FormalFormsComplex ff(WnComplexConfig{1, 3});
  Form lhs = ff.mu(ff.generator_differential(GenId::f(1, {})));
  Form rhs = ff.target_differential(ff.mu(ff.f(1, {})));
  CHECK(lhs == rhs);
}

TEST_CASE("order of a bicomplex cochain") {
  FormalFormsComplex ff(WnComplexConfig{2, 3});
  Form a = wedge(ff.f(1, {1, 2}), ff.dx(2));
  Form b = ff.f(2, {1});
  CHECK(bicomplex_order(a) == 2);
  CHECK(bicomplex_order(b) == 1);
  CHECK(bicomplex_order(Form::zero()) == -1);
  CHECK(bicomplex_order(ff.dx(1)) == -1);  // no f-generators at all
  // ord(a + b) <= max(ord a, ord b), with equality here
  CHECK(bicomplex_order(a + b) == 2);
}

TEST_CASE("truncation and family errors") {
  FormalFormsComplex ff(WnComplexConfig{1, 1});
  CHECK_THROWS_AS(ff.generator_differential(GenId::f(1, {1, 1})), TruncationError);
  CHECK_THROWS_AS(ff.generator_differential(GenId::c(1, {})), std::invalid_argument);
  CHECK_THROWS_AS(ff.mu(Form::generator(GenId::c(1, {}))), std::invalid_argument);
}
