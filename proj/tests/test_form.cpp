#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/char_table.hpp"
#include "gf/form.hpp"
#include "gf/matrix_form.hpp"
#include "gf/wn_complex.hpp"

#include <algorithm>
#include <random>

using namespace gf;

namespace {

Form c1(std::vector<int> J) { return Form::generator(GenId::c(1, std::move(J))); }

Rational coeff(const Form& f, const Monomial& m) {
  auto it = f.terms().find(m);
  return it == f.terms().end() ? Rational(0) : it->second;
}

// Brute-force Koszul sign: sort a generator sequence by adjacent swaps,
// counting transpositions. Independent of merge_monomials.
int brute_sign(std::vector<GenId> gens) {
  int sign = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j + 1 < gens.size() - i; ++j) {
      if (gens[j + 1] < gens[j]) {
        std::swap(gens[j], gens[j + 1]);
        sign = -sign;
      } else if (gens[j] == gens[j + 1]) {
        return 0;
      }
    }
  for (std::size_t j = 0; j + 1 < gens.size(); ++j)
    if (gens[j] == gens[j + 1]) return 0;
  return sign;
}

Form random_form(const WnComplex& wn, int degree, std::mt19937_64& rng) {
  auto gens = wn.generators(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> cf(1, 6);
  Form out;
  for (int t = 0; t < 3; ++t) {
    Monomial m;
    int guard = 0;
    while (int(m.size()) < degree && ++guard < 100) {
      GenId g = gens[pick(rng)];
      if (std::find(m.begin(), m.end(), g) == m.end()) m.push_back(g);
    }
    if (int(m.size()) < degree) continue;
    std::sort(m.begin(), m.end());
    int v = cf(rng);
    out.add_term(m, v <= 3 ? Rational(v) : Rational(3 - v));
  }
  return out;
}

}  // namespace

TEST_CASE("odd generators square to zero") {
  CHECK(wedge(c1({}), c1({})).is_zero());
  CHECK(wedge(c1({1}), wedge(c1({1, 1}), c1({1}))).is_zero());
}

TEST_CASE("degree-1 anticommutation") {
  Form a = c1({});
  Form b = c1({1});
  CHECK(wedge(a, b) == -wedge(b, a));
}

TEST_CASE("koszul sign of canonical reordering matches permutation parity") {
  GenId g1 = GenId::c(1, {2});
  GenId g2 = GenId::c(2, {});
  GenId g3 = GenId::c(1, {});
  Form w = wedge(wedge(Form::generator(g1), Form::generator(g2)), Form::generator(g3));
  REQUIRE(w.term_count() == 1);
  Monomial sorted{g1, g2, g3};
  std::sort(sorted.begin(), sorted.end());
  CHECK(coeff(w, sorted) == Rational(brute_sign({g1, g2, g3})));

  // a handful of random sequences, same oracle
  std::mt19937_64 rng(7);
  WnComplex wn(WnComplexConfig{3, 2});
  auto gens = wn.generators(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GenId> seq;
    for (int k = 0; k < 4; ++k) seq.push_back(gens[pick(rng)]);
    Form w2 = Form::scalar(1);
    for (const auto& g : seq) w2 = wedge(w2, Form::generator(g));
    int s = brute_sign(seq);
    if (s == 0) {
      CHECK(w2.is_zero());
    } else {
      Monomial m = seq;
      std::sort(m.begin(), m.end());
      CHECK(coeff(w2, m) == Rational(s));
    }
  }
}

TEST_CASE("graded commutativity on random homogeneous forms") {
  std::mt19937_64 rng(11);
  WnComplex wn(WnComplexConfig{3, 2});
  std::uniform_int_distribution<int> degd(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int da = degd(rng), db = degd(rng);
    Form a = random_form(wn, da, rng);
    Form b = random_form(wn, db, rng);
    int sign = (da * db) % 2 == 0 ? 1 : -1;
    CHECK((wedge(a, b) - wedge(b, a) * Rational(sign)).is_zero());
  }
}

TEST_CASE("wedge is associative and bilinear") {
  std::mt19937_64 rng(13);
  WnComplex wn(WnComplexConfig{2, 2});
  for (int trial = 0; trial < 25; ++trial) {
    Form a = random_form(wn, 1 + int(rng() % 2), rng);
    Form b = random_form(wn, 1 + int(rng() % 2), rng);
    Form c = random_form(wn, 1 + int(rng() % 2), rng);
    CHECK((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).is_zero());
    CHECK((wedge(a + b, c) - wedge(a, c) - wedge(b, c)).is_zero());
  }
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(17);
  WnComplex wn(WnComplexConfig{2, 2});
  for (int trial = 0; trial < 20; ++trial) {
    Form a = random_form(wn, 2, rng);
    Form rebuilt = Form::from_terms(a.terms());
    CHECK(rebuilt == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("antiderivation of the unit is zero") {
  WnComplex wn(WnComplexConfig{1, 2});
  CHECK(wn.table().apply(Form::scalar(1)).is_zero());
  CHECK(wn.table().apply(Form::scalar(Rational(5, 3))).is_zero());
}

TEST_CASE("antiderivation agrees with the generator table") {
  WnComplex wn(WnComplexConfig{1, 2});
  Form dc = wn.differential(c1({}));
  CHECK(dc == wedge(c1({1}), c1({})));
}

TEST_CASE("unknown generator raises") {
  Antiderivation d;
  d.set(GenId::c(1, {}), Form::zero());
  CHECK_THROWS_AS(d.apply(Form::generator(GenId::c(1, {1}))), UnknownGeneratorError);
}

TEST_CASE("graded Leibniz rule, exact, random pairs") {
  std::mt19937_64 rng(19);
  WnComplex wn(WnComplexConfig{2, 3});
  std::uniform_int_distribution<int> degd(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int da = degd(rng);
    Form a = random_form(wn, da, rng);
    Form b = random_form(wn, degd(rng), rng);
    Form lhs = wn.differential(wedge(a, b));
    int sign = da % 2 == 0 ? 1 : -1;
    Form rhs = wedge(wn.differential(a), b) + wedge(a, wn.differential(b)) * Rational(sign);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("d(c^1 ^ c^1_1) via Leibniz equals term-by-term expansion") {
  WnComplex wn(WnComplexConfig{1, 2});
  Form lhs = wn.differential(wedge(c1({}), c1({1})));
  Form rhs = wedge(wn.differential(c1({})), c1({1})) -
             wedge(c1({}), wn.differential(c1({1})));
  CHECK(lhs == rhs);
}

TEST_CASE("matrix wedge examples") {
  WnComplex w1(WnComplexConfig{1, 2});
  CharTable t1(1, 2);
  MatrixForm zero(1, 1);
  CHECK(matrix_wedge(t1.gamma(), zero).is_zero());
  CHECK(trace(matrix_wedge(t1.gamma(), t1.gamma())).is_zero());  // c^1_1 ^ c^1_1

  CharTable t2(2, 2);
  MatrixForm gg = matrix_wedge(t2.gamma(), t2.gamma());
  Form expect = wedge(Form::generator(GenId::c(1, {2})), Form::generator(GenId::c(2, {1})));
  CHECK(gg.at(1, 1) == expect);
  CHECK(trace(gg).is_zero());
}

TEST_CASE("bracket examples") {
  CharTable t2(2, 2);
  MatrixForm ps = t2.psi();
  CHECK(bracket(ps, ps).is_zero());  // even degree: A^A - A^A
  MatrixForm la = t2.lambda();
  MatrixForm ll = bracket(la, la);
  CHECK((ll - matrix_wedge(la, la) * Rational(2)).is_zero());  // odd: 2 lambda^lambda
}

TEST_CASE("trace symmetry of matrix products") {
  std::mt19937_64 rng(23);
  CharTable t2(2, 2);
  std::vector<const MatrixForm*> pool = {&t2.gamma(), &t2.lambda(), &t2.alpha(), &t2.psi()};
  for (int trial = 0; trial < 12; ++trial) {
    const MatrixForm& A = *pool[rng() % pool.size()];
    const MatrixForm& B = *pool[rng() % pool.size()];
    int sign = (A.degree() * B.degree()) % 2 == 0 ? 1 : -1;
    CHECK((trace(matrix_wedge(A, B)) - trace(matrix_wedge(B, A)) * Rational(sign)).is_zero());
  }
}

TEST_CASE("t-polynomial integration") {
  Form w = c1({1});
  CHECK(integrate_t(TPolyForm(w)) == w);
  CHECK(integrate_t(TPolyForm::monomial(1, w)) == w * Rational(1, 2));
  TPolyForm p = TPolyForm::monomial(1, w);
  p.add(2, -w);
  CHECK(integrate_t(p) == w * Rational(1, 6));  // 1/2 - 1/3
}

TEST_CASE("rendering is canonical") {
  Form f = wedge(c1({1, 1}), c1({})) * Rational(-1, 6);
  // canonical order puts c[1|] first, folding the sign into the coefficient
  CHECK(f.str() == "1/6 c[1|]^c[1|11]");
  CHECK(Form::zero().str() == "0");
  CHECK(Form::scalar(Rational(-2, 3)).str() == "-2/3");
  CHECK((c1({}) - c1({1})).str() == "1 c[1|] - 1 c[1|1]");
}
