#include "gf/gk_form.hpp"

#include "gf/char_table.hpp"
#include "gf/jet.hpp"

namespace gf {

namespace {

// Variable layout: 0..R are x_0..x_R, R+1..2R+1 are the velocities v_0..v_R.
int velocity_var(int R, int i) { return R + 1 + i; }

// Drop the velocity variables from a purely-x rational function.
RatFrac restrict_to_x(const RatFrac& f, int R) {
  const int nv = R + 1;
  MPoly num(nv);
  for (const auto& [e, c] : f.num().terms()) {
    for (int k = nv; k < int(e.size()); ++k)
      if (e[k] != 0) throw std::logic_error("unexpected velocity dependence");
    MPoly::ExpVec xe(e.begin(), e.begin() + nv);
    num.add_term(xe, c);
  }
  MPoly::ExpVec den(f.den().begin(), f.den().begin() + nv);
  return RatFrac(std::move(num), std::move(den));
}

}  // namespace

std::vector<std::string> GkComponents::names() const {
  std::vector<std::string> out;
  for (int i = 0; i <= R; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

GkComponents gk_form_components(int R) {
  if (R < 2) throw std::invalid_argument("gk_form_components: R >= 2");
  const int nv = 2 * (R + 1);

  // k_0 shifted to its basepoint: coefficients (0, x_1, .., x_R).
  Jet1D<RatFrac> k0;
  k0.x.assign(R + 1, RatFrac::constant(nv, 0));
  for (int i = 1; i <= R; ++i) k0.x[i] = RatFrac::variable(nv, i);
  Jet1D<RatFrac> h = jet_invert(k0);

  // k_t - x_0 with velocity in the dual slot: (eps v_0, x_1 + eps v_1, ..).
  Jet1D<Dual<RatFrac>> kt;
  kt.x.assign(R + 1, Dual<RatFrac>{});
  kt.x[0] = Dual<RatFrac>{RatFrac::constant(nv, 0),
                          RatFrac::variable(nv, velocity_var(R, 0))};
  for (int i = 1; i <= R; ++i)
    kt.x[i] = Dual<RatFrac>{RatFrac::variable(nv, i),
                            RatFrac::variable(nv, velocity_var(R, i))};

  Jet1D<Dual<RatFrac>> F = jet_compose(kt, lift_dual(h));

  GkComponents gk;
  gk.R = R;
  for (int r = 0; r <= R; ++r) {
    // omega_r = - d/dt F_r; read off the linear v-dependence as a 1-form.
    const RatFrac& vel = F.x[r].du;
    JetForm w(R + 1);
    for (int i = 0; i <= R; ++i) {
      // coefficient of v_i
      MPoly coef(nv);
      for (const auto& [e, c] : vel.num().terms()) {
        int total_v = 0;
        for (int k = R + 1; k < nv; ++k) total_v += e[k];
        if (total_v != 1) throw std::logic_error("velocity part not linear");
        if (e[velocity_var(R, i)] != 1) continue;
        MPoly::ExpVec red = e;
        red[velocity_var(R, i)] = 0;
        coef.add_term(red, c);
      }
      RatFrac ci = restrict_to_x(RatFrac(std::move(coef), vel.den()), R);
      if (ci.is_zero()) continue;
      JetForm piece(R + 1);
      piece.add_term({i}, -ci);
      w = w + piece;
    }
    gk.omega.push_back(std::move(w));
  }
  return gk;
}

JetForm maurer_cartan_residual(const GkComponents& gk, int r) {
  if (r < 0 || r > gk.R - 1)
    throw std::invalid_argument("maurer_cartan_residual: need r <= R-1");
  JetForm res = exterior_d(gk.omega[r]);
  for (int a = 0; a <= r; ++a) {
    Rational c(binomial(r, a));
    res = res + wedge(gk.omega[a], gk.omega[r - a + 1]) * c;
  }
  return res;
}

JetForm alpha_realize(const GkComponents& gk, const Form& c) {
  JetForm out(gk.R + 1);
  for (const auto& [m, coef] : c.terms()) {
    JetForm prod = JetForm::coefficient(gk.R + 1,
                                        RatFrac::constant(gk.R + 1, coef));
    for (const auto& g : m) {
      if (g.family != GenId::Family::C || g.upper != 1)
        throw std::invalid_argument("alpha_realize: W_1 cochains only");
      if (g.order > gk.R)
        throw std::invalid_argument("alpha_realize: component order exceeds R");
      prod = wedge(prod, gk.omega[g.order]);
    }
    out = out + prod;
  }
  return out;
}

GvLocalReport gv_local_form(int R) {
  GvLocalReport rep;
  rep.R = R;
  GkComponents gk = gk_form_components(R);
  auto names = gk.names();

  rep.maurer_cartan_ok = true;
  for (int r = 0; r <= R - 1; ++r)
    if (!maurer_cartan_residual(gk, r).is_zero()) rep.maurer_cartan_ok = false;

  rep.denominators_x1_only = true;
  for (const auto& w : gk.omega)
    for (const auto& [s, c] : w.terms())
      for (std::size_t k = 0; k < c.den().size(); ++k)
        if (c.den()[k] != 0 && k != 1) rep.denominators_x1_only = false;

  CharTable tbl(1, 3);
  Form c11 = wedge(tbl.lambda_cap_p(1), tbl.psi_p(1));
  JetForm A = alpha_realize(gk, c11);
  rep.local_form = A.str(names);
  rep.closed = exterior_d(A).is_zero();

  const int nv = R + 1;
  auto x = [&](int i) { return RatFrac::variable(nv, i); };
  JetForm dy = JetForm::dx(nv, 0);
  // dy^1 = dx_1 / x_1
  JetForm dy1(nv);
  dy1.add_term({1}, inv(x(1)));

  struct Cand {
    std::string name;
    RatFrac y2;
  };
  std::vector<Cand> cands = {
      {"x2/x1", x(2) * inv(x(1))},
      {"x2/x1^2", x(2) * inv(x(1) * x(1))},
      {"x2/x0^2", x(2) * inv(x(0) * x(0))},
  };
  for (const auto& cand : cands) {
    JetForm dy2(nv);
    for (int v = 0; v < nv; ++v) {
      RatFrac dv = cand.y2.derivative(v);
      if (dv.is_zero()) continue;
      JetForm piece(nv);
      piece.add_term({v}, dv);
      dy2 = dy2 + piece;
    }
    JetForm B = wedge(dy, wedge(dy1, dy2));
    // componentwise proportionality with one shared rational constant
    std::optional<Rational> shared;
    bool ok = !B.is_zero();
    for (const auto& [s, cb] : B.terms()) {
      auto it = A.terms().find(s);
      if (it == A.terms().end()) {
        ok = false;
        break;
      }
      auto prop = it->second.proportionality(cb);
      if (!prop || (shared && *shared != *prop)) {
        ok = false;
        break;
      }
      shared = prop;
    }
    if (ok)
      for (const auto& [s, ca] : A.terms())
        if (B.terms().find(s) == B.terms().end()) ok = false;
    GvLocalCandidate out;
    out.name = cand.name;
    out.proportional = ok && shared && *shared != 0;
    if (out.proportional) {
      out.constant = to_string(*shared);
      rep.matched = cand.name;
      rep.matched_constant = out.constant;
    }
    rep.candidates.push_back(std::move(out));
  }
  return rep;
}

}  // namespace gf
