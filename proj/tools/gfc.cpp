// gfc: symbolic and numeric verification of the characteristic cocycles of
// formal vector fields, their Vey bases, and the induced diffeomorphism-group
// cocycles.

#include "gf/checks.hpp"
#include "gf/formal_forms.hpp"
#include "gf/relative.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "gfc-report/1";

struct Output {
  bool as_json = false;
  json j;
  bool ok = true;

  Output() { j = json{{"schema", kSchema}, {"checks", json::array()}}; }

  void meta(const std::string& key, const json& v) { j[key] = v; }

  void check(const gf::CheckResult& r) {
    ok = ok && r.pass;
    j["checks"].push_back({{"name", r.name},
                           {"status", r.pass ? "pass" : "fail"},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
    if (!as_json) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << "  -- " << r.detail;
      std::cout << "\n";
    }
  }

  void text(const std::string& s) {
    if (!as_json) std::cout << s;
  }

  int done() {
    if (as_json) std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
};

void run_classes(Output& out, int n) {
  gf::ClassesReport rep = gf::check_classes(n);
  out.meta("command", "classes");
  out.meta("n", n);
  for (const auto& c : rep.checks) out.check(c);
  json constants = json::object();
  for (const auto& [p, k] : rep.kappa) {
    constants["kappa_" + std::to_string(p)] = k;
    out.text("kappa_" + std::to_string(p) + " = " + k +
             "   (d Lambda_p = kappa_p Psi_p)\n");
  }
  for (const auto& [p, k] : rep.restriction) {
    constants["gl_restriction_Lambda_" + std::to_string(p)] = k;
    out.text("Lambda_" + std::to_string(p) + "|gl = " + k + " * lambda_" +
             std::to_string(p) + "\n");
  }
  for (const auto& [p, k] : rep.restriction_integral) {
    constants["gl_restriction_integral_" + std::to_string(p)] = k;
    out.text("int_0^1 Q_" + std::to_string(p) + "(lambda,Psi(t)) dt |gl = " + k +
             " * lambda_" + std::to_string(p) + "\n");
  }
  out.meta("constants", constants);
  if (!rep.domega_reading.empty()) out.meta("dpsi_reading", rep.domega_reading);
}

void run_vey(Output& out, int n, std::optional<gf::IneqReading> ineq, bool tuples) {
  out.meta("command", "vey");
  out.meta("n", n);
  gf::VeyReport rep = gf::check_vey(n);
  auto table_json = [](const gf::DimensionTable& t) {
    json counts = json::object();
    for (const auto& [m, k] : t.counts) counts[std::to_string(m)] = k;
    return json{{"variant", t.variant == gf::VeyVariant::general ? "general" : "relative"},
                {"ineq", t.ineq == gf::IneqReading::le ? "le" : "ge"},
                {"counts", counts},
                {"range", {t.bound_lo, t.bound_hi}},
                {"bounds_respected", t.bounds_respected}};
  };
  json tables = json::array();
  auto emit = [&](const gf::DimensionTable& t) {
    tables.push_back(table_json(t));
    out.text(render(t, tuples));
  };
  if (!ineq || *ineq == gf::IneqReading::le) emit(rep.general_le);
  if (ineq && *ineq == gf::IneqReading::ge) emit(rep.general_ge);
  if (!ineq) {
    emit(rep.relative_ge);  // printed reading of the relative equation
    emit(rep.relative_le);
  } else {
    emit(*ineq == gf::IneqReading::le ? rep.relative_le : rep.relative_ge);
  }
  out.meta("tables", tables);
  for (const auto& c : rep.checks) out.check(c);
}

void run_gv_local(Output& out) {
  out.meta("command", "verify gv-local");
  gf::GvLocalReport rep = gf::gv_local_form(3);
  out.check({"Maurer-Cartan condition, components r <= R-1", rep.maurer_cartan_ok, "", 0});
  out.check({"denominators are powers of x_1 only", rep.denominators_x1_only, "", 0});
  out.check({"alpha(Lambda_1 ^ Psi_1) is closed", rep.closed, "", 0});
  out.text("alpha(Lambda_1 ^ Psi_1) = " + rep.local_form + "\n");
  json cands = json::array();
  for (const auto& cand : rep.candidates) {
    cands.push_back({{"y2", cand.name},
                     {"proportional", cand.proportional},
                     {"constant", cand.constant}});
    out.text("  y2 = " + cand.name + ": " +
             (cand.proportional ? "proportional, constant " + cand.constant
                                : "not proportional to dy^dy1^dy2") +
             "\n");
  }
  out.meta("candidates", cands);
  out.meta("local_form", rep.local_form);
  out.check({"some candidate matches with a nonzero rational constant",
             !rep.matched.empty(),
             rep.matched.empty() ? "" : ("y2 = " + rep.matched + ", constant " +
                                         rep.matched_constant),
             0});
}

void run_numeric(Output& out, const std::string& which, const json& spec) {
  gf::QuadratureConfig q;
  if (spec.contains("tol")) {
    q.abs_tol = spec["tol"].get<double>();
    q.rel_tol = q.abs_tol;
  }
  auto dom = which == "gv" ? gf::DiffeoDomain::line : gf::DiffeoDomain::circle;
  std::vector<gf::DiffeoExpr> ds;
  for (const auto& s : spec.at("diffeos"))
    ds.push_back(gf::parse_diffeo(s.get<std::string>(), dom));
  for (const auto& d : ds) {
    auto v = gf::validate(d, 256);
    if (!v.monotone)
      throw std::runtime_error("diffeo fails validation (min f' = " +
                               std::to_string(v.min_derivative) + ")");
  }
  gf::QuadResult r;
  if (which == "gv") {
    if (ds.size() != 3) throw std::runtime_error("gv needs three diffeos");
    double x = spec.value("basepoint", 0.0);
    r = gf::gv_cocycle(ds[0], ds[1], ds[2], x, q);
  } else {
    if (ds.size() != 2) throw std::runtime_error("bott needs two diffeos");
    r = gf::bott_cocycle(ds[0], ds[1], q);
  }
  out.meta("command", which);
  out.meta("value", r.value);
  out.meta("error_estimate", r.error_estimate);
  out.meta("subdivisions", r.subdivisions);
  out.text("value = " + std::to_string(r.value) +
           "  (error estimate " + std::to_string(r.error_estimate) + ", " +
           std::to_string(r.subdivisions) + " subdivisions)\n");
}

void run_suite(Output& out) {
  out.meta("command", "suite");
  for (int n : {1, 2, 3}) out.check(gf::check_d2(n, n == 3 ? 3 : 4));
  for (int n : {1, 2}) out.check(gf::check_oracle_equivalence(n, 100, 20240901));
  for (int n : {1, 2}) out.check(gf::check_bicomplex_d2(n, 3));
  for (int n : {1, 2}) out.check(gf::check_mu_chain_map(n, 3));
  for (int n : {1, 2, 3}) {
    gf::ClassesReport rep = gf::check_classes(n);
    for (const auto& c : rep.checks) out.check(c);
  }
  for (int n : {1, 2}) {
    gf::VeyReport rep = gf::check_vey(n);
    for (const auto& c : rep.checks) out.check(c);
  }
  out.check(gf::check_maurer_cartan(3));
  gf::GvLocalReport gv = gf::gv_local_form(3);
  out.check({"Example-1 local form matches a coordinate triple",
             gv.maurer_cartan_ok && gv.closed && !gv.matched.empty(),
             gv.matched.empty() ? "" : "y2 = " + gv.matched + ", constant " + gv.matched_constant,
             0});
  out.check(gf::check_parser_fd(100, 20240901));
  out.check(gf::check_circle_equivariance(20, 20240901));
  gf::NumericChecks nc;
  out.check(gf::check_gv_degeneracies(nc));
  out.check(gf::check_gv_coboundary(nc));
  out.check(gf::report_gv_basepoint(nc));
  out.check(gf::check_bott_degeneracies(nc));
  out.check(gf::check_bott_coboundary(nc));
  out.check(gf::check_bott_refinement(nc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic cocycles of formal vector fields: exact CE-complex "
               "verification and diffeomorphism-group cocycle evaluation"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report on stdout");

  // check d2
  auto* check = app.add_subcommand("check", "kernel self-checks");
  check->require_subcommand(1);
  auto* d2 = check->add_subcommand("d2", "verify d^2 = 0 on all generators");
  int d2_n = 1, d2_R = 3;
  d2->add_option("--n", d2_n, "number of formal variables")->default_val(1);
  d2->add_option("--order", d2_R, "jet truncation order R")->default_val(3);

  // classes
  auto* classes = app.add_subcommand(
      "classes", "build Psi_p, lambda_p, Lambda_p and verify their identities");
  int cl_n = 1;
  classes->add_option("--n", cl_n)->default_val(1);

  // vey
  auto* vey = app.add_subcommand("vey", "dimension tables of the basis monomials");
  int vey_n = 1;
  std::string vey_ineq;
  bool vey_tuples = false;
  vey->add_option("--n", vey_n)->default_val(1);
  vey->add_option("--ineq", vey_ineq, "p1-vs-r1 reading: le or ge (default: both)");
  vey->add_flag("--tuples", vey_tuples, "list the basis monomials per degree");

  // gv
  auto* gv = app.add_subcommand("gv", "evaluate the degree-3 cocycle on Diff(R)");
  std::string gv_f, gv_g, gv_h;
  double gv_x = 0;
  double gv_tol = 1e-9;
  gv->set_help_flag("--help", "print help");  // frees -h for the --h diffeo flag
  gv->add_option("--f", gv_f)->required();
  gv->add_option("--g", gv_g)->required();
  gv->add_option("--h", gv_h)->required();
  gv->add_option("--x", gv_x, "basepoint")->default_val(0.0);
  gv->add_option("--tol", gv_tol)->default_val(1e-9);

  // bott
  auto* bott = app.add_subcommand("bott", "evaluate the degree-2 cocycle on Diff+(S^1)");
  std::string bott_g1, bott_g2;
  double bott_tol = 1e-9;
  bott->add_option("--g1", bott_g1)->required();
  bott->add_option("--g2", bott_g2)->required();
  bott->add_option("--tol", bott_tol)->default_val(1e-9);

  // verify gv-local
  auto* verify = app.add_subcommand("verify", "symbolic verification reports");
  verify->require_subcommand(1);
  auto* gvlocal = verify->add_subcommand(
      "gv-local", "frame-space realization of Lambda_1 ^ Psi_1 vs dy^dy1^dy2");

  // job
  auto* job = app.add_subcommand("job", "run a JSON job file");
  std::string job_file;
  job->add_option("file", job_file, "job description")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "run every desk-scale check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Output out;
  out.as_json = as_json;
  try {
    if (d2->parsed()) {
      out.meta("command", "check d2");
      out.check(gf::check_d2(d2_n, d2_R));
    } else if (classes->parsed()) {
      run_classes(out, cl_n);
    } else if (vey->parsed()) {
      std::optional<gf::IneqReading> ineq;
      if (vey_ineq == "le") ineq = gf::IneqReading::le;
      else if (vey_ineq == "ge") ineq = gf::IneqReading::ge;
      else if (!vey_ineq.empty()) {
        std::cerr << "bad --ineq value, expected le or ge\n";
        return 2;
      }
      run_vey(out, vey_n, ineq, vey_tuples);
    } else if (gv->parsed()) {
      json spec{{"diffeos", {gv_f, gv_g, gv_h}}, {"basepoint", gv_x}, {"tol", gv_tol}};
      run_numeric(out, "gv", spec);
    } else if (bott->parsed()) {
      json spec{{"diffeos", {bott_g1, bott_g2}}, {"tol", bott_tol}};
      run_numeric(out, "bott", spec);
    } else if (gvlocal->parsed()) {
      run_gv_local(out);
    } else if (job->parsed()) {
      std::ifstream in(job_file);
      if (!in) {
        std::cerr << "cannot open " << job_file << "\n";
        return 2;
      }
      json spec = json::parse(in);
      run_numeric(out, spec.at("cocycle").get<std::string>(), spec);
      out.as_json = true;  // job results are machine-readable by contract
    } else if (suite->parsed()) {
      run_suite(out);
    }
  } catch (const gf::ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return out.done();
}
