// exotic: tables of modified Kostka polynomials, Green functions and their checks.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "exotic/exotic.hpp"

namespace {

using namespace exotic;

struct RunConfig {
  int n = 1;
  std::string family = "exotic";
  int q = 3;
  std::string format = "json";
  std::string out;
  std::string suite = "all";
  long budget = kDefaultBudget;
};

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << payload;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

int cmd_kostka(const RunConfig& cfg) {
  Family f = parse_family(cfg.family);
  auto sol = modified_kostka(cfg.n, family_r(f));
  if (cfg.format == "json") emit(cfg, render_json(kostka_json(*sol)));
  else if (cfg.format == "csv") emit(cfg, write_csv(kostka_csv_tables(*sol)));
  else emit(cfg, matrix_latex(f, sol->labels, sol->P, "t"));
  return 0;
}

int cmd_omega(const RunConfig& cfg) {
  Family f = parse_family(cfg.family);
  OmegaMatrix om = omega_matrix(cfg.n, family_r(f));
  if (cfg.format == "json") emit(cfg, render_json(omega_json(om)));
  else if (cfg.format == "csv") emit(cfg, write_csv(omega_csv_tables(om)));
  else emit(cfg, matrix_latex(f, om.labels, om.entries, "t"));
  return 0;
}

int cmd_green(const RunConfig& cfg) {
  Family f = parse_family(cfg.family);
  GreenTable g = green_table(f, cfg.n);
  ICTable ic = ic_table(f, cfg.n);
  if (cfg.format == "json") emit(cfg, render_json(green_json(g, ic)));
  else if (cfg.format == "csv") emit(cfg, write_csv(green_csv_tables(g, ic)));
  else emit(cfg, green_latex(g));
  return 0;
}

Json report_json(const std::vector<SuiteResult>& results, bool& ok) {
  Json rep = Json::object();
  ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    rep[r.name] = Json{{"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}};
  }
  return rep;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<SuiteResult> results;
  if (cfg.suite == "all") {
    for (const auto& s : verify_suite_names()) results.push_back(run_verify_suite(s, cfg.n));
  } else {
    results.push_back(run_verify_suite(cfg.suite, cfg.n));
  }
  bool ok = false;
  Json rep{{"rank", cfg.n}, {"suites", report_json(results, ok)}, {"passed", false}};
  rep["passed"] = ok;
  emit(cfg, render_json(rep));
  return ok ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg) {
  SymplecticContext ctx = setup_symplectic(cfg.n, cfg.q);
  const std::string& s = cfg.suite;
  auto wants = [&](const std::string& name) { return s == "all" || s == name; };
  bool known = s == "all";
  for (const auto& name : oracle_suite_names()) known = known || s == name;
  if (!known) throw std::runtime_error("unknown oracle suite '" + s + "'");

  std::vector<SuiteResult> results;
  Json out{{"rank", cfg.n}, {"q", cfg.q}};
  if (wants("generators")) results.push_back(suite_generators(ctx));
  if (wants("orbits") || wants("split")) {
    OrbitCensus census = orbit_decompose(ctx, enumerate_exotic_cone(ctx, cfg.budget));
    out["census"] = census_json(census);
    if (wants("orbits")) results.push_back(suite_orbits(ctx, census));
    if (wants("split")) results.push_back(suite_split(ctx, census));
  }
  if (wants("slice")) results.push_back(suite_slice(cfg.n));
  if (wants("phi")) {
    SuiteResult r = suite_phi(ctx, cfg.budget);
    out["phi_count"] = phi_count(cfg.n, cfg.q).get_str();
    results.push_back(std::move(r));
  }
  bool ok = false;
  out["suites"] = report_json(results, ok);
  out["passed"] = ok;
  emit(cfg, render_json(out));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Kostka polynomials, Green functions and finite-field checks for the exotic nilpotent cone"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "exotic or symmetric")->check(CLI::IsMember({"exotic", "symmetric"}));
    sub->add_option("--format", cfg.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  };

  auto* kostka = app.add_subcommand("kostka", "modified Kostka table K~ and the diagonal Lambda");
  add_common(kostka);
  add_family(kostka);
  auto* omega = app.add_subcommand("omega", "the Omega matrix t^N R(chi chi' eps)");
  add_common(omega);
  add_family(omega);
  auto* green = app.add_subcommand("green", "Green function and IC stalk tables");
  add_common(green);
  add_family(green);

  auto* verify = app.add_subcommand("verify", "run identity suites; exit 0 iff all pass");
  add_common(verify);
  std::vector<std::string> vsuites = verify_suite_names();
  vsuites.push_back("all");
  verify->add_option("--suite", cfg.suite, "suite to run")->check(CLI::IsMember(vsuites));

  auto* oracle = app.add_subcommand("oracle", "finite-field brute force; exit 0 iff all checks agree");
  add_common(oracle);
  std::vector<std::string> osuites = oracle_suite_names();
  osuites.push_back("all");
  oracle->add_option("--q", cfg.q, "odd prime");
  oracle->add_option("--suite", cfg.suite, "suite to run")->check(CLI::IsMember(osuites));
  oracle->add_option("--budget", cfg.budget, "cap on enumerated points")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (kostka->parsed()) return cmd_kostka(cfg);
    if (omega->parsed()) return cmd_omega(cfg);
    if (green->parsed()) return cmd_green(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
