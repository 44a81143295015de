#include "heisenberg/cantor.hpp"
#include "heisenberg/chain.hpp"
#include "heisenberg/commands.hpp"
#include "heisenberg/verify.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fstream>
#include <iostream>

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rumin complex and currents on Heisenberg groups"};
  app.require_subcommand(1);

  int n = 1;
  bool csv = false;
  auto* tables = app.add_subcommand("tables", "dimensions of Lambda^h and E0^h per degree");
  tables->add_option("-n,--n", n, "group rank")->check(CLI::Range(1, 4));
  tables->add_flag("--csv", csv, "CSV output");

  heis::VerifyOptions vopt;
  bool json = false;
  bool no_currents = false;
  auto* verify = app.add_subcommand("verify", "run the exact identity suite");
  verify->add_option("-n,--n", vopt.n, "group rank")->check(CLI::Range(1, 4));
  verify->add_option("--degree-bound", vopt.degree_bound, "coefficient degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--instances", vopt.instances, "random instances per identity")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON conformance report");
  verify->add_flag("--no-currents", no_currents, "skip the rows on currents");
  verify->add_flag("--corrupt-dtheta-sign", vopt.build.corrupt_dtheta_sign, "negative control: flip dtheta inside d0");

  std::string config;
  heis::MassFlags mflags;
  int order = 0;
  auto* mass = app.add_subcommand("mass", "masses of a chain given by a JSON config");
  mass->add_option("config", config, "chain configuration")->required();
  mass->add_flag("--oblique", mflags.oblique, "oblique mass");
  mass->add_flag("--rumin", mflags.rumin, "Rumin mass");
  mass->add_flag("--csv", mflags.csv, "CSV output");
  mass->add_option("--order", order, "override quadrature order")->check(CLI::Range(1, 120));

  std::string lambdas = "1,2,4,8,64";
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "masses of dilated chains");
  sweep->add_option("config", config, "chain configuration")->required();
  sweep->add_option("--lambdas", lambdas, "comma separated dilation factors");
  sweep->add_option("-o,--out", out_path, "output CSV (default stdout)");
  sweep->add_option("--order", order, "override quadrature order")->check(CLI::Range(1, 120));

  int levels = 12;
  std::string exponent = "4/3";
  bool degenerate = false;
  auto* cantor = app.add_subcommand("cantor", "Legendrian curve over a Cantor set");
  cantor->add_option("--levels", levels, "number of stages")->check(CLI::Range(1, 24));
  cantor->add_option("--gap-exponent", exponent, "gaps r_j = 2^(-e j)/8");
  cantor->add_flag("--degenerate", degenerate, "A = [0,1], u = 0");
  cantor->add_option("-o,--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    heis::QuadratureSpec rule;
    if (order > 0) rule.order = order;
    if (*tables) {
      std::cout << (csv ? heis::tables_csv(n) : heis::tables_text(n));
    } else if (*verify) {
      vopt.currents = !no_currents;
      const auto report = heis::run_verify(vopt);
      std::cout << (json ? report.to_json() : report.to_text());
      return report.all_passed() ? 0 : 1;
    } else if (*mass) {
      std::cout << heis::mass_output(heis::load_chain(config), mflags, rule);
    } else if (*sweep) {
      const auto rows = heis::sweep(heis::load_chain(config), heis::parse_lambdas(lambdas), rule);
      emit(heis::sweep_csv(rows), out_path);
    } else if (*cantor) {
      const heis::CantorCurve curve(levels, heis::CantorCurve::default_gaps(levels, heis::parse_rational(exponent)),
                                    degenerate);
      emit(heis::cantor_csv(heis::cantor_report(curve)), out_path);
    }
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 0;
}
