#include <CLI11.hpp>
#include <iostream>

#include "milnor/analysis.hpp"
#include "milnor/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Jordan normal form of the Milnor monodromy from the Newton polyhedron"};
  app.require_subcommand(1);

  milnor::AnalyzeOptions options;
  std::string polynomial, support_path, eigenvalue;
  bool json = false, table = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze a convenient polynomial");
  analyze->add_option("polynomial", polynomial, "Polynomial, e.g. \"x^5 + x^2*y^2 + y^5\"");
  analyze->add_option("--support", support_path, "JSON support file {\"variables\": [...], \"support\": [[...]]}");
  auto* json_flag = analyze->add_flag("--json", json, "Emit a JSON document");
  analyze->add_flag("--table", table, "Emit a plain-text report (default)")->excludes(json_flag);
  analyze->add_flag("--fast-only", options.fast_only, "Only the closed formulas and the Newton number");
  analyze->add_flag("--validate", options.validate, "Run the cross-check battery; exit 3 on any failure");
  analyze->add_flag("--emit-hodge-tables", options.emit_hodge_tables, "Include per-face and total Hodge tables");
  analyze->add_option("--eigenvalue", eigenvalue, "Restrict the eigenvalue report to a/b");
  analyze->add_flag("--unsafe-large", options.unsafe_large, "Lift the size guard (6 variables, 40 points)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : milnor::kExitInput;
  }

  if (!polynomial.empty()) options.polynomial = polynomial;
  if (!support_path.empty()) options.support_path = support_path;
  options.format = json ? milnor::OutputFormat::Json : milnor::OutputFormat::Table;
  if (!eigenvalue.empty()) {
    try {
      options.eigenvalue = milnor::RootOfUnity::parse(eigenvalue);
    } catch (const milnor::InputError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return milnor::kExitInput;
    }
  }
  return milnor::run_analyze(options, std::cout, std::cerr);
}
