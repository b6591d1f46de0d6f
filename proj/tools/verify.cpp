// verify <scenario> --algebra <builtin:NAME | FILE> [--n N] [--field Q|Qi|Fp:P]
//        [--report PATH] [--budget DIM] [--precheck P]

#include <iostream>

#include <CLI11.hpp>

#include "queerhom/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run a named verification scenario and emit a JSON report."};
  std::string scenario, algebra = "builtin:base-field", field, report_path;
  std::vector<unsigned> ns;
  std::size_t budget = qh::kDefaultBudget;
  std::uint64_t precheck = 0;
  bool list = false;

  app.add_option("scenario", scenario, "scenario name (see --list)");
  app.add_option("--algebra", algebra, "builtin:TAG or a JSON algebra description")->capture_default_str();
  app.add_option("--n", ns, "matrix size; repeat or separate with commas")->delimiter(',');
  app.add_option("--field", field, "Q (default), Qi or Fp:P");
  app.add_option("--report", report_path, "write the JSON report here instead of stdout");
  app.add_option("--budget", budget, "largest dim Lambda^3 to attempt")->capture_default_str();
  app.add_option("--precheck", precheck, "also run homology scenarios over F_P first");
  app.add_flag("--list", list, "list scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    for (const auto& s : qh::scenario_names()) std::cout << s << "\n";
    return 0;
  }
  if (scenario.empty()) {
    std::cerr << "verify: missing scenario name\n" << app.help();
    return 2;
  }

  qh::ScenarioOptions opt;
  opt.algebra = algebra;
  opt.n = ns;
  opt.budget = budget;
  try {
    if (!field.empty()) opt.field = qh::FieldSpec::parse(field);
    if (precheck) {
      qh::FieldSpec::prime(precheck);
      opt.precheck_prime = precheck;
    }
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  qh::Report report;
  try {
    report = qh::run_scenario(scenario, opt);
  } catch (const qh::PreconditionError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verify: internal error: " << e.what() << "\n";
    return 1;
  }

  if (report_path.empty()) {
    std::cout << qh::report_json(report);
  } else {
    try {
      qh::emit_report(report, report_path);
    } catch (const std::exception& e) {
      std::cerr << "verify: " << e.what() << "\n";
      return 2;
    }
    for (const auto& r : report.rows)
      std::cout << qh::status_name(r.status) << "  " << r.id << " [" << r.field << "]  " << r.computed << "\n";
    std::cout << scenario << ": " << qh::status_name(report.overall()) << "\n";
  }
  if (!report.unmet_requirement.empty()) std::cerr << "verify: unmet requirement: " << report.unmet_requirement << "\n";
  return qh::exit_code(report);
}
