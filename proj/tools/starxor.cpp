// starxor: state complexity experiments for the star of symmetric difference.
//
//   starxor sc --n1 3 --n2 3 --method all
//   starxor sweep-finals --n1 2 --n2 3 [--csv]
//   starxor verify-figures
//   starxor export --what figure1 --format dot --out fig1.dot
//
// Reports are printed as JSON on stdout. The exit status is 0 unless some
// report has a "fail" verdict; "skipped" does not count as a failure.

#include <iostream>

#include <CLI11.hpp>

#include "starxor/experiments.hpp"

int main(int argc, char** argv) {
  using namespace starxor;

  CLI::App app{"State complexity workbench for (L1 xor L2)*"};
  app.require_subcommand(1);

  ExperimentOptions options;
  app.add_option("--jobs", options.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--cap-states", options.cap_states, "Maximum number of subset states");
  app.add_option("--cap-letters", options.cap_letters, "Maximum monster alphabet size");
  app.add_option("--cap-transitions", options.cap_transitions,
                 "Maximum 2^(n1*n2) * letters for full-monster constructions");

  std::size_t n1 = 2, n2 = 2;
  std::string method = "all";
  auto* sc = app.add_subcommand("sc", "Minimal size of stx for the extremal final sets");
  sc->add_option("--n1", n1, "Size of the first automaton")->required()->check(CLI::PositiveNumber);
  sc->add_option("--n2", n2, "Size of the second automaton")->required()->check(CLI::PositiveNumber);
  sc->add_option("--method", method, "formula, full-monster, witness or all")
      ->check(CLI::IsMember({"formula", "full-monster", "witness", "all"}));

  bool csv = false;
  auto* sweep = app.add_subcommand("sweep-finals", "Minimal stx size for every final-set pair");
  sweep->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  sweep->add_flag("--csv", csv, "Print CSV rows instead of the JSON report");

  auto* figures = app.add_subcommand("verify-figures", "Check the rebuilt example automata");

  ExportRequest request;
  std::string out_path = "-";
  auto* exp = app.add_subcommand("export", "Write an automaton, table or sweep to a file");
  exp->add_option("--what", request.what,
                  "example1, figure1, figure2, figure3, monster, witness, stx-witness, alpha, sweep")
      ->required();
  exp->add_option("--format", request.format, "dot, json or csv")
      ->required()
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  exp->add_option("--out", out_path, "Output path, '-' for stdout");
  exp->add_option("--n1", request.n1)->check(CLI::PositiveNumber);
  exp->add_option("--n2", request.n2)->check(CLI::PositiveNumber);
  exp->add_option("--max", request.max_size, "Largest size in the alpha table");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentReport report;
    if (*sc) {
      report = cmd_sc(n1, n2, parse_method(method), options);
    } else if (*sweep) {
      report = cmd_sweep_finals(n1, n2, options);
      if (csv) {
        std::cout << sweep_csv(report);
        return report.any_failure() ? 1 : 0;
      }
    } else if (*figures) {
      report = cmd_verify_figures();
    } else if (*exp) {
      report = cmd_export(request, out_path, options);
      (out_path == "-" ? std::cerr : std::cout) << report.to_json().dump(2) << '\n';
      return report.any_failure() ? 1 : 0;
    }
    std::cout << report.to_json().dump(2) << '\n';
    return report.any_failure() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "starxor: " << e.what() << '\n';
    return 2;
  }
}
