#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "artin/cli.hpp"

int main(int argc, char** argv) {
  using namespace artin;
  CLI::App app{"Sigma invariants, Artin kernels and fibring for Artin groups"};
  std::string input, graph, command = "classify", fields;
  std::vector<std::string> characters;
  long bound = 3, max_bound = 3;
  bool json = false, text = false, assume_kpi1 = false;
  app.add_option("--input", input, "JSON job document");
  app.add_option("--graph", graph, "inline edge list, e.g. a-b:3,b-c:4");
  app.add_option("--character", characters, "inline character, e.g. a=1,b=-1 (repeatable)");
  app.add_option("--command", command, "classify | liv | sigma1 | sigma2 | homology | fibring | scan");
  app.add_option("--fields", fields, "comma-separated coefficient fields, e.g. Q,F2,F3");
  app.add_option("--bound", bound, "scan bound B (values in [-B, B])");
  app.add_option("--max-bound", max_bound, "largest accepted scan bound");
  auto* json_flag = app.add_flag("--json", json, "JSON report (default)");
  app.add_flag("--text", text, "indented text report")->excludes(json_flag);
  app.add_flag("--assume-kpi1", assume_kpi1, "treat the K(pi,1) conjecture as known");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::JobSpec spec;
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw Error(ErrorCode::SchemaError, "cannot read input file '" + input + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      spec = cli::parse_input(buffer.str());
    } else if (!graph.empty()) {
      spec.graph = cli::parse_inline_graph(graph, &spec.notes);
    } else {
      throw Error(ErrorCode::SchemaError, "one of --input or --graph is required");
    }
    if (!input.empty() && !graph.empty()) throw Error(ErrorCode::SchemaError, "--input and --graph are exclusive");
    for (const auto& c : characters) spec.characters.push_back(cli::parse_inline_character(spec.graph, c));
    if (app.count("--command") || input.empty()) spec.command = cli::parse_command(command);
    if (app.count("--bound")) spec.bound = bound;
    spec.max_bound = max_bound;
    if (!fields.empty()) {
      spec.fields.clear();
      std::stringstream list(fields);
      std::string item;
      while (std::getline(list, item, ',')) spec.fields.push_back(parse_field(item));
    }
    spec.assume_kpi1 = spec.assume_kpi1 || assume_kpi1;
    const auto report = cli::run_command(spec);
    if (text) std::cout << cli::render_text(report);
    else std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
