#include "bialg/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for algebroid pairs with 1-cocycles"};
  std::string command;
  std::string path;
  std::vector<std::string> names;
  std::uint64_t seed = 1;
  int degree = 2;
  int trials = 32;
  std::string format = "text";
  app.add_option("command", command,
                 "validate | check-pair | dualize | induce | triangular | jacobi | morphism")
      ->required();
  app.add_option("file", path, "structure file to read")->required();
  app.add_option("names", names, "declaration names consumed by the command");
  app.add_option("--seed", seed, "sample stream seed");
  app.add_option("--degree", degree, "max degree of sampled polynomial coefficients");
  app.add_option("--trials", trials, "sampled trials per check");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  bialg::SampleConfig cfg;
  cfg.seed = seed;
  cfg.max_degree = degree;
  cfg.trials = trials;
  const bialg::Outcome outcome =
      bialg::run_on_text(command, names, buffer.str(), cfg,
                         format == "json" ? bialg::ReportFormat::json : bialg::ReportFormat::text);
  std::cout << outcome.output;
  return outcome.exit_code;
}
