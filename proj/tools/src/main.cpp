#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include <umbral/error.hpp>

#include "umbral/cli/commands.hpp"

using namespace umbral::cli;

int main(int argc, char** argv) {
  CLI::App app{"umbral: exact lattice discretization of polynomial-coefficient ODEs"};
  app.require_subcommand(1);

  std::string input;
  std::size_t length = 0;
  std::string init;
  std::string out_path;
  Format format = Format::csv;
  Mode mode = Mode::exact;
  unsigned arity = 3;

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  const std::map<std::string, Mode> modes{{"exact", Mode::exact}, {"float", Mode::floating}};

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::discretize, "print the lattice stencil of an equation"},
      {Command::residual, "evaluate the lattice residual of sample data"},
      {Command::solve, "step the lattice equation forward from initial values"},
      {Command::fourier, "run the coefficient dynamics of a constant-coefficient equation"},
      {Command::galois, "characteristic roots, mapped fundamental system and Wronskian"},
      {Command::corpus, "verify the built-in example corpus"},
      {Command::bench, "time the convolution and kernel star-power paths"},
  };
  const char* names[] = {"discretize", "residual", "solve", "fourier", "galois", "corpus", "bench"};

  std::map<CLI::App*, Command> lookup;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], commands[i].second);
    lookup[sub] = commands[i].first;
    sub->add_option("--input,-i", input, "equation spec (JSON)");
    sub->add_option("--length,-L", length, "lattice length parameter L");
    sub->add_option("--init", init, "initial lattice values, e.g. 0,1");
    sub->add_option("--format", format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--mode", mode, "exact or float")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub->add_option("--out,-o", out_path, "write data here instead of stdout");
    if (commands[i].first == Command::bench) sub->add_option("--arity,-p", arity, "star power p");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  CLI::App* chosen = app.get_subcommands().front();
  config.command = lookup.at(chosen);
  config.input_path = input;
  if (chosen->count("--length") > 0) config.length = length;
  config.format = format;
  config.mode = mode;
  config.arity = arity;
  if (chosen->count("--init") > 0) {
    try {
      config.init = parse_init_list(init);
    } catch (const umbral::Error& e) {
      std::cerr << "umbral: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const RunResult result = run(config);
  if (!result.diagnostics.empty()) std::cerr << "umbral: " << result.diagnostics << "\n";
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "umbral: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << result.output;
  }
  return result.exit_code;
}
