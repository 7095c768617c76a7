#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tstar/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic Lie superalgebras and T*-extensions over the rationals"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  tstar::cli::Options o;
  bool text = false;
  std::string file = "-";
  std::string output;

  app.add_flag("--json", "JSON report (default)");
  app.add_flag("--text", text, "plain-text report");
  app.add_option("--seed", o.seed, "seed for randomized property checks");
  app.add_option("--max-dim", o.max_dim, "refuse inputs of larger dimension")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", o.allow_large, "allow gallery sizes n > 4");

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", file, "DSL input, - for stdin")->capture_default_str();
    return c;
  };
  file_command("check", "axioms, form checks and structural properties");
  CLI::App* ts = file_command("tstar", "build the T*-extension T*_omega g");
  ts->add_option("--omega", o.omega, "cochain2 (or closed cochain3) to extend by; zero if omitted");
  ts->add_option("-o,--output", output, "write the extension as a DSL document");
  file_command("cohomology", "dimensions and bases of Z2 (supercyclic), Z3, B3, H3");
  CLI::App* iso = file_command("isometry", "verify S_phi : T*_omega -> T*_{omega - d phi}");
  iso->add_option("--phi", o.phi, "scalar2 cochain")->required();
  iso->add_option("--omega", o.omega, "cochain2 (or closed cochain3); zero if omitted");
  iso->add_option("-o,--output", output, "write the target extension as a DSL document");
  CLI::App* rec = file_command("recognize", "present Q as a T*-extension along a Lagrangian ideal");
  rec->add_option("--ideal", o.ideal, "comma-separated spanning vectors, e.g. \"x*, y*, z*\"")->required();
  rec->add_option("-o,--output", output, "write the quotient and cocycle as a DSL document");
  CLI::App* dec = file_command("decompose", "maximal isotropic ideal and T*-extension presentation");
  dec->add_option("-o,--output", output, "write the quotient and cocycle as a DSL document");
  CLI::App* props = file_command("props", "randomized property checks on the input algebra");
  props->add_option("--trials", o.trials, "trials per property")->check(CLI::PositiveNumber);
  CLI::App* ex = app.add_subcommand("example", "emit a gallery algebra: gn N | glnn N | class-c N | stock NAME");
  ex->add_option("what", o.example, "family and argument")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.json = !text;

  std::string input;
  if (o.command != "example") {
    try {
      input = read_input(file);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  const tstar::cli::Outcome out = tstar::cli::run(o, input);
  std::cout << out.stdout_text;
  if (!output.empty() && out.document) {
    std::ofstream f(output, std::ios::binary);
    f << *out.document;
    if (!f) {
      std::cerr << "cannot write '" << output << "'\n";
      return 2;
    }
  }
  return out.exit_code;
}
