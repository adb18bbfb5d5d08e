#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lmhs/commands.hpp"
#include "lmhs/errors.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write '" + out + "'");
  f << text;
}

int fail(const lmhs::Json& report) {
  std::cerr << lmhs::render_json(report);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limiting mixed Hodge structure toolkit"};
  app.require_subcommand(1);

  std::string input, format = "text", out, cone;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  int truncation = 0;

  const std::vector<std::pair<std::string, std::string>> analyses = {
      {"deligne", "Deligne bigrading of the limit mixed Hodge structure"},
      {"check-lmhs", "Mixed Hodge and polarization checks"},
      {"weight-compat", "Weight filtrations of cones and their compatibility"},
      {"sl2", "sl2-triple and M(N) for a cone"},
      {"extension-tower", "Levels of the unipotent extension tower"},
      {"ample-cone", "Search for a point with all kappa values positive"},
      {"period-report", "Symbolic period map, monodromy and log differential"}};
  std::vector<CLI::App*> subs;
  for (auto& [name, help] : analyses) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--input,-i", input, "Input document (lmhs/1 JSON, '-' for stdin)")->required();
    s->add_option("--format,-f", format, "Output format (default text)")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--seed", seed, "Seed for randomized searches");
    s->add_option("--budget", budget, "Evaluation budget of the ample-cone search");
    s->add_option("--truncation", truncation, "Truncation order of series")->check(CLI::PositiveNumber);
    s->add_option("--out,-o", out, "Write the report to a file");
    s->add_option("--cone", cone, "Cone name (default: all nilpotents)");
    subs.push_back(s);
  }
  std::string example_name;
  CLI::App* example = app.add_subcommand("example", "Print a built-in input document");
  example->add_option("name", example_name)->required()->check(CLI::IsMember({"genus2"}));
  example->add_option("--out,-o", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "example") {
      emit(lmhs::render_json(lmhs::genus2_example()), out);
      return 0;
    }
    lmhs::CommandOptions opts;
    opts.cone = cone;
    CLI::App* s = app.get_subcommands().front();
    if (s->count("--seed")) opts.seed = seed;
    if (s->count("--budget")) opts.budget = budget;
    if (s->count("--truncation")) opts.truncation_order = truncation;
    lmhs::DegenerationInput in = lmhs::parse_input_text(read_all(input));
    lmhs::CommandResult res = lmhs::run_command(cmd, in, opts);
    emit(format == "json" ? lmhs::render_json(res.report) : lmhs::render_text(res.report), out);
    return res.exit_code;
  } catch (const lmhs::SchemaError& e) {
    return fail(lmhs::error_report(cmd, e.kind(), e.reason(), e.path()));
  } catch (const lmhs::Error& e) {
    return fail(lmhs::error_report(cmd, e.kind(), e.what()));
  } catch (const std::exception& e) {
    return fail(lmhs::error_report(cmd, "IOError", e.what()));
  }
}
