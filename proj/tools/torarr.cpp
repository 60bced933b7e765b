#include <torarr/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"toric arrangement calculator: posets of layers, cohomology, presentations"};
  app.name("torarr");

  std::string command;
  std::string input_path;
  std::string format = "json";
  std::string jconv = "min";
  long long degree = -1;
  torarr::cli::Options opt;

  app.add_option("command", command,
                 "poset | betti | e2 | matroid | presentation | positive-system | "
                 "validate | conjecture-check")
      ->required();
  app.add_option("input", input_path, "input JSON document ('-' reads stdin)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--j-convention", jconv, "circuit anchor convention")
      ->check(CLI::IsMember({"min", "max"}));
  app.add_option("--degree", degree, "presentation degree cap");
  app.add_option("--random", opt.random, "number of random validate instances");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--max-rank", opt.max_rank, "random instance rank cap");
  app.add_option("--max-atoms", opt.max_atoms, "random instance atom cap");
  app.add_option("--max-entry", opt.max_entry, "random character entry cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  opt.format = format == "table" ? torarr::cli::Format::table : torarr::cli::Format::json;
  opt.j_convention =
      jconv == "max" ? torarr::ospres::JConvention::max : torarr::ospres::JConvention::min;
  if (degree >= 0) opt.degree = static_cast<std::size_t>(degree);

  std::optional<std::string> text;
  if (!input_path.empty()) {
    std::ostringstream buffer;
    if (input_path == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot read '" << input_path << "'\n";
        return 1;
      }
      buffer << in.rdbuf();
    }
    text = buffer.str();
  }

  try {
    const auto result = torarr::cli::run_command(command, text, opt);
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
