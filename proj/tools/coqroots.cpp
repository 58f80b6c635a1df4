#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>

#include "coqroots/app.hpp"
#include "coqroots/input.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compute and classify the zeros of a unilateral coquaternionic polynomial"};

  std::string input_path = "-";
  std::string format = "text";
  double tol = 1.0;
  bool verify = false;
  std::uint64_t seed = 0;
  int max_degree = 64;

  app.add_option("input", input_path, "JSON input file ('-' for stdin)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tol", tol, "Factor applied to every default tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--verify", verify, "Certify every reported zero; exit 3 on failure");
  app.add_option("--seed", seed, "Seed for hyperboloid sampling during --verify")->capture_default_str();
  app.add_option("--max-degree", max_degree, "Reject polynomials above this degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : coqroots::kBadInput;
  }

  std::string text;
  if (input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "error [input]: cannot open " << input_path << '\n';
      return coqroots::kBadInput;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  coqroots::InputSpec spec;
  try {
    spec = coqroots::parse_input(text);
  } catch (const coquat::Error& e) {
    std::cerr << "error [input]: " << e.what() << '\n';
    return coqroots::kBadInput;
  }
  spec.options.format = format == "json" ? coqroots::OutputFormat::Json : coqroots::OutputFormat::Text;
  spec.options.tolerance_scale = tol;
  spec.options.verify = verify;
  spec.options.seed = seed;
  spec.options.max_degree = max_degree;

  return coqroots::run(spec, std::cout, std::cerr);
}
