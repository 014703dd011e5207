#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "vnfree/expr.hpp"
#include "vnfree/fdim.hpp"
#include "vnfree/verify.hpp"

namespace {

using namespace vnfree;

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitDomainError = 2;

int eval_expression(const std::string& text, bool json, bool strict) {
  try {
    const AstPtr ast = parse(text);
    const EvalResult result = evaluate(*ast, EvalOptions{strict, nullptr});
    std::cout << render(result, json ? RenderStyle::Json : RenderStyle::Text)
              << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

int fdim_expression(const std::string& text) {
  try {
    const AstPtr ast = parse(text);
    const EvalResult result = evaluate(*ast);
    if (!result.value.is_algebra())
      throw TypeMismatchError("fdim expects an algebra expression");
    std::cout << fdim(result.value.algebra()).str() << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

int repl() {
  const bool interactive = isatty(fileno(stdin)) != 0;
  std::string line;
  while (true) {
    if (interactive) std::cout << "vnfree> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == ":quit" || line == ":q") break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const AstPtr ast = parse(line);
      std::cout << render_text(evaluate(*ast).value) << "\n";
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

int verify(const VerifyConfig& cfg) {
  const VerifyReport report = run_verify(cfg);
  std::cout << report.format();
  return report.all_passed() ? kExitOk : 1;
}

void print_group(const GroupDescriptor& g) {
  const Algebra a = group_algebra(g);
  std::cout << g.name << "  |G| = "
            << (g.is_finite() ? std::to_string(*g.order) : std::string("inf"))
            << "  L(G) = " << render_text(a)
            << "  fdim = " << fdim(a).str() << "\n";
}

int groups(const std::string& table_path) {
  try {
    if (!table_path.empty()) {
      for (const auto& g : load_group_table(table_path)) print_group(g);
    } else {
      for (const auto& g : builtin_groups()) print_group(g);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vnfree: exact free products of tracial von Neumann algebras in terms "
      "of interpolated free group factors"};
  app.require_subcommand(1);

  std::string expr_text;
  bool json = false, strict = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
  eval_cmd->add_flag("--json", json, "Emit the JSON form");
  eval_cmd->add_flag("--strict", strict,
                     "Reject inputs not covered by a proven rule");
  eval_cmd->add_option("EXPR", expr_text, "Expression")->required();

  std::string fdim_text;
  auto* fdim_cmd =
      app.add_subcommand("fdim", "Print the free dimension of an algebra");
  fdim_cmd->add_option("EXPR", fdim_text, "Algebra expression")->required();

  auto* repl_cmd = app.add_subcommand("repl", "Read-evaluate-print loop");

  vnfree::VerifyConfig cfg;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--seed", cfg.seed, "Generator seed");
  verify_cmd->add_option("--cases", cfg.cases, "Cases per suite")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--strict", cfg.strict, "Strict engine mode");
  verify_cmd->add_option("--max-summands", cfg.max_summands)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-matrix-size", cfg.max_matrix_size)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--weight-denominator-bound",
                         cfg.weight_denominator_bound)
      ->check(CLI::PositiveNumber);

  std::string table_path;
  auto* groups_cmd =
      app.add_subcommand("groups", "List group algebra decompositions");
  groups_cmd->add_option("--table", table_path,
                         "Group table file (defaults to the built-ins)");

  CLI11_PARSE(app, argc, argv);

  if (*eval_cmd) return eval_expression(expr_text, json, strict);
  if (*fdim_cmd) return fdim_expression(fdim_text);
  if (*repl_cmd) return repl();
  if (*verify_cmd) return verify(cfg);
  if (*groups_cmd) return groups(table_path);
  return kExitOk;
}
