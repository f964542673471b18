#include <iostream>

#include <CLI11.hpp>

#include "levydual/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace levydual::cli;
  CLI::App app{"Duality-based pricing of multi-asset options on exponential Levy models"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::uint64_t seed = 0;
  std::int64_t paths = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed (overrides engine.seed)");
  auto* paths_opt = app.add_option("--paths", paths, "Monte Carlo paths (overrides engine.paths)");
  app.add_option("--json-indent", g.json_indent, "JSON indentation; negative for compact output");
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed_ms from JSON output");

  std::string config;
  std::string suite = "all";
  auto* price = app.add_subcommand("price", "Price the configured trade");
  price->add_option("config", config, "Configuration file")->required();
  auto* dual = app.add_subcommand("dual", "Show the dual one-dimensional problem");
  dual->add_option("config", config, "Configuration file")->required();
  auto* verify = app.add_subcommand("verify", "Check the reductions against Monte Carlo");
  verify->add_option("config", config, "Configuration file")->required();
  verify->add_option("--suite", suite, "all, duality, martingale, density (comma separated)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  if (*seed_opt) g.seed = seed;
  if (*paths_opt) g.paths = paths;

  if (*price) return cmd_price(config, g, std::cout, std::cerr);
  if (*dual) return cmd_dual(config, g, std::cout, std::cerr);
  return cmd_verify(config, suite, g, std::cout, std::cerr);
}
