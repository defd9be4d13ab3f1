#include <CLI11.hpp>

#include "galedual/cli.hpp"

int main(int argc, char** argv) {
  using namespace galedual::cli;
  CLI::App app{"Gale duality between sparse polynomial systems and master function systems"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input_path, "system file (JSON)")->required();
    sub->add_option("--output,-o", cfg.output_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol-cluster", cfg.solver.cluster_tol, "merge solutions closer than this");
    sub->add_option("--tol-verify", cfg.solver.verify_tol, "residual tolerance");
    sub->add_option("--seed", cfg.solver.seed, "seed for the random change of variables");
  };

  auto* dualize = app.add_subcommand("dualize", "convert to the Gale dual system and check the pair");
  auto* bound = app.add_subcommand("bound", "Kouchnirenko bound, Euler characteristic, fewnomial bounds");
  auto* solve = app.add_subcommand("solve", "solve a bivariate system");
  auto* verify = app.add_subcommand("verify", "solve both sides and match the solutions");
  for (auto* sub : {dualize, bound, solve, verify}) add_common(sub);
  verify->add_flag("--generic", cfg.generic, "also require the counts to equal the Kouchnirenko bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  cfg.format = format == "text" ? Format::Text : Format::Json;
  if (dualize->parsed()) cfg.command = Command::Dualize;
  if (bound->parsed()) cfg.command = Command::Bound;
  if (solve->parsed()) cfg.command = Command::Solve;
  if (verify->parsed()) cfg.command = Command::Verify;
  return run(cfg);
}
