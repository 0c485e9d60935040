#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using normgeom::app::RunConfig;
  CLI::App app{"Geometry of admissible curves in normed planes"};
  app.require_subcommand(1);
  RunConfig config;
  double rel_tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input JSON file");
    sub->add_option("--ball", config.ball, "Ball JSON file or builtin name");
    sub->add_option("--k", config.k, "k for the regular_2k_gon builtin")->check(CLI::PositiveNumber);
    sub->add_option("--out", config.out_dir, "Directory for report and plot files");
    sub->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check a ball, curve or polygon document");
  common(validate);
  validate->add_option("--curve", config.curve, "Curve JSON file");

  auto* analyze = app.add_subcommand("analyze", "Measures and isoperimetric ledger of a curve");
  common(analyze);
  analyze->add_option("--curve", config.curve, "Curve JSON file");
  analyze->add_flag("--svg", config.svg, "Also plot the curve");

  auto* decompose = app.add_subcommand("decompose", "Wigner caustic and CWMS of a curve");
  common(decompose);
  decompose->add_option("--curve", config.curve, "Curve JSON file");
  decompose->add_flag("--svg", config.svg, "Also plot the decomposition");

  auto* lhuilier = app.add_subcommand("lhuilier", "Weak Lhuilier inequality for a polygon");
  common(lhuilier);
  lhuilier->add_flag("--svg", config.svg, "Also plot K, K1 and K1_0");

  auto* corpus = app.add_subcommand("corpus", "Property checks over random curves");
  corpus->add_option("--seed", config.seed, "Random seed");
  corpus->add_option("--n", config.n, "Number of instances")->check(CLI::NonNegativeNumber);
  corpus->add_option("--out", config.out_dir, "Directory for the report");
  corpus->add_flag("--inject-fault", config.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : normgeom::app::kInvalidInput;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (rel_tol > 0.0) config.rel_tol = rel_tol;
  return normgeom::app::run_command(config, std::cout, std::cerr);
}
