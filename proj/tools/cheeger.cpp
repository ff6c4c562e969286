#include <iostream>

#include <CLI11.hpp>

#include "cheeger/cli.hpp"

int main(int argc, char** argv) {
  using cheeger::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Cheeger constants and Cheeger sets of planar convex bodies"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "body JSON file");
    sub->add_option("--catalog", cfg.catalog, "catalog shape name");
    sub->add_option("--param", cfg.params, "catalog parameter key=value (repeatable)");
    sub->add_option("--k", cfg.k, "symmetry order");
    sub->add_option("--tol", cfg.root_tol, "root tolerance in s");
    sub->add_option("--contact-tol", cfg.contact_tol, "edge contact tolerance (length)");
    sub->add_option("--sym-tol", cfg.sym_tol, "symmetry acceptance tolerance (length)");
    sub->add_option("--grid", cfg.grid, "oracle grid resolution");
    sub->add_option("--json", cfg.json_path, "write JSON here instead of stdout");
    sub->add_option("--svg", cfg.svg_path, "write an SVG figure here");
    sub->add_option("--pgm", cfg.pgm_path, "oracle: write the distance raster as a PGM image");
  };
  add_common(app.add_subcommand("solve", "Cheeger constant and Cheeger set"));
  add_common(app.add_subcommand("symmetry", "k-fold symmetry, dots, edges and edge contacts"));
  add_common(app.add_subcommand("oracle", "compare against the raster oracle"));
  add_common(app.add_subcommand("render", "SVG of the body, inner set and Cheeger set"));
  add_common(app.add_subcommand("catalog", "list catalog shapes or emit one as constraints"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cheeger::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return cheeger::cli::run(cfg, std::cout, std::cerr);
}
