#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "juliasym/cli.hpp"
#include "juliasym/parse.hpp"

int main(int argc, char** argv) {
  using namespace juliasym;
  RunConfig cfg;
  std::string center;

  CLI::App app{"Rotational symmetries of Julia sets of polynomials and rational maps"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--center", center, "grid center, e.g. \"0.5-0.2i\"");
  app.add_option_function<double>("--width", [&](double w) { cfg.width = w; }, "grid width in the plane");
  app.add_option("--pixels", cfg.pixels, "image side length")->check(CLI::Range(8, 8192));
  app.add_option("--max-iter", cfg.max_iter, "iterations per pixel")->check(CLI::PositiveNumber);
  app.add_option("--eps", cfg.eps, "chordal capture radius")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "render threads (0 = all)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out_path, "basin image (PPM)");
  app.add_option("--mask-out", cfg.mask_path, "boundary mask (PPM)");
  app.add_option("--report", cfg.report_path, "write the JSON report here instead of stdout");
  app.add_option("--kmax", cfg.k_max, "largest rotation order searched")->check(CLI::Range(1, 256));
  app.add_option("--tol", cfg.tol.coeff_rel_tol, "relative coefficient tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--render", cfg.render, "also render and score the boundary image");
  bool no_image = false;
  app.add_flag("--no-image", no_image, "analyze/verify-symmetry: skip the image plane");

  auto* analyze = app.add_subcommand("analyze", "symmetry group of a polynomial or rational map");
  analyze->add_option("map", cfg.input, "map expression in z")->required();
  auto* newton = app.add_subcommand("newton", "Newton map of a polynomial");
  newton->add_option("poly", cfg.input, "seed polynomial")->required();
  auto* cheb = app.add_subcommand("chebyshev", "Chebyshev method map of a polynomial");
  cheb->add_option("poly", cfg.input, "seed polynomial")->required();
  auto* konig = app.add_subcommand("konig", "Konig method map of order n");
  konig->add_option("poly", cfg.input, "seed polynomial")->required();
  konig->add_option("--n", cfg.konig_n, "method order")->check(CLI::Range(2, 8));
  auto* mcm = app.add_subcommand("mcmullen", "z^m + lambda / z^n");
  mcm->add_option("m", cfg.mcmullen_m)->required()->check(CLI::PositiveNumber);
  mcm->add_option("n", cfg.mcmullen_n)->required()->check(CLI::PositiveNumber);
  mcm->add_option("lambda", cfg.mcmullen_lambda)->required();
  auto* render = app.add_subcommand("render", "basin image of a map");
  render->add_option("map", cfg.input, "map expression in z")->required();
  auto* verify = app.add_subcommand("verify-symmetry", "check a claimed rotation order");
  verify->add_option("map", cfg.input, "map expression in z")->required();
  verify->add_option("--order", cfg.order, "claimed order")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*analyze) cfg.command = Command::analyze;
  if (*newton) cfg.command = Command::newton;
  if (*cheb) cfg.command = Command::chebyshev;
  if (*konig) cfg.command = Command::konig;
  if (*mcm) cfg.command = Command::mcmullen;
  if (*render) cfg.command = Command::render;
  if (*verify) cfg.command = Command::verify_symmetry;
  cfg.image_plane = !no_image;

  if (!center.empty()) {
    try {
      cfg.center = parse_complex(center);
    } catch (const ParseError& e) {
      std::cerr << "error: --center: " << e.what() << "\n  " << center << "\n  " << std::string(e.position(), ' ')
                << "^\n";
      return 1;
    }
  }
  return run(cfg, std::cout, std::cerr);
}
