#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "juliasym/render.hpp"

namespace juliasym {

enum class Command { analyze, newton, chebyshev, konig, mcmullen, render, verify_symmetry };

const char* to_string(Command c);

struct RunConfig {
  Command command = Command::analyze;
  std::string input;  // map expression (unused by mcmullen)

  int konig_n = 3;
  int mcmullen_m = 2;
  int mcmullen_n = 1;
  std::string mcmullen_lambda = "0.01";
  int order = 0;  // verify-symmetry

  // grid; unset center/width are chosen from the map
  std::optional<Complex> center;
  std::optional<double> width;
  int pixels = 512;
  int max_iter = 1000;
  double eps = 1e-6;
  int threads = 0;

  std::string out_path;     // PPM basin image
  std::string mask_path;    // PPM boundary mask
  std::string report_path;  // JSON report; stdout when empty
  int k_max = 24;
  ToleranceConfig tol;
  bool render = false;      // method/mcmullen commands: also run the image plane
  bool image_plane = true;  // analyze: render and score the boundary
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 hypothesis failures
  std::string report;  // JSON text, newline terminated
};

/// Runs one command. Writes requested images, returns the report. Throws Error.
RunResult execute(const RunConfig& config);

/// execute() with reporting: the JSON goes to report_path or `out`, errors to
/// `err`. Returns the process exit status (1 on errors).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Grid used when the user gives no center/width: the normalized-coordinate
/// escape radius for polynomials, width 4 about `fallback_center` otherwise.
GridSpec auto_grid(const RationalMap& r, Complex fallback_center, int pixels);

}  // namespace juliasym
