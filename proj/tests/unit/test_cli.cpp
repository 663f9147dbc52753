#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "juliasym/cli.hpp"
#include "juliasym/parse.hpp"
#include "juliasym/render.hpp"

using namespace juliasym;
using Json = nlohmann::ordered_json;

#ifndef JULIASYM_GOLDEN_DIR
#error "JULIASYM_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

RunConfig config(Command c, const std::string& input) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input = input;
  cfg.pixels = 64;
  return cfg;
}

Json report(const RunConfig& cfg, int expected_exit = 0) {
  const RunResult res = execute(cfg);
  CHECK(res.exit_code == expected_exit);
  return Json::parse(res.report);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("juliasym_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Same keys in the same order, same types, equal strings and booleans, and
// numbers equal to a relative 1e-9.
void compare_json(const Json& got, const Json& want, const std::string& where) {
  INFO(where);
  REQUIRE(got.type_name() == std::string(want.type_name()));
  if (want.is_object()) {
    std::vector<std::string> gk, wk;
    for (auto it = got.begin(); it != got.end(); ++it) gk.push_back(it.key());
    for (auto it = want.begin(); it != want.end(); ++it) wk.push_back(it.key());
    REQUIRE(gk == wk);
    for (const auto& k : wk) compare_json(got[k], want[k], where + "." + k);
  } else if (want.is_array()) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]");
  } else if (want.is_number()) {
    const double g = got.get<double>(), w = want.get<double>();
    CHECK(std::abs(g - w) <= 1e-9 * std::max(1.0, std::abs(w)));
  } else {
    CHECK(got == want);
  }
}

struct GoldenCase {
  const char* name;
  Command command;
  const char* input;
  bool image;
};

}  // namespace

TEST_CASE("analyze reports the polynomial symmetry group") {
  const Json a = report(config(Command::analyze, "z^3 - 1/3"));
  CHECK(a["beta"] == 3);
  CHECK(a["order"] == 3);
  CHECK(a["center"]["re"] == 0.0);
  CHECK(a["center"]["im"] == 0.0);
  CHECK(a["generators"].size() == 3);
  CHECK(a["verify"]["orderFound"] == 3);
  CHECK(a["verify"]["imageScoreAtOrder"].get<double>() <= 0.02);
  for (const char* key : {"input", "centroid", "alpha", "beta", "center", "order", "generators", "hypothesisChecklist",
                          "warnings", "dynamics", "verify"})
    CHECK(a.contains(key));
  for (const char* key : {"orderFound", "exponentM", "residual", "imageScoreAtOrder", "negativeControlScore"})
    CHECK(a["verify"].contains(key));

  const Json b = report(config(Command::analyze, "z^3+3z^2+3z-1/3"));
  CHECK(b["order"] == 3);
  CHECK(std::abs(b["center"]["re"].get<double>() + 1.0) < 1e-12);

  const Json c = report(config(Command::analyze, "z^3 - z - 0.5i"));
  CHECK(c["order"] == 1);
  CHECK(c["kind"] == "trivial");
}

TEST_CASE("analyze routes rational maps through the right theorem") {
  RunConfig cfg = config(Command::analyze, "3z^3/(3-z^3)");
  cfg.image_plane = false;
  const Json e = report(cfg);
  CHECK(e["order"] == 3);
  CHECK(e["exceptionalPoints"].size() == 1);
  CHECK(e["verify"]["imageScoreAtOrder"].is_null());

  cfg.input = "z^2(z^2-2)/(z^2+1)";
  const Json f1 = report(cfg);
  CHECK(f1["order"] == 2);
  CHECK(f1.contains("form1"));

  cfg.input = "(z^2-1)/z^2";
  const Json f2 = report(cfg);
  CHECK(f2["order"] == 2);
  CHECK(f2["form2"]["relation"] == "containment_only");
  CHECK_FALSE(f2["warnings"].empty());

  cfg.input = "z^3";
  const Json inf = report(cfg);
  CHECK(inf["order"] == "inf");
  CHECK_FALSE(inf["warnings"].empty());

  // P monomial: a hypothesis fails, the report is still emitted
  cfg.input = "z^2/(z^3+1)";
  const Json bad = report(cfg, 2);
  bool failed = false;
  for (const auto& h : bad["hypothesisChecklist"]) failed = failed || h["status"] == "fail";
  CHECK(failed);
}

TEST_CASE("method commands") {
  RunConfig cfg = config(Command::newton, "z*(z^3-1)");
  cfg.render = true;
  cfg.out_path = temp_path("newton.ppm");
  const Json n = report(cfg);
  CHECK(n["method"]["relation"] == "equal");
  CHECK(n["method"]["verifiedOrder"] == 3);
  CHECK(n["verify"]["imageScoreAtOrder"].is_number());
  const PpmImage img = read_ppm(cfg.out_path);
  CHECK(img.width == 64);
  std::remove(cfg.out_path.c_str());

  const Json c = report(config(Command::chebyshev, "z*(z^3-1)"));
  CHECK(c["method"]["relation"] == "equal");
  CHECK(c["method"]["n"].is_null());

  RunConfig k = config(Command::konig, "z^3-1");
  k.konig_n = 4;
  const Json kj = report(k);
  CHECK(kj["method"]["n"] == 4);
  CHECK(kj["method"]["verifiedOrder"] == 3);

  // Julia set of the Newton map of z^2-1 is a line
  const Json line = report(config(Command::newton, "z^2-1"), 2);
  CHECK(line["method"]["lineJulia"] == true);
}

TEST_CASE("mcmullen command") {
  RunConfig cfg = config(Command::mcmullen, "");
  cfg.mcmullen_m = 2;
  cfg.mcmullen_n = 1;
  cfg.mcmullen_lambda = "0.01";
  const Json j = report(cfg);
  CHECK(j["predictedOrder"] == 3);
  CHECK(j["detectedOrder"] == 3);
  cfg.mcmullen_m = 3;
  cfg.mcmullen_n = 3;
  cfg.mcmullen_lambda = "1";
  CHECK(report(cfg)["detectedOrder"] == 6);
}

TEST_CASE("render and verify-symmetry commands") {
  RunConfig cfg = config(Command::render, "z^2");
  cfg.out_path = temp_path("z2.ppm");
  cfg.mask_path = temp_path("z2_mask.ppm");
  const Json r = report(cfg);
  CHECK(r["boundaryPixels"].get<int>() > 0);
  CHECK(read_ppm(cfg.out_path).height == 64);
  CHECK(read_ppm(cfg.mask_path).height == 64);
  std::remove(cfg.out_path.c_str());
  std::remove(cfg.mask_path.c_str());

  cfg.out_path.clear();
  cfg.mask_path.clear();
  CHECK_THROWS_AS(execute(cfg), Error);

  RunConfig v = config(Command::verify_symmetry, "z^3 - 1/3");
  v.order = 3;
  v.pixels = 128;
  const Json ok = report(v);
  CHECK(ok["verify"]["algebraicHolds"] == true);
  v.order = 4;
  const Json no = report(v, 2);
  CHECK(no["verify"]["algebraicHolds"] == false);
}

TEST_CASE("run: exit codes, parse error caret and report file") {
  std::ostringstream out, err;
  RunConfig cfg = config(Command::analyze, "z^2 + $");
  CHECK(run(cfg, out, err) == 1);
  CHECK(err.str().find("position 6") != std::string::npos);
  CHECK(err.str().find("\n  z^2 + $\n        ^") != std::string::npos);
  CHECK(out.str().empty());

  std::ostringstream out2, err2;
  cfg.input = "z";
  CHECK(run(cfg, out2, err2) == 1);
  CHECK_FALSE(err2.str().empty());

  std::ostringstream out3, err3;
  cfg.input = "z^2 - 1";
  cfg.report_path = temp_path("report.json");
  CHECK(run(cfg, out3, err3) == 0);
  CHECK(out3.str().empty());
  CHECK(Json::parse(slurp(cfg.report_path))["order"] == 2);
  std::remove(cfg.report_path.c_str());

  std::ostringstream out4, err4;
  cfg.report_path = "/nonexistent-dir/report.json";
  CHECK(run(cfg, out4, err4) == 1);
  CHECK(err4.str().find("/nonexistent-dir/report.json") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical reports and images") {
  RunConfig cfg = config(Command::analyze, "z^3(z^3+1)/(z^6+1)");
  cfg.out_path = temp_path("det_a.ppm");
  cfg.threads = 1;
  const std::string a = execute(cfg).report;
  const std::string img_a = slurp(cfg.out_path);
  cfg.out_path = temp_path("det_b.ppm");
  cfg.threads = 4;
  const std::string b = execute(cfg).report;
  const std::string img_b = slurp(cfg.out_path);
  CHECK(a == b);
  CHECK(img_a == img_b);
  std::remove(temp_path("det_a.ppm").c_str());
  std::remove(temp_path("det_b.ppm").c_str());
}

TEST_CASE("auto_grid covers the filled Julia set of polynomials") {
  const GridSpec g = auto_grid(parse_map("z^3+3z^2+3z-1/3"), 0.0, 64);
  CHECK(std::abs(g.center - Complex(-1.0)) < 1e-12);
  // the Julia set of z^3 - 1/3 lies in |w| <= rho with rho^3 - 1/3 - rho = 0
  CHECK(g.width > 2.0 * 1.1);
  CHECK(g.width < 2.0 * 1.5);
  const GridSpec r = auto_grid(parse_map("(z^2-1)/z^2"), 0.5, 64);
  CHECK(r.width == 4.0);
  CHECK(r.center == Complex(0.5));
}

TEST_CASE("reports match the golden files") {
  const GoldenCase cases[] = {
      {"analyze_shifted_cubic", Command::analyze, "z^3+3z^2+3z-1/3", true},
      {"analyze_cubic_alpha1", Command::analyze, "z^3 - 1.2i*z", false},
      {"analyze_trivial", Command::analyze, "z^3 - z - 0.5i", false},
      {"analyze_exceptional", Command::analyze, "3z^3/(3-z^3)", true},
      {"analyze_form1_order2", Command::analyze, "z^2(z^2-2)/(z^2+1)", false},
      {"analyze_form1_order3", Command::analyze, "z^3(z^3+1)/(z^6+1)", false},
      {"analyze_form2", Command::analyze, "(z^2-1)/z^2", false},
      {"analyze_power_map", Command::analyze, "z^3", false},
      {"newton_quartic", Command::newton, "z*(z^3-1)", false},
      {"chebyshev_quartic", Command::chebyshev, "z*(z^3-1)", false},
      {"konig_halley", Command::konig, "z^2+1", false},
      {"mcmullen_2_1", Command::mcmullen, "", false},
  };
  const bool update = std::getenv("JULIASYM_UPDATE_GOLDEN") != nullptr;
  for (const GoldenCase& c : cases) {
    RunConfig cfg = config(c.command, c.input);
    cfg.image_plane = c.image;
    cfg.render = c.image;
    const RunResult res = execute(cfg);
    const std::string path = std::string(JULIASYM_GOLDEN_DIR) + "/" + c.name + ".json";
    if (update) {
      std::ofstream(path, std::ios::binary) << res.report;
      continue;
    }
    const std::string want = slurp(path);
    REQUIRE_MESSAGE(!want.empty(), "missing golden file " << path);
    compare_json(Json::parse(res.report), Json::parse(want), c.name);
  }
}
