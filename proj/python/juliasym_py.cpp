#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "juliasym/cli.hpp"
#include "juliasym/methods.hpp"
#include "juliasym/parse.hpp"
#include "juliasym/symmetry.hpp"
#include "juliasym/verify.hpp"

namespace py = pybind11;
using namespace juliasym;

namespace {

// inf becomes None
py::object sphere_to_py(const SpherePoint& p) {
  if (p.is_infinity()) return py::none();
  return py::cast(p.value());
}

Command command_from(const std::string& name) {
  static const std::pair<const char*, Command> table[] = {
      {"analyze", Command::analyze},   {"newton", Command::newton}, {"chebyshev", Command::chebyshev},
      {"konig", Command::konig},       {"mcmullen", Command::mcmullen}, {"render", Command::render},
      {"verify-symmetry", Command::verify_symmetry},
  };
  for (const auto& [key, c] : table)
    if (name == key) return c;
  throw Error(ErrorKind::InvalidParameters, "cli", "unknown command '" + name + "'");
}

RunConfig config_from(const std::string& command, const std::string& input, const py::dict& opts) {
  RunConfig cfg;
  cfg.command = command_from(command);
  cfg.input = input;
  for (const auto& [k, v] : opts) {
    const std::string key = py::cast<std::string>(k);
    if (key == "center") cfg.center = py::cast<Complex>(v);
    else if (key == "width") cfg.width = py::cast<double>(v);
    else if (key == "pixels") cfg.pixels = py::cast<int>(v);
    else if (key == "max_iter") cfg.max_iter = py::cast<int>(v);
    else if (key == "eps") cfg.eps = py::cast<double>(v);
    else if (key == "threads") cfg.threads = py::cast<int>(v);
    else if (key == "out") cfg.out_path = py::cast<std::string>(v);
    else if (key == "mask_out") cfg.mask_path = py::cast<std::string>(v);
    else if (key == "k_max") cfg.k_max = py::cast<int>(v);
    else if (key == "render") cfg.render = py::cast<bool>(v);
    else if (key == "image_plane") cfg.image_plane = py::cast<bool>(v);
    else if (key == "konig_n") cfg.konig_n = py::cast<int>(v);
    else if (key == "m") cfg.mcmullen_m = py::cast<int>(v);
    else if (key == "n") cfg.mcmullen_n = py::cast<int>(v);
    else if (key == "lam") cfg.mcmullen_lambda = py::cast<std::string>(py::str(v));
    else if (key == "order") cfg.order = py::cast<int>(v);
    else throw Error(ErrorKind::InvalidParameters, "cli", "unknown option '" + key + "'");
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_juliasym, m) {
  m.doc() = "Symmetry groups of Julia sets of polynomials, rational maps and root-finding methods";

  // translators run newest first, so ParseError is matched before Error
  const auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<Complex>>(), py::arg("coeffs"), "Coefficients from the constant term up.")
      .def_property_readonly("coeffs", [](const Polynomial& p) { return std::vector<Complex>(p.coeffs().begin(), p.coeffs().end()); })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__", [](const Polynomial& p, Complex z) { return p(z); })
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "')"; });

  py::class_<RationalMap>(m, "RationalMap")
      .def(py::init<Polynomial, Polynomial>(), py::arg("num"), py::arg("den"))
      .def_property_readonly("num", &RationalMap::num)
      .def_property_readonly("den", &RationalMap::den)
      .def_property_readonly("degree", &RationalMap::degree)
      .def("__call__", [](const RationalMap& r, Complex z) { return sphere_to_py(r(SpherePoint(z))); })
      .def("__str__", [](const RationalMap& r) { return to_string(r); })
      .def("__repr__", [](const RationalMap& r) { return "RationalMap('" + to_string(r) + "')"; });

  m.def("parse_polynomial", [](const std::string& s) { return parse_polynomial(s); }, py::arg("text"));
  m.def("parse_map", [](const std::string& s) { return parse_map(s); }, py::arg("text"));

  py::class_<NormalForm>(m, "NormalForm")
      .def_readonly("centroid", &NormalForm::centroid)
      .def_readonly("scale", &NormalForm::scale)
      .def_readonly("normalized", &NormalForm::normalized)
      .def_readonly("alpha", &NormalForm::alpha)
      .def_readonly("beta", &NormalForm::beta)
      .def_readonly("p0", &NormalForm::p0);

  py::class_<SymmetryGroup>(m, "SymmetryGroup")
      .def_readonly("center", &SymmetryGroup::center)
      .def_readonly("order", &SymmetryGroup::order, "0 for the full circle group")
      .def_property_readonly("kind", [](const SymmetryGroup& g) { return std::string(to_string(g.kind)); });

  m.def("normalize", [](const Polynomial& p) { return normalize(p); }, py::arg("p"));
  m.def("symmetry_group", [](const Polynomial& p) { return symmetry_group(p); }, py::arg("p"));
  m.def(
      "exceptional_points",
      [](const RationalMap& r) {
        py::list out;
        for (const SpherePoint& p : exceptional_points(r)) out.append(sphere_to_py(p));
        return out;
      },
      py::arg("r"), "Exceptional points; None stands for infinity.");
  m.def("mcmullen_map", &mcmullen_map, py::arg("m"), py::arg("n"), py::arg("lam"));

  m.def("newton_map", [](const Polynomial& p) { return newton_map(p); }, py::arg("p"));
  m.def("chebyshev_map", [](const Polynomial& p) { return chebyshev_map(p); }, py::arg("p"));
  m.def("konig_map", [](const Polynomial& p, int n) { return konig_map(p, n); }, py::arg("p"), py::arg("n"));

  py::class_<MethodReport>(m, "MethodReport")
      .def_readonly("map", &MethodReport::map)
      .def_readonly("sigma_p_order", &MethodReport::sigma_p_order)
      .def_readonly("verified_order", &MethodReport::verified_order)
      .def_readonly("hyperbolic", &MethodReport::hyperbolic)
      .def_readonly("line_julia", &MethodReport::line_julia)
      .def_readonly("warnings", &MethodReport::warnings)
      .def_property_readonly("relation", [](const MethodReport& r) { return std::string(to_string(r.relation)); });
  m.def(
      "method_symmetry_compare",
      [](const Polynomial& p, const std::string& method, int konig_n) {
        MethodKind kind = MethodKind::newton;
        if (method == "chebyshev") kind = MethodKind::chebyshev;
        else if (method == "konig") kind = MethodKind::konig;
        else if (method != "newton") throw Error(ErrorKind::InvalidParameters, "methods", "unknown method '" + method + "'");
        return method_symmetry_compare(p, kind, konig_n);
      },
      py::arg("p"), py::arg("method") = "newton", py::arg("konig_n") = 3);

  py::class_<RotationOrderReport>(m, "RotationOrderReport")
      .def_readonly("order_found", &RotationOrderReport::order_found)
      .def_readonly("exponent_m", &RotationOrderReport::exponent_m)
      .def_readonly("residual", &RotationOrderReport::residual);
  m.def(
      "detect_rotation_order", [](const RationalMap& r, int k_max, Complex center) { return detect_rotation_order(r, k_max, center); },
      py::arg("r"), py::arg("k_max") = 24, py::arg("center") = Complex{});

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](Complex center, double width, int pixels) {
             GridSpec g;
             g.center = center;
             g.width = width;
             g.pixels = pixels;
             g.validate();
             return g;
           }),
           py::arg("center") = Complex{}, py::arg("width") = 4.0, py::arg("pixels") = 512)
      .def_readonly("center", &GridSpec::center)
      .def_readonly("width", &GridSpec::width)
      .def_readonly("pixels", &GridSpec::pixels)
      .def("point", &GridSpec::point, py::arg("row"), py::arg("col"));

  py::class_<BasinImage>(m, "BasinImage")
      .def_readonly("grid", &BasinImage::grid)
      .def_readonly("labels", &BasinImage::labels, "Row-major labels, -1 where undecided.")
      .def_property_readonly("attractor_count", [](const BasinImage& b) { return b.attractors.size(); })
      .def("undecided_fraction", &BasinImage::undecided_fraction)
      .def("ppm", [](const BasinImage& b) {
        const auto bytes = encode_ppm(b);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      });

  py::class_<BoundaryMask>(m, "BoundaryMask")
      .def_readonly("grid", &BoundaryMask::grid)
      .def_readonly("bits", &BoundaryMask::bits)
      .def("count", &BoundaryMask::count)
      .def("ppm", [](const BoundaryMask& b) {
        const auto bytes = encode_ppm(b);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      });

  m.def(
      "render_basins",
      [](const RationalMap& r, const GridSpec& grid, int max_iter, double eps, int threads) {
        RenderOptions o;
        o.max_iter = max_iter;
        o.eps = eps;
        o.threads = threads;
        py::gil_scoped_release release;
        return render_basins(r, grid, o);
      },
      py::arg("r"), py::arg("grid"), py::arg("max_iter") = 1000, py::arg("eps") = 1e-6, py::arg("threads") = 0);
  m.def("extract_boundary", &extract_boundary, py::arg("image"));
  m.def("image_symmetry_score", &image_symmetry_score, py::arg("mask"), py::arg("center"), py::arg("order"),
        py::arg("dilate") = 2);

  m.def(
      "run_command",
      [](const std::string& command, const std::string& input, const py::dict& opts) {
        const RunConfig cfg = config_from(command, input, opts);
        RunResult res;
        {
          py::gil_scoped_release release;
          res = execute(cfg);
        }
        return py::make_tuple(res.exit_code, res.report);
      },
      py::arg("command"), py::arg("input"), py::arg("options"));
}
