#include "juliasym/cli.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "juliasym/methods.hpp"
#include "juliasym/parse.hpp"
#include "juliasym/verify.hpp"

namespace juliasym {

namespace {

using Json = nlohmann::ordered_json;

double clean(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

Complex clean(Complex z) { return {clean(z.real()), clean(z.imag())}; }

Json cjson(Complex z) { return Json{{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

Json pjson(const SpherePoint& p) { return p.is_infinity() ? Json("inf") : cjson(p.value()); }

Json order_json(int order) { return is_infinite_order(order) ? Json("inf") : Json(order); }

Json mobius_json(const MobiusTransform& m) {
  // scale so the last nonzero of (d, c) is 1 for readability
  const Complex s = m.d != Complex{} ? m.d : m.c;
  const MobiusTransform n{clean(m.a / s), clean(m.b / s), clean(m.c / s), clean(m.d / s)};
  return Json{{"a", cjson(n.a)}, {"b", cjson(n.b)}, {"c", cjson(n.c)}, {"d", cjson(n.d)}, {"text", to_string(n)}};
}

Json checklist_json(const std::vector<HypothesisItem>& items) {
  Json out = Json::array();
  for (const auto& h : items) out.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  return out;
}

Json cycle_json(const CycleInfo& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(pjson(p));
  return Json{{"period", c.period},
              {"points", pts},
              {"multiplier", cjson(c.multiplier)},
              {"classification", to_string(c.classification)}};
}

Json dynamics_json(const RationalMap& r, const std::vector<CycleInfo>& cycles) {
  Json fixed = Json::array();
  for (const auto& f : fixed_points(r))
    fixed.push_back({{"location", pjson(f.location)},
                     {"multiplier", cjson(f.multiplier)},
                     {"classification", to_string(f.classification)},
                     {"localDegree", f.local_degree},
                     {"multiplicity", f.multiplicity}});
  Json critical = Json::array();
  for (const auto& c : critical_points(r))
    critical.push_back({{"location", pjson(c.location)}, {"multiplicity", c.multiplicity}});
  Json attracting = Json::array();
  for (const auto& c : cycles) attracting.push_back(cycle_json(c));
  return Json{{"degree", r.degree()},
              {"fixedPoints", fixed},
              {"criticalPoints", critical},
              {"attractingCycles", attracting},
              {"hyperbolic", critical_orbits_captured(r, cycles)}};
}

int smallest_coprime(int order) {
  for (int k = 2;; ++k)
    if (std::gcd(k, order) == 1) return k;
}

GridSpec grid_for(const RunConfig& cfg, const RationalMap& r, Complex fallback_center) {
  GridSpec g = auto_grid(r, fallback_center, cfg.pixels);
  if (cfg.center) g.center = *cfg.center;
  if (cfg.width) g.width = *cfg.width;
  g.validate();
  return g;
}

struct ImagePlane {
  BasinImage image;
  BoundaryMask mask;
};

ImagePlane render_plane(const RunConfig& cfg, const RationalMap& r, const GridSpec& grid,
                        const std::vector<CycleInfo>& cycles) {
  RenderOptions opts;
  opts.max_iter = cfg.max_iter;
  opts.eps = cfg.eps;
  opts.threads = cfg.threads;
  ImagePlane plane;
  plane.image = render_basins(r, grid, opts, cycles);
  plane.mask = extract_boundary(plane.image);
  if (!cfg.out_path.empty()) write_image(plane.image, cfg.out_path);
  if (!cfg.mask_path.empty()) write_image(plane.mask, cfg.mask_path);
  return plane;
}

Json grid_json(const GridSpec& g) {
  return Json{{"center", cjson(g.center)}, {"width", g.width}, {"pixels", g.pixels}};
}

// Algebraic plane at the given order plus image scores at that order and at a
// coprime control order.
Json verify_json(Complex center, int order, const RotationOrderReport& detected,
                 const ImagePlane* plane, Json& warnings) {
  Json v{{"orderFound", detected.order_found}, {"exponentM", detected.exponent_m}, {"residual", clean(detected.residual)},
         {"imageScoreAtOrder", nullptr}, {"negativeControlScore", nullptr}};
  if (plane) {
    const int at = is_infinite_order(order) ? detected.order_found : order;
    const int control = smallest_coprime(at);
    try {
      v["imageScoreAtOrder"] = image_symmetry_score(plane->mask, center, at, 2);
      v["negativeControlScore"] = image_symmetry_score(plane->mask, center, control, 2);
      v["controlOrder"] = control;
      v["undecidedFraction"] = plane->image.undecided_fraction();
      if (plane->image.undecided_fraction() > 0.05)
        warnings.push_back("more than 5% of pixels undecided; image scores are weak evidence");
      v["grid"] = grid_json(plane->image.grid);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyMask && e.kind() != ErrorKind::InvalidParameters) throw;
      warnings.push_back(std::string("image plane skipped: ") + e.what());
    }
  }
  return v;
}

bool has_failure(const std::vector<HypothesisItem>& items) {
  return std::any_of(items.begin(), items.end(),
                     [](const HypothesisItem& h) { return h.status == HypothesisStatus::fail; });
}

void note_unverified(const std::vector<HypothesisItem>& items, Json& warnings) {
  for (const auto& h : items)
    if (h.status == HypothesisStatus::unverified) warnings.push_back("unverified hypothesis: " + h.name + " (" + h.detail + ")");
}

Json group_generators(const SymmetryGroup& g) {
  Json gens = Json::array();
  const auto elems = g.elements();
  for (std::size_t k = 0; k < elems.size(); ++k)
    gens.push_back({{"lambda", cjson(root_of_unity(static_cast<int>(k), g.order))}, {"mobius", mobius_json(elems[k])}});
  return gens;
}

// Symmetry part of the analysis for polynomial input.
void analyze_polynomial(const Polynomial& p, Json& rep, std::vector<HypothesisItem>& checklist, SymmetryGroup& group,
                        Json& warnings) {
  const NormalForm nf = normalize(p);
  group = SymmetryGroup::rotations(nf.centroid, nf.beta);
  rep["centroid"] = cjson(nf.centroid);
  rep["alpha"] = nf.alpha;
  rep["beta"] = order_json(nf.beta);
  rep["center"] = cjson(group.center);
  rep["order"] = order_json(group.order);
  rep["kind"] = to_string(group.kind);
  rep["generators"] = group_generators(group);
  rep["normalized"] = {{"scale", cjson(nf.scale)}, {"g", to_string(nf.normalized)}, {"p0", to_string(nf.p0)}};

  checklist.push_back({"degree >= 2", HypothesisStatus::pass, "deg p = " + std::to_string(p.degree())});
  if (is_infinite_order(nf.beta))
    warnings.push_back("p is conjugate to a monomial: its Julia set is a circle and every rotation about the center is a symmetry");
  if (!is_infinite_order(nf.beta)) {
    double worst = 0.0;
    for (int k = 0; k < nf.beta; ++k) worst = std::max(worst, beardon_residual(nf.normalized, root_of_unity(k, nf.beta)));
    checklist.push_back({"g(l z) = l^d g(z) for l^beta = 1",
                         worst <= 1e-9 ? HypothesisStatus::pass : HypothesisStatus::fail,
                         "max residual " + fmt(clean(worst))});
  }
}

// Symmetry part for genuinely rational input; returns the symmetry center.
void analyze_rational(const RationalMap& r, const RunConfig& cfg, Json& rep, std::vector<HypothesisItem>& checklist,
                      SymmetryGroup& group, Json& warnings) {
  const auto exc = exceptional_points(r, cfg.tol);
  Json excj = Json::array();
  for (const auto& e : exc) excj.push_back(pjson(e));
  rep["exceptionalPoints"] = excj;

  if (exc.size() == 2) {
    rep["centroid"] = nullptr;
    rep["alpha"] = nullptr;
    rep["beta"] = "inf";
    rep["center"] = nullptr;
    rep["order"] = "inf";
    rep["kind"] = "conjugate_to_power_map";
    rep["generators"] = Json::array();
    warnings.push_back("two exceptional points: R is Mobius conjugate to z^d; its Julia set is a circle or line");
    group = SymmetryGroup::rotations(0.0, kInfiniteOrder);
    return;
  }

  if (exc.size() == 1) {
    const MobiusSymmetrySet ms = exceptional_symmetries(r, cfg.tol);
    group = SymmetryGroup::rotations(0.0, ms.beta);
    // generators are rotations exactly when they are affine
    const MobiusTransform& g1 = ms.generators.size() > 1 ? ms.generators[1] : ms.generators[0];
    std::optional<Complex> center;
    if (ms.beta == 1)
      center = Complex{};
    else if (std::abs(g1.c) <= 1e-12 * std::abs(g1.d)) center = (g1.b / g1.d) / (1.0 - g1.a / g1.d);
    if (center) group.center = *center;
    rep["centroid"] = cjson(ms.zeta);
    rep["alpha"] = nullptr;
    rep["beta"] = ms.beta;
    rep["center"] = center ? cjson(*center) : Json(nullptr);
    rep["order"] = ms.beta;
    rep["kind"] = center ? to_string(group.kind) : "mobius_group";
    Json gens = Json::array();
    bool all = true;
    for (std::size_t k = 0; k < ms.generators.size(); ++k) {
      gens.push_back({{"lambda", cjson(root_of_unity(static_cast<int>(k), ms.beta))},
                      {"mobius", mobius_json(ms.generators[k])},
                      {"exponentM", ms.exponents[k]}});
      all = all && ms.exponents[k] >= 0;
    }
    rep["generators"] = gens;
    rep["exceptional"] = {{"point", pjson(ms.exceptional_point)},
                          {"conjugator", mobius_json(ms.conjugator)},
                          {"zeta", cjson(ms.zeta)}};
    checklist.push_back({"exactly one exceptional point", HypothesisStatus::pass, format_point(ms.exceptional_point)});
    checklist.push_back({"R o G = G^m o R for every generator", all ? HypothesisStatus::pass : HypothesisStatus::fail,
                         all ? "verified" : "some generator fails the functional equation"});
    if (!center) warnings.push_back("symmetries are Mobius maps fixing the exceptional point, not Euclidean rotations");
    return;
  }

  // Form2 shape: a z^nu P(z) with P normalized, beta(P) >= 2
  const Polynomial& num = r.num();
  const Polynomial& den = r.den();
  if (den.is_monomial(cfg.tol) && den.degree() >= 1 && num.degree() >= 2) {
    const Polynomial pn = num * (1.0 / num.leading());
    const Decomposition dec = decompose(pn, cfg.tol);
    if (pn.coeff_is_zero(pn.degree() - 1, cfg.tol) && !is_infinite_order(dec.beta) && dec.beta >= 2) {
      const Form2Result f2 = form2_symmetry(pn, -den.degree(), num.leading(), cfg.tol);
      group = f2.group;
      rep["centroid"] = cjson(0.0);
      rep["alpha"] = dec.alpha;
      rep["beta"] = dec.beta;
      rep["center"] = cjson(0.0);
      rep["order"] = f2.group.order;
      rep["kind"] = to_string(f2.group.kind);
      rep["generators"] = group_generators(f2.group);
      rep["form2"] = {{"P", to_string(pn)}, {"nu", -den.degree()}, {"a", cjson(num.leading())},
                      {"relation", to_string(f2.relation)}};
      checklist.push_back({"P normalized", HypothesisStatus::pass, to_string(pn)});
      checklist.push_back({"beta(P) >= 2", HypothesisStatus::pass, "beta = " + std::to_string(dec.beta)});
      if (f2.relation == GroupRelation::containment_only)
        warnings.push_back("nu in {-d, -d+1}: only Sigma P contained in Sigma R is guaranteed");
      return;
    }
  }

  const Form1Result f1 = form1_symmetry(num, den, cfg.tol);
  group = f1.group;
  rep["centroid"] = nullptr;
  rep["alpha"] = f1.exponent_m;
  rep["beta"] = order_json(std::gcd(f1.numerator.beta, f1.denominator.beta));
  rep["center"] = cjson(0.0);
  rep["order"] = order_json(f1.group.order);
  rep["kind"] = to_string(f1.group.kind);
  rep["generators"] = group_generators(f1.group);
  rep["form1"] = {{"alpha1", f1.numerator.alpha},   {"beta1", order_json(f1.numerator.beta)},
                  {"alpha2", f1.denominator.alpha}, {"beta2", order_json(f1.denominator.beta)},
                  {"exponentM", f1.exponent_m},     {"rotationResidual", clean(f1.rotation_residual)},
                  {"relation", to_string(f1.relation)}};
  checklist = f1.checklist;
  if (f1.relation == GroupRelation::containment_only)
    warnings.push_back("hypotheses fail: reporting the verified containment only");
}

RunResult analyze(const RunConfig& cfg) {
  const RationalMap r = parse_map(cfg.input, cfg.tol);
  if (r.degree() < 2) throw Error(ErrorKind::InvalidParameters, "cli", "map must have degree >= 2");
  Json rep;
  Json warnings = Json::array();
  rep["input"] = cfg.input;
  rep["map"] = to_string(r);
  std::vector<HypothesisItem> checklist;
  SymmetryGroup group;
  if (r.is_polynomial())
    analyze_polynomial(r.as_polynomial(), rep, checklist, group, warnings);
  else
    analyze_rational(r, cfg, rep, checklist, group, warnings);
  rep["hypothesisChecklist"] = checklist_json(checklist);
  note_unverified(checklist, warnings);

  const std::vector<CycleInfo> cycles = attractor_inventory(r);
  rep["dynamics"] = dynamics_json(r, cycles);

  const Complex center = group.center;
  const RotationOrderReport detected = detect_rotation_order(r, cfg.k_max, center, cfg.tol);
  std::optional<ImagePlane> plane;
  if (cfg.image_plane) plane = render_plane(cfg, r, grid_for(cfg, r, center), cycles);
  rep["verify"] = verify_json(center, group.order, detected, plane ? &*plane : nullptr, warnings);
  if (!is_infinite_order(group.order) && detected.order_found != group.order)
    warnings.push_back("functional-equation order " + std::to_string(detected.order_found) +
                       " differs from the predicted order " + std::to_string(group.order));
  rep["warnings"] = warnings;
  return {has_failure(checklist) ? 2 : 0, rep.dump(2) + "\n"};
}

RunResult method(const RunConfig& cfg, MethodKind kind) {
  const Polynomial p = parse_polynomial(cfg.input, cfg.tol);
  const MethodReport mr = method_symmetry_compare(p, kind, cfg.konig_n, cfg.k_max, cfg.tol);
  Json rep;
  Json warnings = Json::array();
  for (const auto& w : mr.warnings) warnings.push_back(w);
  rep["input"] = cfg.input;
  rep["map"] = to_string(mr.map);
  rep["center"] = cjson(0.0);
  rep["order"] = mr.verified_order;
  rep["generators"] = group_generators(SymmetryGroup::rotations(0.0, mr.verified_order));
  std::vector<HypothesisItem> checklist{
      {"Julia set is not a line", mr.line_julia ? HypothesisStatus::fail : HypothesisStatus::pass,
       mr.line_julia ? "two roots of equal multiplicity" : "root configuration is not a pair"},
      {"every critical orbit captured", mr.hyperbolic ? HypothesisStatus::pass : HypothesisStatus::unverified,
       mr.hyperbolic ? "hyperbolic" : "cannot exclude parabolic or rotation domains"}};
  rep["hypothesisChecklist"] = checklist_json(checklist);
  note_unverified(checklist, warnings);
  rep["method"] = {{"method", to_string(mr.method)},
                   {"n", mr.method == MethodKind::konig ? Json(mr.konig_n) : Json(nullptr)},
                   {"seed", to_string(mr.seed)},
                   {"map", to_string(mr.map)},
                   {"sigmaPOrder", order_json(mr.sigma_p_order)},
                   {"verifiedOrder", mr.verified_order},
                   {"exponentM", mr.exponent_m},
                   {"residual", clean(mr.residual)},
                   {"relation", to_string(mr.relation)},
                   {"lineJulia", mr.line_julia},
                   {"hyperbolic", mr.hyperbolic}};
  if (cfg.render || !cfg.out_path.empty() || !cfg.mask_path.empty()) {
    const std::vector<CycleInfo> cycles = attractor_inventory(mr.map);
    const ImagePlane plane = render_plane(cfg, mr.map, grid_for(cfg, mr.map, 0.0), cycles);
    RotationOrderReport detected;
    detected.order_found = mr.verified_order;
    detected.exponent_m = mr.exponent_m;
    detected.residual = mr.residual;
    rep["verify"] = verify_json(0.0, mr.verified_order, detected, &plane, warnings);
  }
  rep["warnings"] = warnings;
  return {has_failure(checklist) ? 2 : 0, rep.dump(2) + "\n"};
}

RunResult mcmullen(const RunConfig& cfg) {
  const Complex lambda = parse_complex(cfg.mcmullen_lambda);
  const McMullenResult mc = mcmullen_symmetry(cfg.mcmullen_m, cfg.mcmullen_n, lambda);
  Json rep;
  Json warnings = Json::array();
  rep["input"] = "z^" + std::to_string(cfg.mcmullen_m) + " + (" + cfg.mcmullen_lambda + ")/z^" +
                 std::to_string(cfg.mcmullen_n);
  rep["map"] = to_string(mc.map);
  rep["center"] = cjson(0.0);
  rep["order"] = mc.group.order;
  rep["predictedOrder"] = mc.group.order;
  rep["detectedOrder"] = mc.detected_order;
  rep["generators"] = group_generators(mc.group);
  const bool match = mc.detected_order == mc.group.order;
  std::vector<HypothesisItem> checklist{{"detected order equals m + n", match ? HypothesisStatus::pass : HypothesisStatus::fail,
                                         "detected " + std::to_string(mc.detected_order)}};
  rep["hypothesisChecklist"] = checklist_json(checklist);
  const RotationOrderReport detected = detect_rotation_order(mc.map, std::max(cfg.k_max, mc.group.order), 0.0, cfg.tol);
  std::optional<ImagePlane> plane;
  if (cfg.render || !cfg.out_path.empty() || !cfg.mask_path.empty())
    plane = render_plane(cfg, mc.map, grid_for(cfg, mc.map, 0.0), attractor_inventory(mc.map));
  rep["verify"] = verify_json(0.0, mc.group.order, detected, plane ? &*plane : nullptr, warnings);
  rep["warnings"] = warnings;
  return {match ? 0 : 2, rep.dump(2) + "\n"};
}

RunResult render_command(const RunConfig& cfg) {
  if (cfg.out_path.empty() && cfg.mask_path.empty())
    throw Error(ErrorKind::InvalidParameters, "cli", "render needs --out (or --mask-out)");
  const RationalMap r = parse_map(cfg.input, cfg.tol);
  if (r.degree() < 2) throw Error(ErrorKind::InvalidParameters, "cli", "map must have degree >= 2");
  const std::vector<CycleInfo> cycles = attractor_inventory(r);
  const ImagePlane plane = render_plane(cfg, r, grid_for(cfg, r, 0.0), cycles);
  Json attractors = Json::array();
  for (const auto& c : plane.image.attractors) attractors.push_back(cycle_json(c));
  Json rep{{"input", cfg.input},
           {"map", to_string(r)},
           {"grid", grid_json(plane.image.grid)},
           {"maxIter", cfg.max_iter},
           {"eps", cfg.eps},
           {"attractors", attractors},
           {"undecidedFraction", plane.image.undecided_fraction()},
           {"boundaryPixels", plane.mask.count()},
           {"warnings", Json::array()}};
  if (plane.image.attractors.empty()) rep["warnings"].push_back("no attracting cycle found; every pixel is undecided");
  return {0, rep.dump(2) + "\n"};
}

RunResult verify_command(const RunConfig& cfg) {
  if (cfg.order < 1) throw Error(ErrorKind::InvalidParameters, "cli", "verify-symmetry needs --order >= 1");
  const RationalMap r = parse_map(cfg.input, cfg.tol);
  if (r.degree() < 2) throw Error(ErrorKind::InvalidParameters, "cli", "map must have degree >= 2");
  const Complex center = cfg.center.value_or(Complex{});
  const RationalMap s = center == Complex{} ? r : mobius_conjugate(r, MobiusTransform::translation(-center));
  const Complex lambda = root_of_unity(1, cfg.order);
  double best = std::numeric_limits<double>::infinity();
  int best_m = 0;
  for (int m = 0; m <= 2 * r.degree(); ++m) {
    const double res = functional_equation_check(s, lambda, m);
    if (res < best) best = res, best_m = m;
  }
  RotationOrderReport claimed;
  claimed.order_found = cfg.order;
  claimed.exponent_m = best_m;
  claimed.residual = best;
  Json warnings = Json::array();
  const bool algebraic = best <= cfg.tol.coeff_rel_tol;
  std::optional<ImagePlane> plane;
  if (cfg.image_plane) plane = render_plane(cfg, r, grid_for(cfg, r, center), attractor_inventory(r));
  Json v = verify_json(center, cfg.order, claimed, plane ? &*plane : nullptr, warnings);
  v["algebraicHolds"] = algebraic;
  const RotationOrderReport detected = detect_rotation_order(r, std::max(cfg.k_max, cfg.order), center, cfg.tol);
  v["detectedOrder"] = detected.order_found;
  bool image_ok = true;
  if (v["imageScoreAtOrder"].is_number()) {
    image_ok = v["imageScoreAtOrder"].get<double>() <= 0.02;
    if (!image_ok) warnings.push_back("boundary image is not invariant at the claimed order");
  }
  if (!algebraic) warnings.push_back("functional equation fails for every exponent m");
  Json rep{{"input", cfg.input}, {"map", to_string(r)}, {"center", cjson(center)}, {"order", cfg.order},
           {"verify", v},        {"warnings", warnings}};
  return {algebraic && image_ok ? 0 : 2, rep.dump(2) + "\n"};
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::analyze: return "analyze";
    case Command::newton: return "newton";
    case Command::chebyshev: return "chebyshev";
    case Command::konig: return "konig";
    case Command::mcmullen: return "mcmullen";
    case Command::render: return "render";
    case Command::verify_symmetry: return "verify-symmetry";
  }
  return "?";
}

GridSpec auto_grid(const RationalMap& r, Complex fallback_center, int pixels) {
  GridSpec g;
  g.pixels = pixels;
  g.center = fallback_center;
  g.width = 4.0;
  if (r.is_polynomial() && r.degree() >= 2) {
    // every orbit outside |w| = rho grows for the normalized g, where rho is
    // the positive root of rho^d - sum_{k<d} |g_k| rho^k - rho
    const NormalForm nf = normalize(r.as_polynomial());
    const Polynomial& gp = nf.normalized;
    const int d = gp.degree();
    auto f = [&](double x) {
      double acc = std::pow(x, d) - x;
      for (int k = 0; k < d; ++k) acc -= std::abs(gp[k]) * std::pow(x, k);
      return acc;
    };
    double lo = 0.0, hi = 2.0;
    for (int k = 0; k < d; ++k) hi += std::abs(gp[k]);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? hi : lo) = mid;
    }
    g.center = nf.centroid;
    g.width = 2.2 * hi * std::abs(nf.scale);
  }
  return g;
}

RunResult execute(const RunConfig& cfg) {
  cfg.tol.validate();
  RunResult res;
  switch (cfg.command) {
    case Command::analyze: res = analyze(cfg); break;
    case Command::newton: res = method(cfg, MethodKind::newton); break;
    case Command::chebyshev: res = method(cfg, MethodKind::chebyshev); break;
    case Command::konig: res = method(cfg, MethodKind::konig); break;
    case Command::mcmullen: res = mcmullen(cfg); break;
    case Command::render: res = render_command(cfg); break;
    case Command::verify_symmetry: res = verify_command(cfg); break;
  }
  if (!cfg.report_path.empty()) {
    std::ofstream out(cfg.report_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cli", "cannot open '" + cfg.report_path + "' for writing");
    out << res.report;
    if (!out) throw Error(ErrorKind::Io, "cli", "write to '" + cfg.report_path + "' failed");
  }
  return res;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const RunResult res = execute(cfg);
    if (cfg.report_path.empty()) out << res.report;
    return res.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n  " << cfg.input << "\n  " << std::string(e.position(), ' ') << "^\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace juliasym
