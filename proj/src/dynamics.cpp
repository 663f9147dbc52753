#include "juliasym/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "juliasym/roots.hpp"

namespace juliasym {

namespace {

constexpr int kRootCap = 256;
constexpr int kInventoryDegreeCap = 128;

Polynomial abs_poly(const Polynomial& p) {
  std::vector<Complex> v;
  for (Complex c : p.coeffs()) v.emplace_back(std::abs(c), 0.0);
  return Polynomial(std::move(v));
}

Polynomial strip_leading(const Polynomial& p, const ToleranceConfig& tol) {
  const double floor = tol.zero_coeff_tol * p.max_abs_coeff();
  int d = p.degree();
  while (d >= 0 && std::abs(p[d]) <= floor) --d;
  return Polynomial(std::vector<Complex>(p.coeffs().begin(), p.coeffs().begin() + (d + 1)));
}

bool uses_inverted_chart(const SpherePoint& z) { return z.is_infinity() || std::abs(z.value()) > 1.0; }

bool point_less(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
  if (a.is_infinity()) return false;
  if (a.value().real() != b.value().real()) return a.value().real() < b.value().real();
  return a.value().imag() < b.value().imag();
}

int ipow(int base, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) {
    r *= base;
    if (r > (1LL << 30)) return 1 << 30;
  }
  return static_cast<int>(r);
}

// Newton on R^p(z) - z with the derivative accumulated along the orbit.
Complex polish_periodic(const RationalMap& r, int period, Complex z) {
  auto residual = [&](Complex x, Complex* slope) -> std::optional<Complex> {
    Complex w = x, dw = 1.0;
    for (int j = 0; j < period; ++j) {
      if (r.den()(w) == Complex{}) return std::nullopt;
      Complex v, dv, d2v;
      r.eval_derivs(w, v, dv, d2v);
      if (!std::isfinite(std::abs(v)) || !std::isfinite(std::abs(dv))) return std::nullopt;
      dw *= dv;
      w = v;
    }
    if (slope) *slope = dw - 1.0;
    return w - x;
  };
  Complex slope;
  auto g = residual(z, &slope);
  if (!g) return z;
  double best = std::abs(*g);
  for (int k = 0; k < 3 && best > 0.0; ++k) {
    if (slope == Complex{}) break;
    const Complex cand = z - *g / slope;
    Complex cand_slope;
    auto gc = residual(cand, &cand_slope);
    if (!gc || !(std::abs(*gc) < best)) break;
    z = cand;
    g = gc;
    slope = cand_slope;
    best = std::abs(*gc);
  }
  return z;
}

// Rotate so the cycle starts at its smallest point, making output independent
// of which point the search hit first.
void canonical_rotate(std::vector<SpherePoint>& pts) {
  const auto it = std::min_element(pts.begin(), pts.end(), point_less);
  std::rotate(pts.begin(), it, pts.end());
}

bool same_cycle(const CycleInfo& a, const CycleInfo& b, double tol = 1e-6) {
  if (a.period != b.period) return false;
  return std::any_of(b.points.begin(), b.points.end(),
                     [&](const SpherePoint& p) { return chordal_distance(p, a.points.front()) <= tol; });
}

void sort_cycles(std::vector<CycleInfo>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const CycleInfo& a, const CycleInfo& b) {
    if (a.period != b.period) return a.period < b.period;
    return point_less(a.points.front(), b.points.front());
  });
}

}  // namespace

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::superattracting: return "superattracting";
    case PointClass::attracting: return "attracting";
    case PointClass::repelling: return "repelling";
    case PointClass::indifferent_rational_candidate: return "indifferent_rational_candidate";
    case PointClass::indifferent_irrational_candidate: return "indifferent_irrational_candidate";
  }
  return "?";
}

PointClass classify_multiplier(Complex mu, double tol) {
  const double a = std::abs(mu);
  if (a <= tol) return PointClass::superattracting;
  if (a < 1.0 - tol) return PointClass::attracting;
  if (a > 1.0 + tol) return PointClass::repelling;
  Complex power = 1.0;
  for (int n = 1; n <= 24; ++n) {
    power *= mu;
    if (std::abs(power - 1.0) <= 1e-6) return PointClass::indifferent_rational_candidate;
  }
  return PointClass::indifferent_irrational_candidate;
}

bool CycleInfo::contains_infinity() const {
  return std::any_of(points.begin(), points.end(), [](const SpherePoint& p) { return p.is_infinity(); });
}

int local_degree(const RationalMap& r, const SpherePoint& z0, double rel_tol) {
  const int d = r.degree();
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "dynamics", "local degree of a constant map");
  Polynomial n, q, sn, sq;
  if (z0.is_infinity()) {
    n = r.num().reversed(d);
    q = r.den().reversed(d);
    sn = abs_poly(n);
    sq = abs_poly(q);
  } else {
    const Complex z = z0.value();
    n = r.num().shifted(z);
    q = r.den().shifted(z);
    sn = abs_poly(r.num()).shifted(std::abs(z));
    sq = abs_poly(r.den()).shifted(std::abs(z));
  }
  const double tiny = std::numeric_limits<double>::min();
  auto first_nonzero = [&](const Polynomial& e, const Polynomial& scale, int from) {
    for (int k = from; k <= std::max(e.degree(), 0); ++k)
      if (std::abs(e[k]) > rel_tol * std::abs(scale[k]) + tiny) return k;
    return d;
  };
  if (std::abs(q[0]) > rel_tol * std::abs(sq[0]) + tiny) {
    const Complex c = n[0] / q[0];
    const Polynomial e = n - q * c;
    const Polynomial scale = sn + sq * std::abs(c);
    return std::min(first_nonzero(e, scale, 1), d);
  }
  // pole: order of vanishing of the denominator
  return std::min(std::max(first_nonzero(q, sq, 0), 1), d);
}

Complex chart_derivative(const RationalMap& r, const SpherePoint& z) {
  const SpherePoint w = r(z);
  const bool inv_z = uses_inverted_chart(z);
  const bool inv_w = uses_inverted_chart(w);
  const RationalMap inversion = MobiusTransform::inversion().as_map();
  RationalMap s = r;
  if (inv_z) s = rational_compose(s, inversion);
  if (inv_w) s = rational_compose(inversion, s);
  const Complex t = inv_z ? (z.is_infinity() ? Complex{} : 1.0 / z.value()) : z.value();
  return s.derivative_at(t);
}

Complex cycle_multiplier(const RationalMap& r, const std::vector<SpherePoint>& points) {
  Complex mu = 1.0;
  for (const SpherePoint& p : points) {
    if (local_degree(r, p) >= 2) return 0.0;
    mu *= chart_derivative(r, p);
  }
  return mu;
}

std::vector<FixedPointInfo> fixed_points(const RationalMap& r, const ToleranceConfig& tol) {
  const int d = r.degree();
  if (d < 2) throw Error(ErrorKind::InvalidParameters, "dynamics", "fixed points need deg R >= 2");
  const Polynomial e = strip_leading(r.num() - Polynomial::identity() * r.den(), tol);
  std::vector<FixedPointInfo> out;
  auto push = [&](const SpherePoint& p, int multiplicity) {
    FixedPointInfo info;
    info.location = p;
    info.multiplicity = multiplicity;
    info.local_degree = local_degree(r, p);
    info.multiplier = info.local_degree >= 2 ? Complex{} : chart_derivative(r, p);
    info.classification = classify_multiplier(info.multiplier);
    out.push_back(info);
  };
  if (e.degree() >= 1)
    for (const Root& root : poly_roots(e, tol)) push(root.value, root.multiplicity);
  const int at_infinity = d + 1 - std::max(e.degree(), 0);
  if (at_infinity > 0) push(SpherePoint::infinity(), at_infinity);
  return out;
}

std::vector<CriticalPoint> critical_points(const RationalMap& r, const ToleranceConfig& tol) {
  const int d = r.degree();
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "dynamics", "critical points of a constant map");
  const Polynomial w = strip_leading(r.num().derivative() * r.den() - r.num() * r.den().derivative(), tol);
  std::vector<CriticalPoint> out;
  if (w.degree() >= 1)
    for (const Root& root : poly_roots(w, tol)) out.push_back({root.value, root.multiplicity});
  const int at_infinity = 2 * d - 2 - std::max(w.degree(), 0);
  if (at_infinity > 0) out.push_back({SpherePoint::infinity(), at_infinity});
  return out;
}

std::vector<CycleInfo> attracting_cycles(const RationalMap& r, int max_period, double class_tol) {
  if (max_period < 1 || max_period > 6)
    throw Error(ErrorKind::InvalidParameters, "dynamics", "max_period must lie in 1..6");
  const int d = r.degree();
  if (d < 2) throw Error(ErrorKind::InvalidParameters, "dynamics", "cycles need deg R >= 2");
  std::vector<CycleInfo> out;
  RationalMap f = r;
  for (int p = 1; p <= max_period; ++p) {
    if (ipow(d, p) > kRootCap)
      throw Error(ErrorKind::DegreeOverflow, "dynamics",
                  "deg R^" + std::to_string(p) + " = " + std::to_string(ipow(d, p)) + " exceeds the root finder cap");
    if (p > 1) f = rational_compose(r, f);
    std::vector<SpherePoint> candidates;
    const Polynomial e = strip_leading(f.num() - Polynomial::identity() * f.den(), {});
    if (e.degree() >= 1)
      for (const Root& root : poly_roots(e, {}, RootFinderOptions{800, 4, kRootCap}))
        candidates.emplace_back(polish_periodic(r, p, root.value));
    if (f.num().degree() > f.den().degree()) candidates.push_back(SpherePoint::infinity());

    for (const SpherePoint& c : candidates) {
      std::vector<SpherePoint> pts{c};
      for (int j = 1; j <= p; ++j) pts.push_back(r(pts.back()));
      int exact = 0;
      for (int j = 1; j <= p && exact == 0; ++j)
        if (chordal_distance(pts[static_cast<std::size_t>(j)], c) <= 1e-7) exact = j;
      if (exact != p) continue;
      pts.resize(static_cast<std::size_t>(p));
      const Complex mu = cycle_multiplier(r, pts);
      if (std::abs(mu) >= 1.0 + class_tol) continue;
      canonical_rotate(pts);
      CycleInfo cycle{pts, p, mu, classify_multiplier(mu, class_tol)};
      if (std::none_of(out.begin(), out.end(), [&](const CycleInfo& o) { return same_cycle(o, cycle); }))
        out.push_back(std::move(cycle));
    }
  }
  sort_cycles(out);
  return out;
}

std::vector<CycleInfo> critical_orbit_attractors(const RationalMap& r, int iterations, double class_tol) {
  std::vector<CycleInfo> out;
  for (const CriticalPoint& c : critical_points(r)) {
    SpherePoint z = c.location;
    int period = 0;
    for (int round = 0; round < 4 && period == 0; ++round) {
      for (int k = 0; k < iterations; ++k) z = r(z);
      SpherePoint w = z;
      for (int j = 1; j <= 64; ++j) {
        w = r(w);
        if (chordal_distance(w, z) <= 1e-9) {
          period = j;
          break;
        }
      }
    }
    if (period == 0) continue;
    std::vector<SpherePoint> pts{z};
    for (int j = 1; j < period; ++j) pts.push_back(r(pts.back()));
    const Complex mu = cycle_multiplier(r, pts);
    if (!(std::abs(mu) < 1.0 - class_tol)) continue;
    canonical_rotate(pts);
    CycleInfo cycle{pts, period, mu, classify_multiplier(mu, class_tol)};
    if (std::none_of(out.begin(), out.end(), [&](const CycleInfo& o) { return same_cycle(o, cycle); }))
      out.push_back(std::move(cycle));
  }
  sort_cycles(out);
  return out;
}

std::vector<CycleInfo> attractor_inventory(const RationalMap& r, double class_tol) {
  const int d = r.degree();
  int max_period = 0;
  for (int p = 1; p <= 4; ++p)
    if (ipow(d, p) <= kInventoryDegreeCap) max_period = p;
  std::vector<CycleInfo> out;
  while (max_period > 0) {
    try {
      out = attracting_cycles(r, max_period, class_tol);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonConvergence && e.kind() != ErrorKind::DegreeOverflow) throw;
      --max_period;
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const CycleInfo& c) { return !(std::abs(c.multiplier) < 1.0 - class_tol); }),
            out.end());
  for (CycleInfo& c : critical_orbit_attractors(r, 2000, class_tol))
    if (std::none_of(out.begin(), out.end(), [&](const CycleInfo& o) { return same_cycle(o, c); }))
      out.push_back(std::move(c));
  sort_cycles(out);
  return out;
}

std::optional<int> orbit_capture(const RationalMap& r, SpherePoint z, const std::vector<CycleInfo>& cycles,
                                 int max_iter, double eps) {
  for (int it = 0; it <= max_iter; ++it) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (const SpherePoint& p : cycles[i].points)
        if (chordal_distance(z, p) < eps) return static_cast<int>(i);
    z = r(z);
  }
  return std::nullopt;
}

bool critical_orbits_captured(const RationalMap& r, const std::vector<CycleInfo>& cycles) {
  for (const CriticalPoint& c : critical_points(r))
    if (!orbit_capture(r, c.location, cycles)) return false;
  return true;
}

}  // namespace juliasym
