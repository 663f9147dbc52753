#include "juliasym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "juliasym/dynamics.hpp"
#include "juliasym/roots.hpp"
#include "juliasym/verify.hpp"

namespace juliasym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_one(Complex z, double tol = 1e-9) { return std::abs(z - 1.0) <= tol; }

Complex int_pow(Complex z, long long k) {
  Complex r = 1.0;
  Complex b = k < 0 ? 1.0 / z : z;
  for (unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k); e; e >>= 1) {
    if (e & 1ULL) r *= b;
    b *= b;
  }
  return r;
}

bool same_point(const SpherePoint& a, const SpherePoint& b) { return chordal_distance(a, b) <= 1e-7; }

// sigma o p for sigma(w) = l (w - c) + c
Polynomial rotate_after(const Polynomial& p, Complex lambda, Complex c) {
  return p * lambda + Polynomial::constant((1.0 - lambda) * c);
}

std::string describe(const SpherePoint& p) { return format_point(p); }

void require_degree(const Polynomial& p, const char* what) {
  if (p.degree() < 2)
    throw Error(ErrorKind::InvalidParameters, "symmetry", std::string(what) + " must have degree >= 2");
}

}  // namespace

Decomposition decompose(const Polynomial& p, const ToleranceConfig& tol) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidParameters, "symmetry", "cannot decompose the zero polynomial");
  std::vector<int> exps;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff_is_zero(k, tol)) exps.push_back(k);
  Decomposition dec;
  dec.alpha = exps.front();
  if (exps.size() == 1) {
    dec.beta = kInfiniteOrder;
    dec.p0 = Polynomial::constant(p[dec.alpha]);
    return dec;
  }
  int g = 0;
  for (int e : exps) g = std::gcd(g, e - dec.alpha);
  dec.beta = g;
  std::vector<Complex> c(static_cast<std::size_t>((exps.back() - dec.alpha) / g + 1));
  for (int e : exps) c[static_cast<std::size_t>((e - dec.alpha) / g)] = p[e];
  dec.p0 = Polynomial(std::move(c));
  return dec;
}

NormalForm normalize(const Polynomial& p, const ToleranceConfig& tol) {
  require_degree(p, "polynomial");
  const int d = p.degree();
  NormalForm nf;
  nf.centroid = p.centroid();
  nf.scale = std::pow(1.0 / p.leading(), 1.0 / (d - 1));
  const Complex xi = nf.centroid;
  const Complex a = nf.scale;
  Polynomial g = p.shifted(xi).scaled(a) - Polynomial::constant(xi);
  g *= 1.0 / a;

  // Rounding floor per coefficient: the shift and scale can leave noise far
  // above zero_coeff_tol * max in structurally-zero slots at high degree.
  std::vector<Complex> abs_c;
  for (Complex c : p.coeffs()) abs_c.emplace_back(std::abs(c), 0.0);
  const Polynomial bound = Polynomial(std::move(abs_c)).shifted(std::abs(xi));
  const double abs_a = std::abs(a);
  std::vector<Complex> c(g.coeffs().begin(), g.coeffs().end());
  c.resize(static_cast<std::size_t>(d) + 1);
  double gmax = 0.0;
  for (Complex x : c) gmax = std::max(gmax, std::abs(x));
  for (int k = 0; k < d; ++k) {
    double b = std::abs(bound[k]) * std::pow(abs_a, k - 1);
    if (k == 0) b += std::abs(xi) / abs_a;
    const double floor = std::max(tol.zero_coeff_tol * gmax, 64.0 * kEps * b);
    if (std::abs(c[static_cast<std::size_t>(k)]) <= floor) c[static_cast<std::size_t>(k)] = 0.0;
  }
  c[static_cast<std::size_t>(d - 1)] = 0.0;
  c[static_cast<std::size_t>(d)] = 1.0;
  nf.normalized = Polynomial(std::move(c));

  const Decomposition dec = decompose(nf.normalized, tol);
  nf.alpha = dec.alpha;
  nf.beta = dec.beta;
  nf.p0 = dec.p0;
  return nf;
}

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::rotation_group: return "rotation_group";
    case GroupKind::full_circle: return "full_circle";
    case GroupKind::trivial: return "trivial";
  }
  return "?";
}

SymmetryGroup SymmetryGroup::rotations(Complex center, int order) {
  SymmetryGroup g;
  g.center = center;
  g.order = order;
  g.kind = is_infinite_order(order) ? GroupKind::full_circle : order == 1 ? GroupKind::trivial
                                                                          : GroupKind::rotation_group;
  return g;
}

std::vector<MobiusTransform> SymmetryGroup::elements() const {
  std::vector<MobiusTransform> out;
  if (is_infinite_order(order)) return out;
  for (int k = 0; k < order; ++k) {
    const Complex l = root_of_unity(k, order);
    out.push_back(MobiusTransform::affine(l, (1.0 - l) * center));
  }
  return out;
}

SymmetryGroup symmetry_group(const Polynomial& p, const ToleranceConfig& tol) {
  const NormalForm nf = normalize(p, tol);
  return SymmetryGroup::rotations(nf.centroid, nf.beta);
}

double beardon_residual(const Polynomial& g, Complex lambda) {
  return poly_relative_difference(g.scaled(lambda), g * int_pow(lambda, g.degree()));
}

bool beardon_check(const Polynomial& g, Complex lambda, const ToleranceConfig& tol) {
  require_degree(g, "normalized polynomial");
  const int d = g.degree();
  if (!near_one(g.leading(), tol.coeff_rel_tol) || !g.coeff_is_zero(d - 1, tol))
    throw Error(ErrorKind::NotNormalized, "symmetry", "expected a monic centered polynomial, got " + to_string(g));
  if (std::abs(std::abs(lambda) - 1.0) > tol.coeff_rel_tol)
    throw Error(ErrorKind::InvalidParameters, "symmetry", "lambda must have modulus 1");
  return beardon_residual(g, lambda) <= tol.coeff_rel_tol;
}

std::vector<Polynomial> same_julia_family(const Polynomial& p, const ToleranceConfig& tol) {
  const SymmetryGroup g = symmetry_group(p, tol);
  if (g.kind == GroupKind::full_circle)
    throw Error(ErrorKind::InfiniteFamily, "symmetry", "p is conjugate to a monomial; the family is a circle");
  std::vector<Polynomial> out;
  for (int k = 0; k < g.order; ++k) out.push_back(rotate_after(p, root_of_unity(k, g.order), g.center));
  return out;
}

NoncommutingPair conjugate_noncommuting_pair(const Polynomial& p, Complex lambda, bool expect_noncommuting,
                                             const ToleranceConfig& tol) {
  const NormalForm nf = normalize(p, tol);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidParameters, "symmetry", "lambda must have modulus 1");
  if (!is_infinite_order(nf.beta) && !near_one(int_pow(lambda, nf.beta)))
    throw Error(ErrorKind::InvalidParameters, "symmetry",
                "lambda is not a root of unity of order beta = " + std::to_string(nf.beta));
  const long long e = static_cast<long long>(nf.alpha - 1) * (nf.alpha - 1);
  NoncommutingPair out;
  out.predicted_commutes = near_one(int_pow(lambda, e));
  if (expect_noncommuting && out.predicted_commutes)
    throw Error(ErrorKind::HypothesisViolated, "symmetry",
                "lambda^((alpha-1)^2) = 1 (alpha = " + std::to_string(nf.alpha) + "), so the pair commutes");

  const Polynomial qg = nf.normalized * int_pow(lambda, 1 - nf.alpha);
  // back to p's coordinates: psi o qg o psi^{-1}
  const Complex a = nf.scale, xi = nf.centroid;
  const Polynomial inner{-xi / a, 1.0 / a};
  out.q = poly_compose(qg, inner) * a + Polynomial::constant(xi);
  out.same_julia = true;
  out.commutator_residual = poly_relative_difference(poly_compose(p, out.q), poly_compose(out.q, p));
  out.commutes = out.commutator_residual <= tol.coeff_rel_tol;
  return out;
}

JuliaRelation julia_relation_check(const Polynomial& p, const Polynomial& q, const ToleranceConfig& tol) {
  require_degree(p, "p");
  require_degree(q, "q");
  const SymmetryGroup g = symmetry_group(p, tol);
  if (g.kind == GroupKind::full_circle)
    throw Error(ErrorKind::InfiniteFamily, "symmetry", "p is conjugate to a monomial; Sigma p is infinite");
  const Polynomial pq = poly_compose(p, q);
  const Polynomial qp = poly_compose(q, p);
  JuliaRelation out;
  out.residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < g.order; ++k) {
    const Complex l = root_of_unity(k, g.order);
    const double res = poly_relative_difference(pq, rotate_after(qp, l, g.center));
    out.residual = std::min(out.residual, res);
    if (res <= tol.coeff_rel_tol) {
      out.holds = true;
      out.witness = l;
      out.residual = res;
      return out;
    }
  }
  return out;
}

std::vector<SpherePoint> exceptional_points(const RationalMap& r, const ToleranceConfig& tol) {
  const int d = r.degree();
  if (d < 2) throw Error(ErrorKind::InvalidParameters, "symmetry", "exceptional points need deg R >= 2");
  std::vector<SpherePoint> candidates;
  for (const CriticalPoint& c : critical_points(r, tol))
    if (c.multiplicity >= d - 1 && local_degree(r, c.location) == d) candidates.push_back(c.location);

  auto maps_onto = [&](const std::vector<SpherePoint>& s) {
    for (const SpherePoint& x : s) {
      const SpherePoint y = r(x);
      if (std::none_of(s.begin(), s.end(), [&](const SpherePoint& t) { return same_point(t, y); })) return false;
    }
    return true;
  };
  // Each candidate has a single preimage, so R(S) = S already makes S
  // completely invariant.
  if (candidates.size() == 2 && maps_onto(candidates)) return candidates;
  for (const SpherePoint& c : candidates)
    if (maps_onto({c})) return {c};
  return {};
}

MobiusSymmetrySet exceptional_symmetries(const RationalMap& r, const ToleranceConfig& tol) {
  const std::vector<SpherePoint> pts = exceptional_points(r, tol);
  if (pts.empty()) throw Error(ErrorKind::NoExceptionalPoint, "symmetry", "R has no exceptional point");
  if (pts.size() == 2)
    throw Error(ErrorKind::TwoExceptionalPoints, "symmetry",
                "R has exceptional points " + describe(pts[0]) + " and " + describe(pts[1]) +
                    "; it is conjugate to z^d by phi(z) = a(z - z1)/(z - z2)");
  MobiusSymmetrySet out;
  out.exceptional_point = pts[0];
  const int d = r.degree();
  if (pts[0].is_infinity())
    out.conjugator = MobiusTransform::inversion();
  else if (pts[0].value() != Complex{})
    out.conjugator = MobiusTransform::translation(-pts[0].value());
  const bool moved = !mobius_equal(out.conjugator, MobiusTransform::identity());
  const RationalMap r1 = moved ? mobius_conjugate(r, out.conjugator) : r;

  // r1 = c z^d / Q(z); the polynomial 1/r1(1/z) is z^d Q(1/z) / c
  const Complex c = r1.num()[d];
  if (c == Complex{} || poly_relative_difference(r1.num(), Polynomial::monomial(c, d)) > tol.coeff_rel_tol)
    throw Error(ErrorKind::DegenerateResult, "symmetry",
                "conjugated map is not of the form z^d / Q(z): " + to_string(r1));
  const Polynomial p = r1.den().reversed(d) * (1.0 / c);
  out.zeta = p.centroid();
  const NormalForm nf = normalize(p, tol);
  if (is_infinite_order(nf.beta))
    throw Error(ErrorKind::TwoExceptionalPoints, "symmetry", "1/R(1/z) is conjugate to a monomial");
  out.beta = nf.beta;

  const MobiusTransform h_inv = out.conjugator.inverse();
  for (int k = 0; k < out.beta; ++k) {
    const Complex l = root_of_unity(k, out.beta);
    const MobiusTransform g{1.0, 0.0, out.zeta * (1.0 - l), l};
    out.local_generators.push_back(g);
    out.generators.push_back(compose(h_inv, compose(g, out.conjugator)));
    const RationalMap lhs = rational_compose(r1, g.as_map());
    int found = -1;
    MobiusTransform gm = MobiusTransform::identity();
    for (int m = 0; m < std::max(out.beta, 1) && found < 0; ++m) {
      if (rational_equal(lhs, rational_compose(gm.as_map(), r1), tol)) found = m;
      gm = compose(g, gm);
    }
    out.exponents.push_back(found);
  }
  return out;
}

const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::pass: return "pass";
    case HypothesisStatus::fail: return "fail";
    case HypothesisStatus::unverified: return "unverified";
  }
  return "?";
}

const char* to_string(GroupRelation r) {
  switch (r) {
    case GroupRelation::equal: return "equal";
    case GroupRelation::containment_only: return "containment_only";
  }
  return "?";
}

bool Form1Result::any_failed() const {
  return std::any_of(checklist.begin(), checklist.end(),
                     [](const HypothesisItem& h) { return h.status == HypothesisStatus::fail; });
}

Form1Result form1_symmetry(const Polynomial& p, const Polynomial& q, const ToleranceConfig& tol) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::InvalidParameters, "symmetry", "P and Q must be nonzero polynomials");
  Form1Result out;
  out.map = RationalMap(p, q, tol);
  out.numerator = decompose(p, tol);
  out.denominator = decompose(q, tol);
  auto& list = out.checklist;
  auto item = [&](std::string name, bool ok, std::string detail) {
    list.push_back({std::move(name), ok ? HypothesisStatus::pass : HypothesisStatus::fail, std::move(detail)});
  };
  auto centered = [&](const Polynomial& x) { return x.degree() >= 1 && x.coeff_is_zero(x.degree() - 1, tol); };

  item("P centered", centered(p), "coefficient of z^(deg-1) is " + format_complex(p[p.degree() - 1]));
  item("Q centered", q.degree() >= 1 && centered(q),
       q.degree() >= 1 ? "coefficient of z^(deg-1) is " + format_complex(q[q.degree() - 1]) : "Q is constant");
  item("P non-monomial", p.degree() >= 1 && !p.is_monomial(tol), to_string(p));
  item("Q non-monomial", q.degree() >= 1 && !q.is_monomial(tol), to_string(q));

  {
    const int a1 = out.numerator.alpha, a2 = out.denominator.alpha;
    const Polynomial ps = p.shift_down(a1), qs = q.shift_down(a2);
    std::string shared;
    if (ps.degree() >= 1 && qs.degree() >= 1) {
      const auto qroots = poly_roots(qs, tol);
      for (const Root& x : poly_roots(ps, tol))
        for (const Root& y : qroots)
          if (std::abs(x.value - y.value) <= 1e-6 * std::max(1.0, std::abs(x.value)))
            shared += (shared.empty() ? "" : ", ") + format_complex(x.value);
    }
    item("no common root except 0", shared.empty(), shared.empty() ? "none" : "shared roots " + shared);
  }

  const int a1 = out.numerator.alpha, a2 = out.denominator.alpha;
  item("alpha1 > alpha2 + 1", a1 > a2 + 1, "alpha1 = " + std::to_string(a1) + ", alpha2 = " + std::to_string(a2));
  const int beta = std::gcd(out.denominator.beta, out.numerator.beta);
  auto beta_text = [](int b) { return is_infinite_order(b) ? std::string("inf") : std::to_string(b); };
  item("beta = gcd(beta1, beta2) > 1", is_infinite_order(beta) || beta > 1,
       "beta1 = " + beta_text(out.numerator.beta) + ", beta2 = " + beta_text(out.denominator.beta) +
           ", beta = " + beta_text(beta));

  const bool nondegenerate = out.map.degree() >= 2;
  if (nondegenerate) {
    const auto exc = exceptional_points(out.map, tol);
    std::string where;
    for (const auto& e : exc) where += (where.empty() ? "" : ", ") + describe(e);
    item("R non-exceptional", exc.empty(), exc.empty() ? "no exceptional point" : "exceptional points " + where);
  } else {
    item("R non-exceptional", false, "deg R < 2");
  }

  {
    HypothesisItem h{"Julia set not invariant under translation", HypothesisStatus::unverified, ""};
    const int dp = p.degree(), dq = q.degree();
    if (dp > dq + 1) {
      h.status = HypothesisStatus::pass;
      h.detail = "deg P > deg Q + 1: infinity is superattracting, Julia set bounded";
    } else if (dp < dq && a1 > a2 + 1) {
      h.status = HypothesisStatus::pass;
      h.detail = "deg P < deg Q: infinity maps to the superattracting fixed point 0, Julia set bounded";
    } else if (nondegenerate && translation_invariance_heuristic(out.map) != TranslationHeuristic::unknown) {
      h.status = HypothesisStatus::pass;
      h.detail = "orbit of infinity captured by an attracting cycle";
    } else {
      h.detail = "infinity not shown to lie in the Fatou set";
    }
    list.push_back(h);
  }

  {
    HypothesisItem h{"no parabolic or rotation domain", HypothesisStatus::unverified, ""};
    if (nondegenerate && critical_orbits_captured(out.map, attractor_inventory(out.map))) {
      h.status = HypothesisStatus::pass;
      h.detail = "every critical orbit is captured by an attracting cycle";
    } else {
      h.detail = "some critical orbit is not captured; cannot exclude parabolic or rotation domains";
    }
    list.push_back(h);
  }

  out.exponent_m = a1 - a2;
  if (!is_infinite_order(beta) && beta >= 2)
    out.rotation_residual = functional_equation_check(out.map, root_of_unity(1, beta), out.exponent_m);

  if (!out.any_failed()) {
    out.group = SymmetryGroup::rotations(0.0, beta);
    out.relation = GroupRelation::equal;
  } else {
    const int found = nondegenerate ? detect_rotation_order(out.map, 24, 0.0, tol).order_found : 1;
    out.group = SymmetryGroup::rotations(0.0, found);
    out.relation = GroupRelation::containment_only;
  }
  return out;
}

Form2Result form2_symmetry(const Polynomial& p, int nu, Complex a, const ToleranceConfig& tol) {
  require_degree(p, "P");
  const int d = p.degree();
  if (!near_one(p.leading(), tol.coeff_rel_tol) || !p.coeff_is_zero(d - 1, tol))
    throw Error(ErrorKind::NotNormalized, "symmetry", "P must be monic and centered, got " + to_string(p));
  if (a == Complex{}) throw Error(ErrorKind::InvalidParameters, "symmetry", "a must be nonzero");
  const Decomposition dec = decompose(p, tol);
  if (is_infinite_order(dec.beta))
    throw Error(ErrorKind::InvalidParameters, "symmetry", "P is a monomial; a z^nu P is a monomial map");
  if (dec.beta < 2)
    throw Error(ErrorKind::BetaTooSmall, "symmetry", "beta(P) = " + std::to_string(dec.beta) + " < 2");
  Form2Result out;
  if (nu >= 0)
    out.map = RationalMap(p * Polynomial::monomial(a, nu));
  else
    out.map = RationalMap(p * a, Polynomial::monomial(1.0, -nu), tol);
  if (out.map.degree() < 2) throw Error(ErrorKind::DegenerateResult, "symmetry", "a z^nu P has degree < 2");
  out.group = SymmetryGroup::rotations(0.0, dec.beta);
  out.relation = (nu == -d || nu == -d + 1) ? GroupRelation::containment_only : GroupRelation::equal;
  return out;
}

RationalMap mcmullen_map(int m, int n, Complex lambda) {
  if (m < 2 || n < 1 || lambda == Complex{})
    throw Error(ErrorKind::InvalidParameters, "symmetry", "McMullen map needs m >= 2, n >= 1, lambda != 0");
  return RationalMap::assume_reduced(Polynomial::monomial(1.0, m + n) + Polynomial::constant(lambda),
                                     Polynomial::monomial(1.0, n));
}

McMullenResult mcmullen_symmetry(int m, int n, Complex lambda) {
  McMullenResult out;
  out.map = mcmullen_map(m, n, lambda);
  out.group = SymmetryGroup::rotations(0.0, m + n);
  out.detected_order = detect_rotation_order(out.map, std::max(24, m + n)).order_found;
  return out;
}

}  // namespace juliasym
