#include "juliasym/methods.hpp"

#include "juliasym/dynamics.hpp"
#include "juliasym/roots.hpp"
#include "juliasym/verify.hpp"

namespace juliasym {

namespace {

void require_seed(const Polynomial& p) {
  if (p.degree() < 2) throw Error(ErrorKind::InvalidParameters, "methods", "seed polynomial must have degree >= 2");
}

RationalMap nondegenerate(RationalMap r, const char* name) {
  if (r.degree() <= 1)
    throw Error(ErrorKind::DegenerateMethod, "methods",
                std::string(name) + " map collapsed to degree " + std::to_string(r.degree()));
  return r;
}

}  // namespace

RationalMap newton_map(const Polynomial& p, const ToleranceConfig& tol) {
  require_seed(p);
  const Polynomial dp = p.derivative();
  return RationalMap(Polynomial::identity() * dp - p, dp, tol);
}

RationalMap chebyshev_map(const Polynomial& p, const ToleranceConfig& tol) {
  require_seed(p);
  if (p.is_monomial(tol)) throw Error(ErrorKind::DegenerateMethod, "methods", "Chebyshev map of a monomial is linear");
  const Polynomial d1 = p.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial d1sq = d1 * d1;
  const Polynomial num = Polynomial::monomial(2.0, 1) * d1sq * d1 - p * d1sq * 2.0 - p * p * d2;
  return nondegenerate(RationalMap(num, d1sq * d1 * 2.0, tol), "Chebyshev");
}

RationalMap konig_map(const Polynomial& p, int n, const ToleranceConfig& tol) {
  require_seed(p);
  if (n < 2 || n > 8) throw Error(ErrorKind::InvalidParameters, "methods", "Konig order n must lie in 2..8");
  // (1/p)^(k) = N_k / p^(k+1) with N_0 = 1, N_{k+1} = N_k' p - (k+1) N_k p'
  const Polynomial dp = p.derivative();
  std::vector<Polynomial> nk{Polynomial::constant(1.0)};
  for (int k = 0; k + 1 < n; ++k)
    nk.push_back(nk[k].derivative() * p - nk[k] * dp * static_cast<double>(k + 1));
  const Polynomial& top = nk[static_cast<std::size_t>(n - 1)];
  const Polynomial& low = nk[static_cast<std::size_t>(n - 2)];
  const Polynomial num = Polynomial::identity() * top + p * low * static_cast<double>(n - 1);
  return nondegenerate(RationalMap(num, top, tol), "Konig");
}

const char* to_string(MethodKind k) {
  switch (k) {
    case MethodKind::newton: return "newton";
    case MethodKind::chebyshev: return "chebyshev";
    case MethodKind::konig: return "konig";
  }
  return "?";
}

const char* to_string(MethodRelation r) {
  switch (r) {
    case MethodRelation::equal: return "equal";
    case MethodRelation::p_subset_method: return "p_subset_method";
    case MethodRelation::inconclusive: return "inconclusive";
  }
  return "?";
}

RationalMap method_map(const Polynomial& p, MethodKind method, int konig_n, const ToleranceConfig& tol) {
  switch (method) {
    case MethodKind::newton: return newton_map(p, tol);
    case MethodKind::chebyshev: return chebyshev_map(p, tol);
    case MethodKind::konig: return konig_map(p, konig_n, tol);
  }
  return newton_map(p, tol);
}

MethodReport method_symmetry_compare(const Polynomial& p, MethodKind method, int konig_n, int k_max,
                                     const ToleranceConfig& tol) {
  const NormalForm nf = normalize(p, tol);
  MethodReport rep;
  rep.method = method;
  rep.konig_n = method == MethodKind::konig ? konig_n : 0;
  rep.seed = nf.normalized;
  if (poly_relative_difference(nf.normalized, p) > tol.coeff_rel_tol)
    rep.warnings.push_back("input was not normalized; the method map is built for " + to_string(nf.normalized));
  rep.map = nondegenerate(method_map(nf.normalized, method, konig_n, tol), to_string(method));
  rep.sigma_p_order = nf.beta;

  const RotationOrderReport order = detect_rotation_order(rep.map, k_max, 0.0, tol);
  rep.verified_order = order.order_found;
  rep.exponent_m = order.exponent_m;
  rep.residual = order.residual;
  rep.hyperbolic = critical_orbits_captured(rep.map, attractor_inventory(rep.map));

  // two distinct roots of equal multiplicity: the Julia set is their perpendicular bisector
  if (method != MethodKind::chebyshev) {
    const auto roots = poly_roots(nf.normalized, tol);
    rep.line_julia = roots.size() == 2 && roots[0].multiplicity == roots[1].multiplicity;
  }

  const int beta = rep.sigma_p_order;
  if (rep.line_julia) {
    rep.relation = MethodRelation::p_subset_method;
    rep.warnings.push_back("Julia set of the method map is a line; its symmetry group contains translations");
  } else if (is_infinite_order(beta)) {
    rep.relation = MethodRelation::inconclusive;
    rep.warnings.push_back("seed is conjugate to a monomial; Sigma p is infinite");
  } else if (rep.verified_order == beta) {
    if (rep.hyperbolic) {
      rep.relation = MethodRelation::equal;
    } else {
      rep.relation = MethodRelation::p_subset_method;
      rep.warnings.push_back(
          "orders agree but some critical orbit is not captured; equality hypotheses unverified");
    }
  } else if (rep.verified_order % beta == 0) {
    rep.relation = MethodRelation::p_subset_method;
  } else {
    rep.relation = MethodRelation::inconclusive;
    rep.warnings.push_back("verified order " + std::to_string(rep.verified_order) + " is not a multiple of beta = " +
                           std::to_string(beta));
  }
  return rep;
}

}  // namespace juliasym
