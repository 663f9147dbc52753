#pragma once

#include <vector>

#include "juliasym/polynomial.hpp"

namespace juliasym {

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootFinderOptions {
  int max_iterations = 800;
  int restarts = 4;
  // polynomials above this degree are rejected with DegreeOverflow
  int max_degree = 256;
};

/// All roots of p with multiplicities (which sum to deg p).
///
/// Simultaneous Aberth-Ehrlich iteration started on a circle, restarted from
/// randomly perturbed starts if it stalls. Roots within root_cluster_tol are
/// merged; looser clusters are merged only when the derivatives of p vanish
/// at the cluster mean up to the cluster size, i.e. they form a genuine
/// multiple root. Output is sorted by (real, imag) so it is deterministic.
std::vector<Root> poly_roots(const Polynomial& p, const ToleranceConfig& tol = {},
                             const RootFinderOptions& opts = {});

/// Same roots, each repeated by multiplicity.
std::vector<Complex> poly_roots_flat(const Polynomial& p, const ToleranceConfig& tol = {});

/// |p(z)| / sum |a_k| |z|^k
double relative_residual(const Polynomial& p, Complex z);

/// Order of vanishing of p at z: number of leading Taylor coefficients at z
/// that are negligible relative to their natural scale.
int vanishing_order(const Polynomial& p, Complex z, double rel_tol);

}  // namespace juliasym
