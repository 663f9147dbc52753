#pragma once

#include <string>
#include <vector>

#include "juliasym/symmetry.hpp"

namespace juliasym {

/// z - p/p'
RationalMap newton_map(const Polynomial& p, const ToleranceConfig& tol = {});

/// z - (1 + L/2) p/p' with L = p p'' / p'^2. Throws DegenerateMethod if the
/// result has degree <= 1.
RationalMap chebyshev_map(const Polynomial& p, const ToleranceConfig& tol = {});

/// z + (n-1) (1/p)^(n-2) / (1/p)^(n-1) for 2 <= n <= 8; n = 2 is Newton.
RationalMap konig_map(const Polynomial& p, int n, const ToleranceConfig& tol = {});

enum class MethodKind { newton, chebyshev, konig };

const char* to_string(MethodKind k);

enum class MethodRelation { equal, p_subset_method, inconclusive };

const char* to_string(MethodRelation r);

struct MethodReport {
  MethodKind method = MethodKind::newton;
  int konig_n = 0;
  Polynomial seed;  // the normalized polynomial the map is built from
  RationalMap map;
  int sigma_p_order = 1;
  int verified_order = 1;
  int exponent_m = 1;
  double residual = 0.0;
  MethodRelation relation = MethodRelation::inconclusive;
  bool line_julia = false;
  bool hyperbolic = false;  // every critical orbit captured by an attracting cycle
  std::vector<std::string> warnings;
};

/// Compares Sigma p (order beta of the normalized p) with the rotation order
/// verified for the method map. Equality is claimed only when the orders
/// match and the method map is hyperbolic.
MethodReport method_symmetry_compare(const Polynomial& p, MethodKind method, int konig_n = 3, int k_max = 24,
                                     const ToleranceConfig& tol = {});

RationalMap method_map(const Polynomial& p, MethodKind method, int konig_n = 3, const ToleranceConfig& tol = {});

}  // namespace juliasym
