#pragma once

#include "juliasym/render.hpp"

namespace juliasym {

/// Max normalized coefficient of num(R(lz)) den(R(z)) l^{-m} - num(R(z)) den(R(lz)).
/// Zero exactly when R(lz) = l^m R(z).
double functional_equation_check(const RationalMap& r, Complex lambda, int m);

struct RotationOrderReport {
  int order_found = 1;
  int exponent_m = 1;
  double residual = 0.0;
  int candidates_tested = 0;
  Complex center{};
};

/// Largest k <= k_max such that R(lz) = l^m R(z) about `center` for the
/// primitive k-th root l and some m in [0, 2 deg R].
RotationOrderReport detect_rotation_order(const RationalMap& r, int k_max = 24, Complex center = {},
                                          const ToleranceConfig& tol = {});

/// Fraction of marked pixels (inside the disk inscribed in the grid about
/// `center`) whose rotation by 2 pi / order lands more than `dilate` pixels
/// (Chebyshev distance) from every marked pixel. Throws EmptyMask if no
/// marked pixel qualifies.
double image_symmetry_score(const BoundaryMask& mask, Complex center, int order, int dilate = 2);

enum class TranslationHeuristic { bounded_julia, infinity_in_fatou, unknown };

const char* to_string(TranslationHeuristic h);

/// Sufficient conditions for the Julia set not to be invariant under a
/// translation: bounded Julia set (polynomial, or infinity superattracting),
/// or the orbit of infinity captured by an attracting cycle.
TranslationHeuristic translation_invariance_heuristic(const RationalMap& r);

}  // namespace juliasym
