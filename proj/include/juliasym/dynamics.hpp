#pragma once

#include <optional>
#include <vector>

#include "juliasym/rational.hpp"

namespace juliasym {

enum class PointClass {
  superattracting,
  attracting,
  repelling,
  indifferent_rational_candidate,
  indifferent_irrational_candidate,
};

const char* to_string(PointClass c);

/// |mu| <= tol superattracting, < 1 - tol attracting, > 1 + tol repelling,
/// otherwise an indifferent candidate (rational if mu^n ~ 1 for some n <= 24).
PointClass classify_multiplier(Complex mu, double tol = 1e-8);

struct FixedPointInfo {
  SpherePoint location;
  Complex multiplier;
  PointClass classification;
  int local_degree = 1;
  int multiplicity = 1;  // as a root of R(z) - z
};

struct CycleInfo {
  std::vector<SpherePoint> points;
  int period = 1;
  Complex multiplier;
  PointClass classification;

  bool contains_infinity() const;
};

struct CriticalPoint {
  SpherePoint location;
  int multiplicity = 1;  // local degree - 1
};

/// Order of the first nonvanishing Taylor coefficient of R - R(z0) at z0, in
/// the coordinate t = 1/z at infinity and for 1/R at poles.
int local_degree(const RationalMap& r, const SpherePoint& z0, double rel_tol = 1e-9);

/// Derivative of phi_w o R o phi_z^{-1} where phi is the identity chart on the
/// closed unit disk and z -> 1/z outside it. Products of these around a cycle
/// are chart independent and give the cycle multiplier.
Complex chart_derivative(const RationalMap& r, const SpherePoint& z);

Complex cycle_multiplier(const RationalMap& r, const std::vector<SpherePoint>& points);

/// All fixed points on the sphere; multiplicities sum to deg R + 1.
std::vector<FixedPointInfo> fixed_points(const RationalMap& r, const ToleranceConfig& tol = {});

/// Critical points on the sphere with multiplicity; the total is 2 deg R - 2.
std::vector<CriticalPoint> critical_points(const RationalMap& r, const ToleranceConfig& tol = {});

/// Cycles of period <= max_period with |multiplier| < 1 + class_tol, found as
/// fixed points of R^p. max_period <= 6; throws DegreeOverflow if deg R^p is
/// beyond the root finder cap.
std::vector<CycleInfo> attracting_cycles(const RationalMap& r, int max_period, double class_tol = 1e-8);

/// Attracting cycles reached by critical orbits after `iterations` steps.
/// Every attracting cycle attracts a critical point, so this complements the
/// algebraic search for periods beyond max_period.
std::vector<CycleInfo> critical_orbit_attractors(const RationalMap& r, int iterations = 2000, double class_tol = 1e-8);

/// Strictly attracting cycles from both searches, de-duplicated and sorted.
/// Periods are searched algebraically while deg R^p <= 128 (at most 4).
std::vector<CycleInfo> attractor_inventory(const RationalMap& r, double class_tol = 1e-8);

/// Index of the cycle whose chordal eps-ball the orbit of z enters within
/// max_iter steps, if any.
std::optional<int> orbit_capture(const RationalMap& r, SpherePoint z, const std::vector<CycleInfo>& cycles,
                                 int max_iter = 5000, double eps = 1e-6);

/// Every critical orbit is captured by one of the cycles (R is hyperbolic).
bool critical_orbits_captured(const RationalMap& r, const std::vector<CycleInfo>& cycles);

}  // namespace juliasym
