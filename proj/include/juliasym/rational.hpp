#pragma once

#include <optional>

#include "juliasym/polynomial.hpp"

namespace juliasym {

/// Reduced quotient num/den with a monic denominator.
///
/// Construction from arbitrary num/den reduces: shared roots (within
/// root_cluster_tol) are divided out and the scale is moved into num.
class RationalMap {
 public:
  RationalMap() : num_(Polynomial::identity()), den_(Polynomial::constant(1.0)) {}
  RationalMap(const Polynomial& num, const Polynomial& den, const ToleranceConfig& tol = {});
  explicit RationalMap(const Polynomial& poly);

  /// Skips the shared-root search; the caller guarantees num and den are coprime.
  static RationalMap assume_reduced(const Polynomial& num, const Polynomial& den);
  static RationalMap constant(Complex c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // num as a polynomial; only meaningful when is_polynomial()
  Polynomial as_polynomial() const;

  SpherePoint operator()(const SpherePoint& z) const;
  Complex operator()(Complex z) const;  // pole -> inf in the complex sense

  // R, R', R'' at a finite non-pole point
  void eval_derivs(Complex z, Complex& r, Complex& dr, Complex& d2r) const;
  Complex derivative_at(Complex z) const;

  RationalMap derivative(const ToleranceConfig& tol = {}) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Divides out every shared root of num and den and normalizes den monic.
RationalMap rational_reduce(const Polynomial& num, const Polynomial& den, const ToleranceConfig& tol = {});

/// outer(inner(z)) in reduced form. Throws DegenerateResult if the result is constant.
RationalMap rational_compose(const RationalMap& outer, const RationalMap& inner);
/// R(R(z))
RationalMap rational_iterate_square(const RationalMap& r);
/// n-fold self composition, n >= 1
RationalMap rational_iterate(const RationalMap& r, int n);

enum class RationalOp { compose, iterate_square, reduce };
/// Dispatcher over the three operations. `s` is ignored by iterate_square; reduce
/// re-reduces `r` (s ignored).
RationalMap rational_ops(const RationalMap& r, const RationalMap& s, RationalOp kind, const ToleranceConfig& tol = {});

RationalMap operator+(const RationalMap& a, const RationalMap& b);
RationalMap operator-(const RationalMap& a, const RationalMap& b);
RationalMap operator*(const RationalMap& a, const RationalMap& b);
RationalMap operator/(const RationalMap& a, const RationalMap& b);

/// Cross-multiplied comparison num_a*den_b == num_b*den_a, coefficientwise within
/// coeff_rel_tol of the largest coefficient.
bool rational_equal(const RationalMap& a, const RationalMap& b, const ToleranceConfig& tol = {});
double rational_difference(const RationalMap& a, const RationalMap& b);

std::string to_string(const RationalMap& r);

/// z -> (a z + b) / (c z + d)
struct MobiusTransform {
  Complex a{1.0}, b{}, c{}, d{1.0};

  static MobiusTransform identity() { return {}; }
  static MobiusTransform translation(Complex t) { return {1.0, t, 0.0, 1.0}; }
  static MobiusTransform affine(Complex scale, Complex shift) { return {scale, shift, 0.0, 1.0}; }
  static MobiusTransform inversion() { return {0.0, 1.0, 1.0, 0.0}; }

  Complex determinant() const { return a * d - b * c; }
  bool invertible(double rel_tol = 1e-12) const;
  MobiusTransform inverse() const;
  SpherePoint operator()(const SpherePoint& z) const;
  RationalMap as_map() const;
};

/// (f o g)(z) = f(g(z))
MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g);

/// Entrywise comparison after scaling both to unit determinant (up to sign).
bool mobius_equal(const MobiusTransform& f, const MobiusTransform& g, double rel_tol = 1e-9);

/// phi o R o phi^{-1}
RationalMap mobius_conjugate(const RationalMap& r, const MobiusTransform& phi);

std::string to_string(const MobiusTransform& m);

}  // namespace juliasym
