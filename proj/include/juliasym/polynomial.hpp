#pragma once

#include <span>
#include <vector>

#include "juliasym/core.hpp"

namespace juliasym {

/// Dense polynomial over Complex, coefficients in ascending powers.
///
/// The zero polynomial has no coefficients and degree -1. Trailing
/// coefficients that are exactly zero are dropped on construction; use
/// trimmed() to drop numerically-zero ones as well.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(Complex c, int power);
  static Polynomial identity() { return monomial(1.0, 1); }
  // prod (z - r_i)
  static Polynomial from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Exactly one nonzero coefficient (under the zero test) and degree >= 1.
  bool is_monomial(const ToleranceConfig& tol = {}) const;

  std::span<const Complex> coeffs() const { return coeffs_; }
  // Coefficient of z^k, zero outside the stored range.
  Complex operator[](int k) const;
  Complex leading() const;
  double max_abs_coeff() const;

  /// -a_{d-1} / (d a_d)
  Complex centroid() const;

  Complex operator()(Complex z) const;
  // p(z), p'(z), p''(z) in one Horner sweep.
  void eval_derivs(Complex z, Complex& p, Complex& dp, Complex& d2p) const;
  // sum |a_k| |z|^k, the natural scale for rounding errors of p(z)
  double magnitude_at(double r) const;

  Polynomial derivative() const;
  // p(z0 + t) as a polynomial in t
  Polynomial shifted(Complex z0) const;
  // p(s z)
  Polynomial scaled(Complex s) const;
  // t^n p(1/t); n defaults to the degree
  Polynomial reversed(int n = -1) const;
  Polynomial pow(int k) const;
  // Quotient by (z - r), remainder discarded.
  Polynomial deflate(Complex r) const;
  // Quotient by z^k, dropping the low coefficients.
  Polynomial shift_down(int k) const;

  // Drop coefficients with |a_k| <= zero_coeff_tol * max |a_j|.
  Polynomial trimmed(const ToleranceConfig& tol = {}) const;
  // Zero test used throughout for structurally-zero coefficients.
  bool coeff_is_zero(int k, const ToleranceConfig& tol = {}) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }

  bool operator==(const Polynomial& other) const = default;

 private:
  void drop_exact_zeros();

  std::vector<Complex> coeffs_;
};

/// outer(inner(z))
Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner);

/// Coefficientwise comparison, relative to the larger coefficient magnitude.
bool poly_approx_equal(const Polynomial& a, const Polynomial& b, double rel_tol = 1e-9);

/// max_k |a_k - b_k| / max(max|a|, max|b|); 0 for two zero polynomials.
double poly_relative_difference(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p);

}  // namespace juliasym
