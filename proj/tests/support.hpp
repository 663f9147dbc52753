#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "juliasym/polynomial.hpp"
#include "juliasym/rational.hpp"

namespace juliasym::testing {

inline Complex random_complex(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

// Random complex number with modulus in [lo, hi], for coefficients that must
// stay structurally nonzero.
inline Complex random_nonzero(std::mt19937_64& rng, double lo = 0.5, double hi = 1.5) {
  std::uniform_real_distribution<double> mod(lo, hi), arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(mod(rng), arg(rng));
}

inline Polynomial random_poly(std::mt19937_64& rng, int degree, double radius = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_complex(rng, radius);
  c.back() = random_nonzero(rng);
  return Polynomial(std::move(c));
}

// Naive power-sum evaluation, independent of Horner.
inline Complex eval_naive(const Polynomial& p, Complex z) {
  Complex acc{};
  for (int k = 0; k <= p.degree(); ++k) acc += p[k] * std::pow(z, k);
  return acc;
}

// Brute-force product by the convolution definition written out longhand.
inline Polynomial multiply_naive(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (int k = 0; k < static_cast<int>(c.size()); ++k)
    for (int i = 0; i <= k; ++i) c[static_cast<std::size_t>(k)] += a[i] * b[k - i];
  return Polynomial(std::move(c));
}

// outer(inner) by summing a_k inner^k with naive products.
inline Polynomial compose_naive(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc;
  Polynomial power = Polynomial::constant(1.0);
  for (int k = 0; k <= outer.degree(); ++k) {
    acc += power * outer[k];
    power = multiply_naive(power, inner);
  }
  return acc;
}

// g = z^alpha p0(z^beta), monic and centered, with the exponent gcd of p0
// equal to 1 so beta is exactly the planted value.
struct Planted {
  Polynomial g;
  int alpha = 0;
  int beta = 1;
};

inline Planted planted_poly(std::mt19937_64& rng, int beta, int max_degree = 18) {
  std::uniform_int_distribution<int> alpha_dist(0, 3);
  for (;;) {
    const int alpha = alpha_dist(rng);
    const int kmax = (max_degree - alpha) / beta;
    const int kmin = beta == 1 ? 3 : 1;
    if (kmax < kmin) continue;
    const int k = std::uniform_int_distribution<int>(kmin, kmax)(rng);
    const int d = alpha + beta * k;
    if (d < 2) continue;
    std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(alpha + beta * j)] = random_nonzero(rng, 0.3, 1.5);
    c[static_cast<std::size_t>(d)] = 1.0;
    // beta = 1: drop z^{d-1} to stay centered; k >= 3 keeps the exponent gcd at 1
    if (beta == 1) c[static_cast<std::size_t>(d - 1)] = 0.0;
    return {Polynomial(std::move(c)), alpha, beta};
  }
}

// psi o p o psi^{-1} for psi(z) = a z + b, by naive composition.
inline Polynomial affine_conjugate(const Polynomial& p, Complex a, Complex b) {
  const Polynomial inv{-b / a, 1.0 / a};
  return compose_naive(p, inv) * a + Polynomial::constant(b);
}

// R(z) from the raw coefficient lists; infinite at poles.
inline Complex eval_map_naive(const RationalMap& r, Complex z) { return eval_naive(r.num(), z) / eval_naive(r.den(), z); }

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Central finite difference of order 1 and 2 for a complex-analytic function.
template <class F>
Complex fd_first(F f, Complex z, double h = 1e-5) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

template <class F>
Complex fd_second(F f, Complex z, double h = 1e-4) {
  return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
}

}  // namespace juliasym::testing
