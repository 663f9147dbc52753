#include "juliasym/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "juliasym/roots.hpp"

namespace juliasym {

namespace {

// Drops leading coefficients that are negligible against the largest one.
Polynomial strip_leading_noise(const Polynomial& p, const ToleranceConfig& tol) {
  const double floor = tol.zero_coeff_tol * p.max_abs_coeff();
  int d = p.degree();
  while (d >= 0 && std::abs(p[d]) <= floor) --d;
  if (d == p.degree()) return p;
  return Polynomial(std::vector<Complex>(p.coeffs().begin(), p.coeffs().begin() + (d + 1)));
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Evaluates sum c_k x^{n-k}, i.e. x^n p(1/x).
Complex eval_reversed(const Polynomial& p, Complex x) {
  Complex acc{};
  for (Complex c : p.coeffs()) acc = acc * x + c;
  return acc;
}

Complex int_power(Complex z, int k) {
  Complex r = 1.0;
  Complex b = k < 0 ? 1.0 / z : z;
  for (unsigned e = static_cast<unsigned>(std::abs(k)); e; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

RationalMap::RationalMap(const Polynomial& num, const Polynomial& den, const ToleranceConfig& tol) {
  *this = rational_reduce(num, den, tol);
}

RationalMap::RationalMap(const Polynomial& poly) : num_(poly), den_(Polynomial::constant(1.0)) {}

RationalMap RationalMap::assume_reduced(const Polynomial& num, const Polynomial& den) {
  const ToleranceConfig tol;
  Polynomial n = strip_leading_noise(num, tol);
  Polynomial d = strip_leading_noise(den, tol);
  if (d.is_zero()) throw Error(ErrorKind::DegenerateResult, "algebra", "denominator is identically zero");
  const Complex lead = d.leading();
  n *= 1.0 / lead;
  d *= 1.0 / lead;
  std::vector<Complex> dc(d.coeffs().begin(), d.coeffs().end());
  dc.back() = 1.0;
  RationalMap r;
  r.num_ = std::move(n);
  r.den_ = Polynomial(std::move(dc));
  return r;
}

RationalMap RationalMap::constant(Complex c) { return RationalMap(Polynomial::constant(c)); }

Polynomial RationalMap::as_polynomial() const { return num_ * (1.0 / den_[0]); }

SpherePoint RationalMap::operator()(const SpherePoint& p) const {
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (p.is_infinity()) {
    if (dn > dd) return SpherePoint::infinity();
    if (dn < dd) return Complex{};
    return num_.leading() / den_.leading();
  }
  const Complex z = p.value();
  Complex value;
  if (std::abs(z) <= 1.0) {
    const Complex q = den_(z);
    const Complex n = num_(z);
    if (q == Complex{}) return SpherePoint::infinity();
    value = n / q;
  } else {
    const Complex w = 1.0 / z;
    const Complex q = eval_reversed(den_, w);
    if (q == Complex{}) return SpherePoint::infinity();
    value = int_power(z, dn - dd) * (eval_reversed(num_, w) / q);
  }
  if (!finite(value)) return SpherePoint::infinity();
  return value;
}

Complex RationalMap::operator()(Complex z) const { return num_(z) / den_(z); }

void RationalMap::eval_derivs(Complex z, Complex& r, Complex& dr, Complex& d2r) const {
  Complex p, dp, d2p, q, dq, d2q;
  num_.eval_derivs(z, p, dp, d2p);
  den_.eval_derivs(z, q, dq, d2q);
  r = p / q;
  dr = (dp - r * dq) / q;
  d2r = (d2p - 2.0 * dr * dq - r * d2q) / q;
}

Complex RationalMap::derivative_at(Complex z) const {
  Complex r, dr, d2r;
  eval_derivs(z, r, dr, d2r);
  return dr;
}

RationalMap RationalMap::derivative(const ToleranceConfig& tol) const {
  return rational_reduce(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, tol);
}

RationalMap rational_reduce(const Polynomial& num_in, const Polynomial& den_in, const ToleranceConfig& tol) {
  Polynomial num = strip_leading_noise(num_in, tol);
  Polynomial den = strip_leading_noise(den_in, tol);
  if (den.is_zero()) throw Error(ErrorKind::DegenerateResult, "algebra", "denominator is identically zero");
  if (num.is_zero()) return RationalMap::constant(0.0);
  if (den.degree() > 0 && num.degree() > 0) {
    for (const Root& r : poly_roots(den, tol)) {
      const int shared = std::min(r.multiplicity, vanishing_order(num, r.value, tol.root_cluster_tol));
      for (int k = 0; k < shared; ++k) {
        num = num.deflate(r.value);
        den = den.deflate(r.value);
      }
      if (num.degree() < 1) break;
    }
  }
  return RationalMap::assume_reduced(num, den);
}

RationalMap rational_compose(const RationalMap& outer, const RationalMap& inner) {
  const int d = outer.degree();
  const Polynomial& u = inner.num();
  const Polynomial& v = inner.den();
  // homogeneous substitution: sum p_k u^k v^{d-k}; for coprime inputs the
  // resulting pair is coprime again
  std::vector<Polynomial> upow{Polynomial::constant(1.0)}, vpow{Polynomial::constant(1.0)};
  for (int k = 1; k <= d; ++k) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  Polynomial num, den;
  for (int k = 0; k <= d; ++k) {
    const Polynomial term = upow[static_cast<std::size_t>(k)] * vpow[static_cast<std::size_t>(d - k)];
    if (outer.num()[k] != Complex{}) num += term * outer.num()[k];
    if (outer.den()[k] != Complex{}) den += term * outer.den()[k];
  }
  RationalMap r = RationalMap::assume_reduced(num, den);
  if (r.degree() < 1 && outer.degree() >= 1 && inner.degree() >= 1)
    throw Error(ErrorKind::DegenerateResult, "algebra", "composition collapsed to a constant");
  return r;
}

RationalMap rational_iterate_square(const RationalMap& r) { return rational_compose(r, r); }

RationalMap rational_iterate(const RationalMap& r, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "algebra", "iterate count must be >= 1");
  RationalMap acc = r;
  for (int k = 1; k < n; ++k) acc = rational_compose(r, acc);
  return acc;
}

RationalMap rational_ops(const RationalMap& r, const RationalMap& s, RationalOp kind, const ToleranceConfig& tol) {
  switch (kind) {
    case RationalOp::compose: return rational_compose(r, s);
    case RationalOp::iterate_square: return rational_iterate_square(r);
    case RationalOp::reduce: return rational_reduce(r.num(), r.den(), tol);
  }
  return r;
}

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
  return rational_reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) {
  return rational_reduce(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  return rational_reduce(a.num() * b.num(), a.den() * b.den());
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  if (b.num().is_zero()) throw Error(ErrorKind::DegenerateResult, "algebra", "division by zero");
  return rational_reduce(a.num() * b.den(), a.den() * b.num());
}

double rational_difference(const RationalMap& a, const RationalMap& b) {
  const Polynomial lhs = a.num() * b.den();
  const Polynomial rhs = b.num() * a.den();
  return poly_relative_difference(lhs, rhs);
}

bool rational_equal(const RationalMap& a, const RationalMap& b, const ToleranceConfig& tol) {
  return rational_difference(a, b) <= tol.coeff_rel_tol;
}

std::string to_string(const RationalMap& r) {
  if (r.is_polynomial()) return to_string(r.as_polynomial());
  return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

bool MobiusTransform::invertible(double rel_tol) const {
  const double scale = std::max({std::abs(a * d), std::abs(b * c), 1e-300});
  return std::abs(determinant()) > rel_tol * scale;
}

MobiusTransform MobiusTransform::inverse() const {
  if (!invertible()) throw Error(ErrorKind::DegenerateResult, "algebra", "Mobius transform is singular");
  return {d, -b, -c, a};
}

SpherePoint MobiusTransform::operator()(const SpherePoint& p) const {
  if (p.is_infinity()) {
    if (c == Complex{}) return SpherePoint::infinity();
    return a / c;
  }
  const Complex z = p.value();
  const Complex den = c * z + d;
  if (den == Complex{}) return SpherePoint::infinity();
  const Complex v = (a * z + b) / den;
  if (!finite(v)) return SpherePoint::infinity();
  return v;
}

RationalMap MobiusTransform::as_map() const {
  if (!invertible()) throw Error(ErrorKind::DegenerateResult, "algebra", "Mobius transform is singular");
  return RationalMap::assume_reduced(Polynomial{b, a}, Polynomial{d, c});
}

MobiusTransform compose(const MobiusTransform& f, const MobiusTransform& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

bool mobius_equal(const MobiusTransform& f, const MobiusTransform& g, double rel_tol) {
  auto unit = [](const MobiusTransform& m) {
    const Complex s = std::sqrt(m.determinant());
    return MobiusTransform{m.a / s, m.b / s, m.c / s, m.d / s};
  };
  const MobiusTransform x = unit(f);
  const MobiusTransform y = unit(g);
  auto dist = [](const MobiusTransform& p, const MobiusTransform& q, double sign) {
    return std::max({std::abs(p.a - sign * q.a), std::abs(p.b - sign * q.b), std::abs(p.c - sign * q.c),
                     std::abs(p.d - sign * q.d)});
  };
  const double scale = std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d), 1.0});
  return std::min(dist(x, y, 1.0), dist(x, y, -1.0)) <= rel_tol * scale;
}

RationalMap mobius_conjugate(const RationalMap& r, const MobiusTransform& phi) {
  const RationalMap outer = phi.as_map();
  const RationalMap inner = phi.inverse().as_map();
  RationalMap s = rational_compose(outer, rational_compose(r, inner));
  if (s.degree() != r.degree())
    throw Error(ErrorKind::DegenerateResult, "algebra", "conjugation changed the degree");
  return s;
}

std::string to_string(const MobiusTransform& m) {
  return "(" + to_string(Polynomial{m.b, m.a}) + ") / (" + to_string(Polynomial{m.d, m.c}) + ")";
}

}  // namespace juliasym
