#include "juliasym/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace juliasym {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { drop_exact_zeros(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { drop_exact_zeros(); }

void Polynomial::drop_exact_zeros() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::monomial(Complex c, int power) {
  std::vector<Complex> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> v{1.0};
  for (Complex r : roots) {
    v.push_back(0.0);
    for (std::size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r * v[k];
    v[0] = -r * v[0];
  }
  return Polynomial(std::move(v));
}

bool Polynomial::is_monomial(const ToleranceConfig& tol) const {
  if (degree() < 1) return false;
  int nonzero = 0;
  for (int k = 0; k <= degree(); ++k)
    if (!coeff_is_zero(k, tol)) ++nonzero;
  return nonzero == 1;
}

Complex Polynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::centroid() const {
  const int d = degree();
  if (d < 1) return {};
  return -(*this)[d - 1] / (static_cast<double>(d) * leading());
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void Polynomial::eval_derivs(Complex z, Complex& p, Complex& dp, Complex& d2p) const {
  p = dp = d2p = Complex{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    d2p = d2p * z + dp;
    dp = dp * z + p;
    p = p * z + *it;
  }
  d2p *= 2.0;
}

double Polynomial::magnitude_at(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Complex> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(Complex z0) const {
  // repeated synthetic division (Taylor shift)
  std::vector<Complex> v = coeffs_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) v[k - 1] += z0 * v[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(Complex s) const {
  std::vector<Complex> v = coeffs_;
  Complex f = 1.0;
  for (Complex& c : v) {
    c *= f;
    f *= s;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed(int n) const {
  if (n < 0) n = degree();
  if (is_zero()) return {};
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= degree() && k <= n; ++k) v[static_cast<std::size_t>(n - k)] = coeffs_[static_cast<std::size_t>(k)];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int k) const {
  Polynomial result = constant(1.0);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::deflate(Complex r) const {
  if (degree() < 1) return {};
  std::vector<Complex> q(coeffs_.size() - 1);
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k > 0; --k) {
    q[k - 1] = acc;
    acc = coeffs_[k - 1] + r * acc;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return Polynomial(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

bool Polynomial::coeff_is_zero(int k, const ToleranceConfig& tol) const {
  return std::abs((*this)[k]) <= tol.zero_coeff_tol * max_abs_coeff();
}

Polynomial Polynomial::trimmed(const ToleranceConfig& tol) const {
  const double floor = tol.zero_coeff_tol * max_abs_coeff();
  std::vector<Complex> v = coeffs_;
  for (Complex& c : v)
    if (std::abs(c) <= floor) c = 0.0;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Complex& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  drop_exact_zeros();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  drop_exact_zeros();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  drop_exact_zeros();
  return *this;
}

Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc;
  for (int k = outer.degree(); k >= 0; --k) {
    acc *= inner;
    acc += Polynomial::constant(outer[k]);
  }
  return acc;
}

double poly_relative_difference(const Polynomial& a, const Polynomial& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  double diff = 0.0;
  const int n = std::max(a.degree(), b.degree());
  for (int k = 0; k <= n; ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
  return diff / scale;
}

bool poly_approx_equal(const Polynomial& a, const Polynomial& b, double rel_tol) {
  return poly_relative_difference(a, b) <= rel_tol;
}

namespace {

std::string format_coeff(Complex c) {
  char buf[64];
  c += Complex(0.0, 0.0);  // no negative zeros
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
  }
  return buf;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Complex c = p[k];
    if (c == Complex{}) continue;
    std::string sign = "+";
    if ((c.imag() == 0.0 && c.real() < 0.0) || (c.real() == 0.0 && c.imag() < 0.0)) {
      sign = "-";
      c = -c;
    }
    if (first) {
      if (sign == "-") out << "-";
    } else {
      out << " " << sign << " ";
    }
    first = false;
    const bool unit = c == Complex{1.0, 0.0};
    if (k == 0) {
      out << format_coeff(c);
    } else {
      if (!unit) out << format_coeff(c) << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace juliasym
