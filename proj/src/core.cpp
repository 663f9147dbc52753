#include "juliasym/core.hpp"

#include <cmath>
#include <cstdio>

namespace juliasym {

void ToleranceConfig::validate() const {
  if (!(coeff_rel_tol > 0.0) || !(root_cluster_tol > 0.0) || !(zero_coeff_tol > 0.0))
    throw Error(ErrorKind::InvalidParameters, "algebra", "tolerances must be positive");
  if (!(coeff_rel_tol < 1.0))
    throw Error(ErrorKind::InvalidParameters, "algebra", "coeff_rel_tol must be below 1");
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InfiniteFamily: return "InfiniteFamily";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NoExceptionalPoint: return "NoExceptionalPoint";
    case ErrorKind::TwoExceptionalPoints: return "TwoExceptionalPoints";
    case ErrorKind::BetaTooSmall: return "BetaTooSmall";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::DegenerateMethod: return "DegenerateMethod";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::EmptyMask: return "EmptyMask";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, std::string module, const std::string& message)
    : std::runtime_error(module + ": " + to_string(kind) + ": " + message),
      kind_(kind),
      module_(std::move(module)) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::Parse, "parse", "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const Complex z = a.value();
  const Complex w = b.value();
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

Complex root_of_unity(int k, int n) {
  k %= n;
  if (k < 0) k += n;
  // quarter turns are exact
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double t = 2.0 * std::numbers::pi * k / n;
  return {std::cos(t), std::sin(t)};
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string format_point(const SpherePoint& p) {
  return p.is_infinity() ? std::string("inf") : format_complex(p.value());
}

}  // namespace juliasym
