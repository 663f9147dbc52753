#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace juliasym {

using Complex = std::complex<double>;

/// Tolerances shared by every equality and zero test in the library.
struct ToleranceConfig {
  double coeff_rel_tol = 1e-9;
  double root_cluster_tol = 1e-8;
  // relative to the largest coefficient magnitude of the polynomial in question
  double zero_coeff_tol = 1e-12;

  void validate() const;
};

enum class ErrorKind {
  Parse,
  NonConvergence,
  DegenerateResult,
  NotNormalized,
  InfiniteFamily,
  HypothesisViolated,
  NoExceptionalPoint,
  TwoExceptionalPoints,
  BetaTooSmall,
  InvalidParameters,
  DegenerateMethod,
  DegreeOverflow,
  EmptyMask,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message);

  ErrorKind kind() const { return kind_; }
  const std::string& module() const { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A point of the Riemann sphere. The point at infinity is a marker, never a large float.
class SpherePoint {
 public:
  constexpr SpherePoint() = default;
  constexpr SpherePoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  constexpr SpherePoint(double x) : z_(x, 0.0) {}  // NOLINT(google-explicit-constructor)

  static constexpr SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinity() const { return infinite_; }
  // Only meaningful for finite points.
  constexpr Complex value() const { return z_; }

  bool operator==(const SpherePoint& other) const {
    return infinite_ == other.infinite_ && (infinite_ || z_ == other.z_);
  }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// Chordal distance on the sphere, 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)); at most 2.
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

/// e^{2 pi i k / n}
Complex root_of_unity(int k, int n);

std::string format_complex(Complex z);
std::string format_point(const SpherePoint& p);

}  // namespace juliasym
