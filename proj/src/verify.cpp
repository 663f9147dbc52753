#include "juliasym/verify.hpp"

#include <cmath>

namespace juliasym {

double functional_equation_check(const RationalMap& r, Complex lambda, int m) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidParameters, "verify", "rotation multiplier must have modulus 1");
  const Complex lm = std::pow(lambda, -m);
  const Polynomial lhs = r.num().scaled(lambda) * r.den() * lm;
  const Polynomial rhs = r.num() * r.den().scaled(lambda);
  return poly_relative_difference(lhs, rhs);
}

RotationOrderReport detect_rotation_order(const RationalMap& r, int k_max, Complex center,
                                          const ToleranceConfig& tol) {
  if (k_max < 1) throw Error(ErrorKind::InvalidParameters, "verify", "K_max must be at least 1");
  const RationalMap s = center == Complex{} ? r : mobius_conjugate(r, MobiusTransform::translation(-center));
  const int m_max = 2 * s.degree();
  RotationOrderReport report;
  report.center = center;
  for (int k = k_max; k >= 1; --k) {
    const Complex lambda = root_of_unity(1, k);
    double best = std::numeric_limits<double>::infinity();
    int best_m = 0;
    for (int m = 0; m <= m_max; ++m) {
      ++report.candidates_tested;
      const double res = functional_equation_check(s, lambda, m);
      if (res < best) {
        best = res;
        best_m = m;
      }
      if (res <= tol.coeff_rel_tol) break;
    }
    if (best <= tol.coeff_rel_tol) {
      report.order_found = k;
      report.exponent_m = best_m;
      report.residual = best;
      return report;
    }
  }
  return report;
}

double image_symmetry_score(const BoundaryMask& mask, Complex center, int order, int dilate) {
  if (order < 1) throw Error(ErrorKind::InvalidParameters, "verify", "order must be at least 1");
  if (dilate < 0) throw Error(ErrorKind::InvalidParameters, "verify", "dilate must be nonnegative");
  const GridSpec& g = mask.grid;
  const int n = g.pixels;
  double crow, ccol;
  g.locate(center, crow, ccol);
  if (crow < 0 || ccol < 0 || crow > n - 1 || ccol > n - 1)
    throw Error(ErrorKind::InvalidParameters, "verify", "rotation center lies outside the grid");
  // rotated points of the inscribed disk stay on the grid
  const double radius = std::min({crow + 0.5, ccol + 0.5, n - 0.5 - crow, n - 0.5 - ccol}) - 1.5;
  const Complex lambda = root_of_unity(1, order);
  std::size_t tested = 0, misses = 0;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      if (!mask.at(row, col)) continue;
      const Complex offset(col - ccol, crow - row);  // pixel units, imaginary axis up
      if (std::abs(offset) > radius) continue;
      ++tested;
      const Complex rotated = lambda * offset;
      const int rc = static_cast<int>(std::lround(ccol + rotated.real()));
      const int rr = static_cast<int>(std::lround(crow - rotated.imag()));
      bool hit = false;
      for (int dr = -dilate; dr <= dilate && !hit; ++dr)
        for (int dc = -dilate; dc <= dilate && !hit; ++dc) {
          const int r2 = rr + dr, c2 = rc + dc;
          if (r2 >= 0 && r2 < n && c2 >= 0 && c2 < n && mask.at(r2, c2)) hit = true;
        }
      if (!hit) ++misses;
    }
  if (tested == 0) throw Error(ErrorKind::EmptyMask, "verify", "no marked pixels inside the scoring disk");
  return static_cast<double>(misses) / static_cast<double>(tested);
}

const char* to_string(TranslationHeuristic h) {
  switch (h) {
    case TranslationHeuristic::bounded_julia: return "bounded_julia";
    case TranslationHeuristic::infinity_in_fatou: return "infinity_in_fatou";
    case TranslationHeuristic::unknown: return "unknown";
  }
  return "?";
}

TranslationHeuristic translation_invariance_heuristic(const RationalMap& r) {
  if (r.degree() < 2) return TranslationHeuristic::unknown;
  if (r.is_polynomial() || r.num().degree() > r.den().degree() + 1) return TranslationHeuristic::bounded_julia;
  const std::vector<CycleInfo> cycles = attractor_inventory(r);
  if (orbit_capture(r, SpherePoint::infinity(), cycles)) return TranslationHeuristic::infinity_in_fatou;
  return TranslationHeuristic::unknown;
}

}  // namespace juliasym
