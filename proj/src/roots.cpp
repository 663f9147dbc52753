#include "juliasym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace juliasym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Polynomial abs_coeffs(const Polynomial& p) {
  std::vector<Complex> v;
  v.reserve(p.coeffs().size());
  for (Complex c : p.coeffs()) v.emplace_back(std::abs(c), 0.0);
  return Polynomial(std::move(v));
}

struct Step {
  Complex newton;    // p / p'
  double residual;   // backward error of p at z
};

// Newton correction and backward error, evaluated through the reversed
// polynomial outside the unit disk so that high degrees do not overflow.
Step newton_step(const Polynomial& p, Complex z) {
  const int n = p.degree();
  const auto c = p.coeffs();
  if (std::abs(z) <= 1.0) {
    Complex v{}, dv{};
    double mag = 0.0;
    const double r = std::abs(z);
    for (int k = n; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
      mag = mag * r + std::abs(c[static_cast<std::size_t>(k)]);
    }
    return {dv == Complex{} ? Complex{} : v / dv, mag == 0.0 ? 0.0 : std::abs(v) / mag};
  }
  const Complex w = 1.0 / z;
  const double r = std::abs(w);
  Complex q{}, dq{};
  double mag = 0.0;
  for (int k = 0; k <= n; ++k) {  // q(w) = sum a_k w^{n-k}
    dq = dq * w + q;
    q = q * w + c[static_cast<std::size_t>(k)];
    mag = mag * r + std::abs(c[static_cast<std::size_t>(k)]);
  }
  const Complex denom = static_cast<double>(n) * q - w * dq;
  return {denom == Complex{} ? Complex{} : z * q / denom, mag == 0.0 ? 0.0 : std::abs(q) / mag};
}

// Aberth-Ehrlich on a monic polynomial with nonzero constant term.
bool aberth(const Polynomial& p, std::vector<Complex>& z, int max_iterations) {
  const std::size_t n = z.size();
  const double stop = 4.0 * static_cast<double>(n + 1) * kEps;
  std::vector<char> done(n, 0);
  for (int it = 0; it < max_iterations; ++it) {
    std::size_t remaining = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Step s = newton_step(p, z[i]);
      if (s.residual <= stop) {
        done[i] = 1;
        continue;
      }
      Complex sum{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const Complex w = s.newton / (1.0 - s.newton * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) {
        done[i] = 1;
        continue;
      }
      ++remaining;
    }
    if (remaining == 0) return true;
  }
  return false;
}

std::vector<Complex> initial_guesses(const Polynomial& monic, std::mt19937_64* rng) {
  const int n = monic.degree();
  double radius = std::pow(std::abs(monic[0]), 1.0 / n);
  // keep the start circle inside the Cauchy bound
  double cauchy = 0.0;
  for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(monic[k]));
  radius = std::clamp(radius, 1e-12, 1.0 + cauchy);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    double r = radius;
    if (rng) {
      angle += 2.0 * std::numbers::pi * u(*rng) / n;
      r *= 0.5 + u(*rng);
    }
    z[static_cast<std::size_t>(k)] = std::polar(r, angle);
  }
  return z;
}

Complex mean(std::span<const Complex> v) {
  Complex s{};
  for (Complex c : v) s += c;
  return s / static_cast<double>(v.size());
}

// Single-linkage grouping within radius(z) = rel * max(1, |z|).
std::vector<std::vector<Complex>> link_clusters(std::span<const Complex> pts, double rel) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) <= rel * scale) parent[find(i)] = find(j);
    }
  std::vector<std::vector<Complex>> groups;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(pts[i]);
  }
  return groups;
}

Complex polish(const Polynomial& p, Complex z) {
  double best = newton_step(p, z).residual;
  for (int k = 0; k < 3 && best > 0.0; ++k) {
    const Step s = newton_step(p, z);
    const Complex cand = z - s.newton;
    const double r = newton_step(p, cand).residual;
    if (!(r < best)) break;
    z = cand;
    best = r;
  }
  return z;
}

// Newton on p^{(m-1)}, whose root is simple at an m-fold root of p; this
// recovers the centre far more accurately than the cluster mean.
Complex refine_cluster(const Polynomial& p, Complex c, int m) {
  Polynomial g = p;
  for (int k = 1; k < m; ++k) g = g.derivative();
  const Polynomial dg = g.derivative();
  double best = std::abs(g(c));
  for (int k = 0; k < 8 && best > 0.0; ++k) {
    const Complex slope = dg(c);
    if (slope == Complex{}) break;
    const Complex cand = c - g(c) / slope;
    const double r = std::abs(g(cand));
    if (!(r < best)) break;
    c = cand;
    best = r;
  }
  return c;
}

}  // namespace

double relative_residual(const Polynomial& p, Complex z) { return newton_step(p, z).residual; }

int vanishing_order(const Polynomial& p, Complex z, double rel_tol) {
  const Polynomial taylor = p.shifted(z);
  const Polynomial scale = abs_coeffs(p).shifted(Complex(std::abs(z), 0.0));
  int k = 0;
  while (k <= p.degree()) {
    const double s = std::abs(scale[k]);
    if (std::abs(taylor[k]) > rel_tol * s + std::numeric_limits<double>::min()) break;
    ++k;
  }
  return k;
}

std::vector<Root> poly_roots(const Polynomial& p, const ToleranceConfig& tol, const RootFinderOptions& opts) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "algebra", "poly_roots needs degree >= 1");
  if (d > opts.max_degree)
    throw Error(ErrorKind::DegreeOverflow, "algebra",
                "degree " + std::to_string(d) + " exceeds root finder cap " + std::to_string(opts.max_degree));

  // zero roots are split off exactly
  int zeros = 0;
  while (zeros < d && p.coeff_is_zero(zeros, tol)) ++zeros;
  std::vector<Root> out;
  if (zeros > 0) out.push_back({Complex{}, zeros});

  Polynomial q = p.shift_down(zeros);
  const int n = q.degree();
  std::vector<Complex> flat;
  if (n == 1) {
    flat.push_back(-q[0] / q[1]);
  } else if (n > 1) {
    q *= 1.0 / q.leading();
    std::vector<Complex> z = initial_guesses(q, nullptr);
    bool ok = aberth(q, z, opts.max_iterations);
    std::mt19937_64 rng(0x5eedULL);
    std::vector<Complex> best = z;
    auto worst = [&](const std::vector<Complex>& v) {
      double w = 0.0;
      for (Complex c : v) w = std::max(w, relative_residual(q, c));
      return w;
    };
    double best_res = worst(z);
    for (int attempt = 0; !ok && attempt < opts.restarts; ++attempt) {
      z = initial_guesses(q, &rng);
      ok = aberth(q, z, opts.max_iterations);
      const double r = worst(z);
      if (r < best_res) {
        best_res = r;
        best = z;
      }
    }
    if (!ok) z = best;
    if (!ok && best_res > 1e-6)
      throw Error(ErrorKind::NonConvergence, "algebra",
                  "Aberth iteration did not converge; worst relative residual " + std::to_string(best_res));
    flat = std::move(z);
  }

  const double loose = 2e-2;
  const double verify_tol = 1e-10;
  for (auto& group : link_clusters(flat, loose)) {
    if (group.size() == 1) {
      out.push_back({polish(q, group[0]), 1});
      continue;
    }
    const int m = static_cast<int>(group.size());
    const Complex c = refine_cluster(q, mean(group), m);
    if (vanishing_order(q, c, verify_tol) >= m) {
      out.push_back({c, m});
      continue;
    }
    for (auto& sub : link_clusters(group, tol.root_cluster_tol)) {
      const int k = static_cast<int>(sub.size());
      out.push_back({k == 1 ? polish(q, sub[0]) : mean(sub), k});
    }
  }

  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

std::vector<Complex> poly_roots_flat(const Polynomial& p, const ToleranceConfig& tol) {
  std::vector<Complex> v;
  for (const Root& r : poly_roots(p, tol))
    for (int k = 0; k < r.multiplicity; ++k) v.push_back(r.value);
  return v;
}

}  // namespace juliasym
