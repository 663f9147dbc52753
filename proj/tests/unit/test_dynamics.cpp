#include <doctest.h>

#include "juliasym/dynamics.hpp"
#include "juliasym/parse.hpp"
#include "support.hpp"

using namespace juliasym;
using namespace juliasym::testing;

namespace {

RationalMap R(const char* s) { return parse_map(s); }

const FixedPointInfo* find_fixed(const std::vector<FixedPointInfo>& fps, const SpherePoint& w) {
  for (const auto& f : fps)
    if (chordal_distance(f.location, w) < 1e-8) return &f;
  return nullptr;
}

bool cycle_has(const CycleInfo& c, const SpherePoint& w) {
  for (const auto& p : c.points)
    if (chordal_distance(p, w) < 1e-8) return true;
  return false;
}

// Multiplier by finite differences: R'(z) at finite points, g'(0) for
// g(t) = 1/R(1/t) at infinity.
Complex multiplier_oracle(const RationalMap& r, const SpherePoint& z) {
  if (z.is_infinity()) return fd_first([&](Complex t) { return 1.0 / eval_map_naive(r, 1.0 / t); }, 0.0, 1e-5);
  return fd_first([&](Complex w) { return eval_map_naive(r, w); }, z.value());
}

RationalMap random_map(std::mt19937_64& rng, int d) {
  return RationalMap(random_poly(rng, d, 1.0), random_poly(rng, d - (rng() % 2 ? 0 : 1), 1.0));
}

}  // namespace

TEST_CASE("classify_multiplier bands") {
  CHECK(classify_multiplier(0.0) == PointClass::superattracting);
  CHECK(classify_multiplier(1e-10) == PointClass::superattracting);
  CHECK(classify_multiplier(0.5) == PointClass::attracting);
  CHECK(classify_multiplier(2.0) == PointClass::repelling);
  CHECK(classify_multiplier(-1.0) == PointClass::indifferent_rational_candidate);
  CHECK(classify_multiplier(root_of_unity(3, 7)) == PointClass::indifferent_rational_candidate);
  // e^{2 pi i (golden mean)} is no root of unity of order <= 24
  CHECK(classify_multiplier(std::polar(1.0, 2.0 * std::numbers::pi * 0.6180339887498949)) ==
        PointClass::indifferent_irrational_candidate);
}

TEST_CASE("fixed_points: Newton map of z^2+1") {
  const auto fps = fixed_points(R("(z^2-1)/(2z)"));
  const auto* pi = find_fixed(fps, Complex(0.0, 1.0));
  const auto* mi = find_fixed(fps, Complex(0.0, -1.0));
  const auto* inf = find_fixed(fps, SpherePoint::infinity());
  REQUIRE(pi);
  REQUIRE(mi);
  REQUIRE(inf);
  CHECK(pi->classification == PointClass::superattracting);
  CHECK(mi->classification == PointClass::superattracting);
  CHECK(inf->classification == PointClass::repelling);
  // g(z) = 2z/(1-z^2), g'(0) = 2
  CHECK(std::abs(inf->multiplier - Complex(2.0)) < 1e-12);
}

TEST_CASE("fixed_points: z^2 and the Newton map of z^3-1") {
  const auto sq = fixed_points(R("z^2"));
  REQUIRE(sq.size() == 3);
  CHECK(find_fixed(sq, 0.0)->classification == PointClass::superattracting);
  CHECK(find_fixed(sq, SpherePoint::infinity())->classification == PointClass::superattracting);
  CHECK(find_fixed(sq, SpherePoint::infinity())->local_degree == 2);
  CHECK(std::abs(find_fixed(sq, 1.0)->multiplier - Complex(2.0)) < 1e-12);

  const auto n2 = fixed_points(R("(2z^3+1)/(3z^2)"));
  for (int k = 0; k < 3; ++k) {
    const auto* f = find_fixed(n2, root_of_unity(k, 3));
    REQUIRE(f);
    CHECK(f->classification == PointClass::superattracting);
  }
  CHECK(std::abs(find_fixed(n2, SpherePoint::infinity())->multiplier - Complex(1.5)) < 1e-12);
}

TEST_CASE("fixed_points: count d+1 and multipliers agree with finite differences") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 5;
    const RationalMap r = random_map(rng, d);
    if (r.degree() != d) continue;
    const auto fps = fixed_points(r);
    int total = 0;
    for (const auto& f : fps) {
      total += f.multiplicity;
      if (f.multiplicity == 1) CHECK(std::abs(f.multiplier - multiplier_oracle(r, f.location)) < 1e-5 * (1.0 + std::abs(f.multiplier)));
      if (f.local_degree >= 2) CHECK(f.multiplier == Complex(0.0));
      // R(w) = w
      CHECK(chordal_distance(r(f.location), f.location) < 1e-8);
    }
    CHECK(total == d + 1);
  }
}

TEST_CASE("fixed_points: classification matches the multiplier bands") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    const RationalMap r = random_map(rng, 2 + t % 4);
    for (const auto& f : fixed_points(r)) {
      const double a = std::abs(f.multiplier);
      switch (f.classification) {
        case PointClass::superattracting: CHECK(a <= 1e-8); break;
        case PointClass::attracting: CHECK(a < 1.0 - 1e-8); break;
        case PointClass::repelling: CHECK(a > 1.0 + 1e-8); break;
        default: CHECK(std::abs(a - 1.0) <= 1e-8); break;
      }
    }
  }
}

TEST_CASE("local_degree examples") {
  CHECK(local_degree(R("z^2"), 0.0) == 2);
  CHECK(local_degree(R("z^2"), 1.0) == 1);
  CHECK(local_degree(R("(z^2-2)/z^2"), SpherePoint::infinity()) == 2);
  CHECK(local_degree(R("(z^2-2)/z^2"), 0.0) == 2);
  CHECK(local_degree(R("3z^4/(4z^3-1)"), 0.0) == 4);
  CHECK(local_degree(R("z^3 - 1/3"), SpherePoint::infinity()) == 3);
  CHECK(local_degree(R("(z-1)^3/(z^2+1)"), 1.0) == 3);
}

TEST_CASE("critical points satisfy Riemann-Hurwitz and vanish the derivative") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 5;
    const RationalMap r = random_map(rng, d);
    if (r.degree() != d) continue;
    int total = 0;
    for (const auto& c : critical_points(r)) {
      total += c.multiplicity;
      CHECK(local_degree(r, c.location) == c.multiplicity + 1);
    }
    CHECK(total == 2 * d - 2);
  }
  int total = 0;
  for (const auto& c : critical_points(R("3z^4/(4z^3-1)"))) total += c.multiplicity;
  CHECK(total == 6);
}

TEST_CASE("cycle_multiplier is the product of derivatives along the cycle") {
  // z^2 - 1: 2-cycle {0, -1} has multiplier 4 * 0 * (-1) = 0; z^2 + 0.25 fixed point 1/2 multiplier 1
  CHECK(cycle_multiplier(R("z^2 - 1"), {0.0, -1.0}) == Complex(0.0));
  CHECK(std::abs(cycle_multiplier(R("z^2 + 0.25"), {0.5}) - Complex(1.0)) < 1e-14);
  // the 2-cycle of z^2 + c solves z^2 + z + c + 1 = 0
  const Complex c = -1.3;
  const Complex disc = std::sqrt(Complex(1.0) - 4.0 * (c + 1.0));
  const Complex a = (-1.0 + disc) / 2.0, b = (-1.0 - disc) / 2.0;
  const RationalMap r(Polynomial{c, 0.0, 1.0});
  CHECK(std::abs(cycle_multiplier(r, {a, b}) - 4.0 * a * b) < 1e-12);
}

TEST_CASE("attracting_cycles examples") {
  const auto c3 = attracting_cycles(R("(z^2-1)/z^2"), 3);
  bool found = false;
  for (const auto& c : c3)
    if (c.period == 3 && cycle_has(c, 0.0) && cycle_has(c, SpherePoint::infinity()) && cycle_has(c, 1.0)) {
      found = true;
      CHECK(c.classification == PointClass::superattracting);
      CHECK(c.contains_infinity());
    }
  CHECK(found);

  const auto mc = attracting_cycles(R("z^2 + 0.01/z"), 1);
  bool inf = false;
  for (const auto& c : mc)
    if (c.period == 1 && c.contains_infinity()) inf = c.classification == PointClass::superattracting;
  CHECK(inf);

  const auto q = attracting_cycles(R("z^2 - 1"), 2);
  found = false;
  for (const auto& c : q)
    if (c.period == 2 && cycle_has(c, 0.0) && cycle_has(c, -1.0)) found = c.classification == PointClass::superattracting;
  CHECK(found);

  CHECK_THROWS_AS(attracting_cycles(R("z^5 + 0.3"), 6), Error);
}

TEST_CASE("attracting cycles are cyclically permuted and re-attract perturbed seeds") {
  for (const char* s : {"z^2 - 1", "z^2 - 0.12 + 0.75i", "(z^2-1)/z^2", "z^2 + 0.01/z", "(2z^3+1)/(3z^2)",
                        "z^2(z^2-2)/(z^2+1)", "z^3 - 1/3"}) {
    const RationalMap r = R(s);
    const auto cycles = attractor_inventory(r);
    REQUIRE(!cycles.empty());
    std::mt19937_64 rng(34);
    for (const auto& c : cycles) {
      CHECK(c.period == static_cast<int>(c.points.size()));
      CHECK(std::abs(c.multiplier) < 1.0);
      for (std::size_t j = 0; j < c.points.size(); ++j)
        CHECK(chordal_distance(r(c.points[j]), c.points[(j + 1) % c.points.size()]) < 1e-7);
      for (const auto& p : c.points) {
        SpherePoint z = p.is_infinity() ? SpherePoint(1e4) : SpherePoint(p.value() + random_complex(rng, 1e-4));
        for (int k = 0; k < 200 * c.period; ++k) z = r(z);
        double best = 2.0;
        for (const auto& q : c.points) best = std::min(best, chordal_distance(z, q));
        CHECK(best < 1e-6);
      }
    }
  }
}

TEST_CASE("attractor_inventory finds long cycles through critical orbits") {
  // z^2 - 1.7549 (the airplane) has a superattracting 3-cycle; c = -1.3 an attracting 4-cycle
  const auto airplane = attractor_inventory(R("z^2 - 1.75487766624669"));
  bool three = false;
  for (const auto& c : airplane) three = three || c.period == 3;
  CHECK(three);
  const auto four = attractor_inventory(R("z^2 - 1.3"));
  bool p4 = false;
  for (const auto& c : four) p4 = p4 || c.period == 4;
  CHECK(p4);
  // period 5 is only reachable through the critical orbit: z^2 + c with c near the period-5 center
  const auto five = critical_orbit_attractors(R("z^2 - 1.985424253"));
  bool p5 = false;
  for (const auto& c : five) p5 = p5 || c.period == 5;
  CHECK(p5);
}

TEST_CASE("orbit_capture and critical_orbits_captured") {
  const RationalMap r = R("z^2");
  const auto cycles = attractor_inventory(r);
  const auto in = orbit_capture(r, Complex(0.5), cycles);
  const auto out = orbit_capture(r, Complex(2.0), cycles);
  REQUIRE(in);
  REQUIRE(out);
  CHECK(cycles[static_cast<std::size_t>(*in)].points[0] == SpherePoint(0.0));
  CHECK(cycles[static_cast<std::size_t>(*out)].contains_infinity());
  CHECK_FALSE(orbit_capture(r, Complex(1.0), cycles));
  CHECK(critical_orbits_captured(r, cycles));

  // Newton map of z^3-1: the free critical point 0 is a prepole of the repelling fixed point infinity
  const RationalMap n = R("(2z^3+1)/(3z^2)");
  CHECK_FALSE(critical_orbits_captured(n, attractor_inventory(n)));
  // z^2 + 1/4 is parabolic: its critical orbit only creeps towards 1/2
  const RationalMap par = R("z^2 + 0.25");
  CHECK_FALSE(critical_orbits_captured(par, attractor_inventory(par)));
}
