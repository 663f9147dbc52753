#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "juliasym/parse.hpp"
#include "juliasym/render.hpp"
#include "support.hpp"

using namespace juliasym;
using namespace juliasym::testing;

namespace {

RationalMap R(const char* s) { return parse_map(s); }

GridSpec grid(Complex center, double width, int pixels) {
  GridSpec g;
  g.center = center;
  g.width = width;
  g.pixels = pixels;
  return g;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("juliasym_test_") + name)).string();
}

// Fraction of marked pixels whose center lies within `tol` of the curve given by `dist`.
template <class Dist>
double fraction_near(const BoundaryMask& m, Dist dist, double tol) {
  std::size_t near = 0, total = 0;
  for (int r = 0; r < m.grid.pixels; ++r)
    for (int c = 0; c < m.grid.pixels; ++c)
      if (m.at(r, c)) {
        ++total;
        if (dist(m.grid.point(r, c)) <= tol) ++near;
      }
  return total ? static_cast<double>(near) / static_cast<double>(total) : 0.0;
}

}  // namespace

TEST_CASE("GridSpec pixel centers and validation") {
  const GridSpec g = grid(Complex(1.0, -1.0), 4.0, 16);
  CHECK(g.pixel_size() == 0.25);
  // top-left pixel center and bottom-right pixel center
  CHECK(std::abs(g.point(0, 0) - Complex(1.0 - 2.0 + 0.125, -1.0 + 2.0 - 0.125)) < 1e-15);
  CHECK(std::abs(g.point(15, 15) - Complex(1.0 + 2.0 - 0.125, -1.0 - 2.0 + 0.125)) < 1e-15);
  double row = 0, col = 0;
  g.locate(g.point(3, 7), row, col);
  CHECK(std::abs(row - 3.0) < 1e-12);
  CHECK(std::abs(col - 7.0) < 1e-12);
  CHECK_THROWS_AS(grid(0.0, 4.0, 15).validate(), Error);
  CHECK_THROWS_AS(grid(0.0, 0.0, 64).validate(), Error);
  CHECK_THROWS_AS(grid(0.0, -1.0, 64).validate(), Error);
}

TEST_CASE("render z^2: inside the disk goes to 0, outside to infinity") {
  const RationalMap r = R("z^2");
  const BasinImage img = render_basins(r, grid(0.0, 4.0, 64));
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 64; ++col) {
      const Complex z = img.grid.point(row, col);
      const std::int32_t l = img.label(row, col);
      if (std::abs(std::abs(z) - 1.0) < 0.05) continue;
      REQUIRE(l != kUndecided);
      const CycleInfo& c = img.attractors[static_cast<std::size_t>(img.cycle_of(l))];
      if (std::abs(z) < 1.0) CHECK(c.points[0] == SpherePoint(0.0));
      else CHECK(c.contains_infinity());
    }
}

TEST_CASE("render Newton map of z^2+1: two labels split by the real axis") {
  const BasinImage img = render_basins(R("(z^2-1)/(2z)"), grid(Complex(0.0, 0.03), 4.0, 64));
  const std::int32_t top = img.label(0, 0), bottom = img.label(63, 0);
  CHECK(top != bottom);
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 64; ++col) {
      const double y = img.grid.point(row, col).imag();
      if (std::abs(y) < 1e-9) continue;
      CHECK(img.label(row, col) == (y > 0 ? top : bottom));
    }
}

TEST_CASE("every labeled pixel really ends in its attractor (spot check)") {
  for (const char* s : {"z^3 - 1/3", "(z^2-1)/z^2", "3z^4/(4z^3-1)"}) {
    const RationalMap r = R(s);
    const BasinImage img = render_basins(r, grid(0.0, 3.0, 48));
    std::mt19937_64 rng(51);
    for (int k = 0; k < 200; ++k) {
      const int row = static_cast<int>(rng() % 48), col = static_cast<int>(rng() % 48);
      const std::int32_t l = img.label(row, col);
      if (l == kUndecided) continue;
      SpherePoint z = img.grid.point(row, col);
      for (int j = 0; j < img.iterations[static_cast<std::size_t>(row) * 48 + col]; ++j) z = r(z);
      const CycleInfo& c = img.attractors[static_cast<std::size_t>(img.cycle_of(l))];
      double best = 2.0;
      for (const auto& p : c.points) best = std::min(best, chordal_distance(z, p));
      CHECK(best < 1e-6);
    }
  }
}

TEST_CASE("phase labels separate the components of a single periodic basin") {
  // (z^2-1)/z^2 has one superattracting 3-cycle; its basin still has a visible boundary
  const BasinImage img = render_basins(R("(z^2-1)/z^2"), grid(0.0, 4.0, 64));
  REQUIRE(img.attractors.size() == 1);
  CHECK(img.attractors[0].period == 3);
  const BoundaryMask m = extract_boundary(img);
  CHECK(m.count() > 100);
  for (std::int32_t l : img.labels) CHECK((l >= 0 && l < 3));
}

TEST_CASE("extract_boundary: empty for one label, full for undecided") {
  BasinImage img;
  img.grid = grid(0.0, 1.0, 16);
  img.labels.assign(256, 0);
  img.iterations.assign(256, 0);
  CHECK(extract_boundary(img).count() == 0);
  img.labels[5 * 16 + 5] = kUndecided;
  // the undecided pixel and its four neighbours
  CHECK(extract_boundary(img).count() == 5);
  img.labels.assign(256, kUndecided);
  CHECK(extract_boundary(img).count() == 256);
}

TEST_CASE("boundary of z^2 lies on the unit circle") {
  const BasinImage img = render_basins(R("z^2"), grid(0.0, 4.0, 256));
  const BoundaryMask m = extract_boundary(img);
  const double h = m.grid.pixel_size();
  CHECK(fraction_near(m, [](Complex z) { return std::abs(std::abs(z) - 1.0); }, h) >= 0.98);
  CHECK(img.undecided_fraction() <= 0.05);
}

TEST_CASE("render is deterministic across worker counts") {
  const RationalMap r = R("3z^4/(4z^3-1)");
  RenderOptions one, four, eight;
  one.threads = 1;
  four.threads = 4;
  eight.threads = 8;
  const BasinImage a = render_basins(r, grid(0.0, 3.0, 96), one);
  const BasinImage b = render_basins(r, grid(0.0, 3.0, 96), four);
  const BasinImage c = render_basins(r, grid(0.0, 3.0, 96), eight);
  CHECK(a.labels == b.labels);
  CHECK(a.labels == c.labels);
  CHECK(a.iterations == b.iterations);
  CHECK(encode_ppm(a) == encode_ppm(c));
  CHECK(encode_ppm(extract_boundary(a)) == encode_ppm(extract_boundary(b)));
}

TEST_CASE("boundary is stable under a change of resolution") {
  for (const char* s : {"z^3 - 1/3", "3z^4/(4z^3-1)", "z^2 - 1"}) {
    const RationalMap r = R(s);
    const BoundaryMask fine = extract_boundary(render_basins(r, grid(0.0, 3.0, 512)));
    const BoundaryMask coarse = extract_boundary(render_basins(r, grid(0.0, 3.0, 256)));
    // 2x2 downsample of the fine mask against the coarse mask dilated by 2 pixels
    std::size_t total = 0, covered = 0;
    for (int row = 0; row < 256; ++row)
      for (int col = 0; col < 256; ++col) {
        const bool marked = fine.at(2 * row, 2 * col) || fine.at(2 * row + 1, 2 * col) ||
                            fine.at(2 * row, 2 * col + 1) || fine.at(2 * row + 1, 2 * col + 1);
        if (!marked) continue;
        ++total;
        bool hit = false;
        for (int dr = -2; dr <= 2 && !hit; ++dr)
          for (int dc = -2; dc <= 2 && !hit; ++dc) {
            const int rr = row + dr, cc = col + dc;
            hit = rr >= 0 && rr < 256 && cc >= 0 && cc < 256 && coarse.at(rr, cc);
          }
        if (hit) ++covered;
      }
    REQUIRE(total > 0);
    CHECK(static_cast<double>(covered) / static_cast<double>(total) >= 0.95);
  }
}

TEST_CASE("PPM round trip and palette rules") {
  BasinImage img;
  img.grid = grid(0.0, 1.0, 16);
  img.labels.resize(256);
  img.iterations.resize(256);
  for (int i = 0; i < 256; ++i) {
    img.labels[static_cast<std::size_t>(i)] = i % 7 == 0 ? kUndecided : i % 3;
    img.iterations[static_cast<std::size_t>(i)] = i;
  }
  const std::string path = temp_path("roundtrip.ppm");
  write_image(img, path);
  const PpmImage back = read_ppm(path);
  CHECK(back.width == 16);
  CHECK(back.height == 16);
  const auto bytes = encode_ppm(img);
  const std::string header = "P6\n16 16\n255\n";
  REQUIRE(bytes.size() == header.size() + 3 * 256);
  CHECK(std::string(bytes.begin(), bytes.begin() + static_cast<long>(header.size())) == header);
  CHECK(std::vector<std::uint8_t>(bytes.begin() + static_cast<long>(header.size()), bytes.end()) == back.rgb);
  // undecided pixels are black
  for (int i = 0; i < 256; i += 7)
    for (int ch = 0; ch < 3; ++ch) CHECK(back.rgb[static_cast<std::size_t>(3 * i + ch)] == 0);
  CHECK(encode_ppm(img) == bytes);

  // masks are black on white
  const BoundaryMask m = extract_boundary(img);
  const std::string mpath = temp_path("mask.ppm");
  write_image(m, mpath);
  const PpmImage mb = read_ppm(mpath);
  for (int i = 0; i < 256; ++i) {
    const std::uint8_t expect = m.bits[static_cast<std::size_t>(i)] ? 0 : 255;
    CHECK(mb.rgb[static_cast<std::size_t>(3 * i)] == expect);
  }
  std::remove(path.c_str());
  std::remove(mpath.c_str());
}

TEST_CASE("I/O failures carry the path") {
  BasinImage img;
  img.grid = grid(0.0, 1.0, 16);
  img.labels.assign(256, 0);
  img.iterations.assign(256, 0);
  try {
    write_image(img, "/nonexistent-dir/x.ppm");
    FAIL("expected an Io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
    CHECK(std::string(e.what()).find("/nonexistent-dir/x.ppm") != std::string::npos);
  }
  CHECK_THROWS_AS(read_ppm("/nonexistent-dir/y.ppm"), Error);
  const std::string bad = temp_path("bad.ppm");
  std::ofstream(bad) << "P3\n1 1\n255\n0 0 0\n";
  CHECK_THROWS_AS(read_ppm(bad), Error);
  std::remove(bad.c_str());
}

TEST_CASE("render rejects bad options") {
  RenderOptions o;
  o.max_iter = 0;
  CHECK_THROWS_AS(render_basins(R("z^2"), grid(0.0, 4.0, 16), o), Error);
  o.max_iter = 10;
  o.eps = 0.0;
  CHECK_THROWS_AS(render_basins(R("z^2"), grid(0.0, 4.0, 16), o), Error);
}
