#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "juliasym/dynamics.hpp"

namespace juliasym {

/// Square pixel grid over the plane. Pixel (row, col) samples its center:
///   x = center.re + (col + 0.5 - N/2) h,  y = center.im + (N/2 - row - 0.5) h,  h = width / N
/// so row 0 is the top (largest imaginary part) and storage is row-major.
struct GridSpec {
  Complex center{};
  double width = 4.0;
  int pixels = 512;

  void validate() const;
  double pixel_size() const { return width / pixels; }
  Complex point(int row, int col) const;
  // Fractional (row, col) of a plane point; inverse of point().
  void locate(Complex z, double& row, double& col) const;
};

inline constexpr std::int32_t kUndecided = -1;

struct BasinImage {
  GridSpec grid;
  // basin label or kUndecided; a cycle of period p owns p consecutive labels,
  // one per point of the cycle that the orbit visits at multiples of p
  std::vector<std::int32_t> labels;
  std::vector<std::int32_t> iterations;  // steps until capture (max_iter if undecided)
  std::vector<CycleInfo> attractors;

  std::int32_t label(int row, int col) const { return labels[static_cast<std::size_t>(row) * grid.pixels + col]; }
  double undecided_fraction() const;
  /// Index into `attractors` of a label, or -1 for kUndecided.
  int cycle_of(std::int32_t label) const;
};

struct BoundaryMask {
  GridSpec grid;
  std::vector<std::uint8_t> bits;

  bool at(int row, int col) const { return bits[static_cast<std::size_t>(row) * grid.pixels + col] != 0; }
  std::size_t count() const;
};

struct RenderOptions {
  int max_iter = 1000;
  double eps = 1e-6;
  // worker threads; 0 uses the hardware count capped by JULIA_SYM_THREADS
  int threads = 0;
};

/// Worker count for threads = 0: hardware concurrency, capped by JULIA_SYM_THREADS.
int default_thread_count();

/// Iterates R from every pixel and labels it by the attracting cycle point whose
/// chordal eps-ball it enters (up to the phase of the cycle) (validated by 20 further steps within 10 eps).
/// Uses attractor_inventory(R) when `attractors` is empty.
BasinImage render_basins(const RationalMap& r, const GridSpec& grid, const RenderOptions& opts = {},
                         std::vector<CycleInfo> attractors = {});

/// Marks undecided pixels and pixels with a 4-neighbour of a different label.
BoundaryMask extract_boundary(const BasinImage& img);

struct Palette {
  double saturation = 0.7;
  // iteration count at which brightness reaches its floor
  int ramp = 64;
  double min_value = 0.35;
};

/// Binary PPM (P6, maxval 255). Basin images: label -> hue, iterations ->
/// brightness, undecided black. Masks: marked black on white.
void write_image(const BasinImage& img, const std::string& path, const Palette& palette = {});
void write_image(const BoundaryMask& mask, const std::string& path);

std::vector<std::uint8_t> encode_ppm(const BasinImage& img, const Palette& palette = {});
std::vector<std::uint8_t> encode_ppm(const BoundaryMask& mask);

struct PpmImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;
};

PpmImage read_ppm(const std::string& path);

}  // namespace juliasym
