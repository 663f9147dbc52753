#include "juliasym/render.hpp"

#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

namespace juliasym {

namespace {

struct Target {
  SpherePoint point;
  int cycle;
  int index;  // position in the cycle
};

class PixelWorker {
 public:
  PixelWorker(const RationalMap& r, const std::vector<CycleInfo>& cycles, const RenderOptions& opts)
      : r_(r), cycles_(cycles), opts_(opts) {
    int offset = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = 0; j < cycles[i].points.size(); ++j)
        targets_.push_back({cycles[i].points[j], static_cast<int>(i), static_cast<int>(j)});
      offsets_.push_back(offset);
      offset += static_cast<int>(cycles[i].points.size());
    }
  }

  void run(SpherePoint z, std::int32_t& label, std::int32_t& iterations) const {
    int n = 0;
    while (n <= opts_.max_iter) {
      const Target* t = capture(z);
      if (t) {
        const int hit = t->cycle;
        SpherePoint w = z;
        int k = 0;
        for (; k < 20; ++k) {
          w = r_(w);
          if (distance_to_cycle(w, hit) > 10.0 * opts_.eps) break;
        }
        if (k == 20) {
          // phase: which point of the cycle the orbit sits on at times = 0 mod period
          const int period = static_cast<int>(cycles_[static_cast<std::size_t>(hit)].points.size());
          label = offsets_[static_cast<std::size_t>(hit)] + ((t->index - n) % period + period) % period;
          iterations = n;
          return;
        }
        z = w;
        n += k + 1;
        continue;
      }
      z = r_(z);
      ++n;
    }
    label = kUndecided;
    iterations = opts_.max_iter;
  }

 private:
  const Target* capture(const SpherePoint& z) const {
    for (const Target& t : targets_)
      if (chordal_distance(z, t.point) < opts_.eps) return &t;
    return nullptr;
  }

  double distance_to_cycle(const SpherePoint& z, int cycle) const {
    double best = 2.0;
    for (const SpherePoint& p : cycles_[static_cast<std::size_t>(cycle)].points)
      best = std::min(best, chordal_distance(z, p));
    return best;
  }

  const RationalMap& r_;
  const std::vector<CycleInfo>& cycles_;
  const RenderOptions& opts_;
  std::vector<Target> targets_;
  std::vector<int> offsets_;
};

std::uint8_t channel(double x) { return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0)); }

void hsv_to_rgb(double h, double s, double v, std::uint8_t* out) {
  const double hh = std::fmod(h, 1.0) * 6.0;
  const int sector = static_cast<int>(hh) % 6;
  const double f = hh - std::floor(hh);
  const double p = v * (1.0 - s), q = v * (1.0 - s * f), t = v * (1.0 - s * (1.0 - f));
  double r = v, g = t, b = p;
  switch (sector) {
    case 0: r = v, g = t, b = p; break;
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = t; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = t, g = p, b = v; break;
    default: r = v, g = p, b = q; break;
  }
  out[0] = channel(r);
  out[1] = channel(g);
  out[2] = channel(b);
}

std::vector<std::uint8_t> ppm_header(int w, int h) {
  const std::string head = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  return {head.begin(), head.end()};
}

void write_bytes(const std::vector<std::uint8_t>& bytes, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "render", "cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "render", "write to '" + path + "' failed");
}

}  // namespace

void GridSpec::validate() const {
  if (pixels < 16) throw Error(ErrorKind::InvalidParameters, "render", "grid needs at least 16 pixels per side");
  if (!(width > 0.0) || !std::isfinite(width))
    throw Error(ErrorKind::InvalidParameters, "render", "grid width must be positive");
}

Complex GridSpec::point(int row, int col) const {
  const double h = pixel_size();
  const double half = pixels / 2.0;
  return {center.real() + (col + 0.5 - half) * h, center.imag() + (half - row - 0.5) * h};
}

void GridSpec::locate(Complex z, double& row, double& col) const {
  const double h = pixel_size();
  const double half = pixels / 2.0;
  col = (z.real() - center.real()) / h + half - 0.5;
  row = half - 0.5 - (z.imag() - center.imag()) / h;
}

double BasinImage::undecided_fraction() const {
  if (labels.empty()) return 0.0;
  const auto n = std::count(labels.begin(), labels.end(), kUndecided);
  return static_cast<double>(n) / static_cast<double>(labels.size());
}

int BasinImage::cycle_of(std::int32_t label) const {
  if (label < 0) return -1;
  for (std::size_t i = 0; i < attractors.size(); ++i) {
    const auto period = static_cast<std::int32_t>(attractors[i].points.size());
    if (label < period) return static_cast<int>(i);
    label -= period;
  }
  return -1;
}

std::size_t BoundaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; }));
}

int default_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("JULIA_SYM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

BasinImage render_basins(const RationalMap& r, const GridSpec& grid, const RenderOptions& opts,
                         std::vector<CycleInfo> attractors) {
  grid.validate();
  if (opts.max_iter < 1) throw Error(ErrorKind::InvalidParameters, "render", "max_iter must be positive");
  if (!(opts.eps > 0.0)) throw Error(ErrorKind::InvalidParameters, "render", "eps must be positive");
  if (attractors.empty()) attractors = attractor_inventory(r);

  BasinImage img;
  img.grid = grid;
  img.attractors = std::move(attractors);
  const std::size_t n = static_cast<std::size_t>(grid.pixels);
  img.labels.assign(n * n, kUndecided);
  img.iterations.assign(n * n, 0);

  const PixelWorker worker(r, img.attractors, opts);
  std::atomic<int> next_row{0};
  auto work = [&] {
    for (int row = next_row++; row < grid.pixels; row = next_row++)
      for (int col = 0; col < grid.pixels; ++col) {
        const std::size_t at = static_cast<std::size_t>(row) * n + static_cast<std::size_t>(col);
        worker.run(grid.point(row, col), img.labels[at], img.iterations[at]);
      }
  };
  const int threads = std::max(1, std::min(opts.threads > 0 ? opts.threads : default_thread_count(), grid.pixels));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return img;
}

BoundaryMask extract_boundary(const BasinImage& img) {
  const int n = img.grid.pixels;
  BoundaryMask mask;
  mask.grid = img.grid;
  mask.bits.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const std::int32_t l = img.label(row, col);
      bool marked = l == kUndecided;
      if (!marked && row > 0) marked = img.label(row - 1, col) != l;
      if (!marked && row + 1 < n) marked = img.label(row + 1, col) != l;
      if (!marked && col > 0) marked = img.label(row, col - 1) != l;
      if (!marked && col + 1 < n) marked = img.label(row, col + 1) != l;
      mask.bits[static_cast<std::size_t>(row) * n + col] = marked ? 1 : 0;
    }
  return mask;
}

std::vector<std::uint8_t> encode_ppm(const BasinImage& img, const Palette& palette) {
  const int n = img.grid.pixels;
  std::vector<std::uint8_t> out = ppm_header(n, n);
  const std::size_t body = out.size();
  out.resize(body + 3 * img.labels.size());
  for (std::size_t i = 0; i < img.labels.size(); ++i) {
    std::uint8_t* px = out.data() + body + 3 * i;
    const std::int32_t l = img.labels[i];
    if (l == kUndecided) {
      px[0] = px[1] = px[2] = 0;
      continue;
    }
    const double hue = std::fmod(0.6180339887498949 * l + 0.08, 1.0);
    const double ramp = std::min(1.0, static_cast<double>(img.iterations[i]) / std::max(1, palette.ramp));
    const double value = 1.0 - (1.0 - palette.min_value) * ramp;
    hsv_to_rgb(hue, palette.saturation, value, px);
  }
  return out;
}

std::vector<std::uint8_t> encode_ppm(const BoundaryMask& mask) {
  const int n = mask.grid.pixels;
  std::vector<std::uint8_t> out = ppm_header(n, n);
  for (std::uint8_t b : mask.bits) {
    const std::uint8_t v = b ? 0 : 255;
    out.insert(out.end(), {v, v, v});
  }
  return out;
}

void write_image(const BasinImage& img, const std::string& path, const Palette& palette) {
  write_bytes(encode_ppm(img, palette), path);
}

void write_image(const BoundaryMask& mask, const std::string& path) { write_bytes(encode_ppm(mask), path); }

PpmImage read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "render", "cannot open '" + path + "' for reading");
  auto token = [&]() {
    std::string t;
    for (;;) {
      const int c = in.get();
      if (c == EOF) break;
      if (c == '#') {
        std::string skip;
        std::getline(in, skip);
        continue;
      }
      if (std::isspace(c)) {
        if (!t.empty()) break;
        continue;
      }
      t.push_back(static_cast<char>(c));
    }
    return t;
  };
  if (token() != "P6") throw Error(ErrorKind::Io, "render", "'" + path + "' is not a binary PPM");
  PpmImage img;
  img.width = std::atoi(token().c_str());
  img.height = std::atoi(token().c_str());
  const int maxval = std::atoi(token().c_str());
  if (img.width <= 0 || img.height <= 0 || maxval != 255)
    throw Error(ErrorKind::Io, "render", "unsupported PPM header in '" + path + "'");
  img.rgb.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * 3);
  in.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.rgb.size()))
    throw Error(ErrorKind::Io, "render", "truncated pixel data in '" + path + "'");
  return img;
}

}  // namespace juliasym
