#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omega/core_map.hpp"
#include "omega/orbit_engine.hpp"

namespace omega {

enum class GroupKind { FixedPointSet, SelfConjugate, MergedPair };

// One color class of the partition: the set of all fixed points, one
// self-conjugate orbit, or a merged pair of interconjugate orbits. Every
// group's point set is closed under conjugation.
struct ColorGroup {
  std::size_t id = 0;
  std::uint64_t point_count = 0;
  std::vector<Point> members;  // canonical representative of each member orbit
  GroupKind kind = GroupKind::FixedPointSet;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(Rgb, Rgb) = default;
};

// Row-major 8-bit RGB raster; row 0 is the top of the picture.
class Image {
 public:
  Image(std::size_t width, std::size_t height, Rgb fill = {255, 255, 255});

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  Rgb pixel(std::size_t col, std::size_t row) const {
    const std::size_t at = 3 * (row * width_ + col);
    return {bytes_[at], bytes_[at + 1], bytes_[at + 2]};
  }
  void set_pixel(std::size_t col, std::size_t row, Rgb color) {
    const std::size_t at = 3 * (row * width_ + col);
    bytes_[at] = color.r;
    bytes_[at + 1] = color.g;
    bytes_[at + 2] = color.b;
  }

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> bytes_;
};

// Groups ordered by their smallest canonical representative; the fixed-point
// group always sorts first since (0,0) is always fixed.
std::vector<ColorGroup> color_groups(const OmegaSpace& space,
                                     std::uint64_t cap = kDefaultScanCap);

// Deterministic palette: group 0 (the fixed points) is black; the remaining
// m groups get fully saturated hues 360*j/m degrees, j = 0..m-1, converted
// with the standard hexcone formula.
Rgb palette_color(std::size_t group_index, std::size_t group_count);

// The colored rectangle: width 10^k * cell_px, height n * cell_px; point
// (x, y) fills the cell at column x and row n-1-y (y grows upward).
Image render_omega(const OmegaSpace& space, std::size_t cell_px,
                   std::uint64_t cap = kDefaultScanCap);

// The base rectangle repeated rows x cols with no gaps.
Image render_tiling(const OmegaSpace& space, std::size_t rows,
                    std::size_t cols, std::size_t cell_px,
                    std::uint64_t cap = kDefaultScanCap);

// White background, black cells exactly at the orbit of p.
Image render_orbit_plot(const OmegaSpace& space, Point p,
                        std::size_t cell_px);

// Binary PPM (P6): "P6\n<w> <h>\n255\n" + raw RGB, top row first.
std::string write_ppm(const Image& image);

}  // namespace omega
