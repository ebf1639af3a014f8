#include "omega/tiling_render.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace omega {

namespace {

constexpr std::size_t kMaxImagePixels = std::size_t{1} << 28;

struct Partition {
  std::vector<ColorGroup> groups;          // sorted, ids assigned
  std::vector<std::uint32_t> group_of;     // per point index v
};

Partition build_partition(const OmegaSpace& space, std::uint64_t cap) {
  std::vector<OrbitSummary> found;
  std::vector<std::uint32_t> orbit_of;
  scan_orbits(
      space, cap, [&](const OrbitSummary& s) { found.push_back(s); },
      &orbit_of);

  // Group skeletons keyed by member orbit ids (discovery order).
  struct Proto {
    std::vector<std::uint32_t> orbit_ids;
    GroupKind kind;
    std::uint64_t point_count = 0;
    Point canonical;  // smallest member canonical, the sort key
  };
  std::vector<Proto> protos;
  Proto fixed{{}, GroupKind::FixedPointSet, 0, Point{0, 0}};
  const std::uint64_t top = space.size() - 1;
  std::vector<bool> consumed(found.size(), false);
  for (std::uint32_t id = 0; id < found.size(); ++id) {
    const OrbitSummary& s = found[id];
    if (s.length == 1) {
      fixed.orbit_ids.push_back(id);
      fixed.point_count += 1;
      consumed[id] = true;
      continue;
    }
    if (consumed[id]) continue;
    if (s.self_conjugate) {
      protos.push_back({{id}, GroupKind::SelfConjugate, s.length, s.canonical});
      consumed[id] = true;
    } else {
      const std::uint32_t partner = orbit_of[top - space.index_of(s.generator)];
      protos.push_back({{id, partner},
                        GroupKind::MergedPair,
                        s.length + found[partner].length,
                        std::min(s.canonical, found[partner].canonical)});
      consumed[id] = true;
      consumed[partner] = true;
    }
  }
  if (!fixed.orbit_ids.empty()) {
    protos.push_back(std::move(fixed));  // canonical (0,0) sorts it first
  }
  std::sort(protos.begin(), protos.end(),
            [](const Proto& a, const Proto& b) {
              return a.canonical < b.canonical;
            });

  Partition out;
  out.groups.reserve(protos.size());
  std::vector<std::uint32_t> group_of_orbit(found.size(), 0);
  for (std::size_t g = 0; g < protos.size(); ++g) {
    ColorGroup group;
    group.id = g;
    group.kind = protos[g].kind;
    group.point_count = protos[g].point_count;
    for (std::uint32_t id : protos[g].orbit_ids) {
      group.members.push_back(found[id].canonical);
      group_of_orbit[id] = static_cast<std::uint32_t>(g);
    }
    std::sort(group.members.begin(), group.members.end());
    out.groups.push_back(std::move(group));
  }
  out.group_of.resize(orbit_of.size());
  for (std::size_t v = 0; v < orbit_of.size(); ++v) {
    out.group_of[v] = group_of_orbit[orbit_of[v]];
  }
  return out;
}

void check_image_size(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0 || width > kMaxImagePixels / height) {
    throw CapacityError("image of " + std::to_string(width) + "x" +
                        std::to_string(height) + " pixels exceeds the budget");
  }
}

void fill_cell(Image& img, std::size_t col, std::size_t row,
               std::size_t cell_px, Rgb color) {
  for (std::size_t dy = 0; dy < cell_px; ++dy) {
    for (std::size_t dx = 0; dx < cell_px; ++dx) {
      img.set_pixel(col * cell_px + dx, row * cell_px + dy, color);
    }
  }
}

}  // namespace

Image::Image(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height) {
  check_image_size(width, height);
  bytes_.resize(3 * width * height);
  for (std::size_t i = 0; i < bytes_.size(); i += 3) {
    bytes_[i] = fill.r;
    bytes_[i + 1] = fill.g;
    bytes_[i + 2] = fill.b;
  }
}

std::vector<ColorGroup> color_groups(const OmegaSpace& space,
                                     std::uint64_t cap) {
  return build_partition(space, cap).groups;
}

Rgb palette_color(std::size_t group_index, std::size_t group_count) {
  if (group_index == 0) return {0, 0, 0};
  const std::size_t hues = group_count - 1;
  const double hue = 360.0 * static_cast<double>(group_index - 1) /
                     static_cast<double>(hues);
  // Hexcone conversion at full saturation and value.
  const double h = hue / 60.0;
  const int sector = static_cast<int>(h) % 6;
  const double f = h - std::floor(h);
  const double q = 1.0 - f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1; g = f; b = 0; break;
    case 1: r = q; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = f; break;
    case 3: r = 0; g = q; b = 1; break;
    case 4: r = f; g = 0; b = 1; break;
    default: r = 1; g = 0; b = q; break;
  }
  const auto channel = [](double x) {
    return static_cast<std::uint8_t>(std::lround(255.0 * x));
  };
  return {channel(r), channel(g), channel(b)};
}

Image render_omega(const OmegaSpace& space, std::size_t cell_px,
                   std::uint64_t cap) {
  if (cell_px == 0) {
    throw std::invalid_argument("render_omega: cell_px must be positive");
  }
  const Partition partition = build_partition(space, cap);
  check_image_size(space.chunk_modulus() * cell_px, space.n() * cell_px);
  Image img(space.chunk_modulus() * cell_px, space.n() * cell_px);

  std::vector<Rgb> palette(partition.groups.size());
  for (std::size_t g = 0; g < palette.size(); ++g) {
    palette[g] = palette_color(g, palette.size());
  }
  for (std::uint64_t v = 0; v < space.size(); ++v) {
    const Point p = space.point_at(v);
    fill_cell(img, p.x, space.n() - 1 - p.y, cell_px,
              palette[partition.group_of[v]]);
  }
  return img;
}

Image render_tiling(const OmegaSpace& space, std::size_t rows,
                    std::size_t cols, std::size_t cell_px,
                    std::uint64_t cap) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("render_tiling: rows and cols must be positive");
  }
  const Image base = render_omega(space, cell_px, cap);
  check_image_size(base.width() * cols, base.height() * rows);
  Image img(base.width() * cols, base.height() * rows);
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      img.set_pixel(col, row,
                    base.pixel(col % base.width(), row % base.height()));
    }
  }
  return img;
}

Image render_orbit_plot(const OmegaSpace& space, Point p,
                        std::size_t cell_px) {
  if (cell_px == 0) {
    throw std::invalid_argument("render_orbit_plot: cell_px must be positive");
  }
  check_image_size(space.chunk_modulus() * cell_px, space.n() * cell_px);
  Image img(space.chunk_modulus() * cell_px, space.n() * cell_px,
            {255, 255, 255});
  for (Point q : orbit_iter(space, p)) {
    fill_cell(img, q.x, space.n() - 1 - q.y, cell_px, {0, 0, 0});
  }
  return img;
}

std::string write_ppm(const Image& image) {
  std::string out = "P6\n" + std::to_string(image.width()) + " " +
                    std::to_string(image.height()) + "\n255\n";
  out.append(reinterpret_cast<const char*>(image.bytes().data()),
             image.bytes().size());
  return out;
}

}  // namespace omega
