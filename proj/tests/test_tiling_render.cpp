#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "omega/tiling_render.hpp"

using namespace omega;

namespace {

std::uint32_t packed(Rgb c) {
  return (std::uint32_t{c.r} << 16) | (std::uint32_t{c.g} << 8) | c.b;
}

std::set<std::uint32_t> distinct_colors(const Image& img) {
  std::set<std::uint32_t> out;
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      out.insert(packed(img.pixel(col, row)));
    }
  }
  return out;
}

bool centrally_symmetric(const Image& img) {
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      if (!(img.pixel(col, row) ==
            img.pixel(img.width() - 1 - col, img.height() - 1 - row))) {
        return false;
      }
    }
  }
  return true;
}

std::size_t count_color(const Image& img, Rgb c) {
  std::size_t count = 0;
  for (std::size_t row = 0; row < img.height(); ++row) {
    for (std::size_t col = 0; col < img.width(); ++col) {
      if (img.pixel(col, row) == c) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("Omega_8 partitions into three 26-point groups plus the fixed pair") {
  const auto groups = color_groups(make_space(8));
  REQUIRE(groups.size() == 4);
  CHECK(groups[0].kind == GroupKind::FixedPointSet);
  CHECK(groups[0].point_count == 2);
  for (std::size_t g = 1; g < 4; ++g) {
    CHECK(groups[g].kind == GroupKind::MergedPair);
    CHECK(groups[g].point_count == 26);
    CHECK(groups[g].members.size() == 2);
  }
}

TEST_CASE("Omega_2 has one fixed group and one self-conjugate orbit group") {
  const auto groups = color_groups(make_space(2));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].kind == GroupKind::FixedPointSet);
  CHECK(groups[0].point_count == 2);
  CHECK(groups[1].kind == GroupKind::SelfConjugate);
  CHECK(groups[1].point_count == 18);
}

TEST_CASE("each self-conjugate 2-orbit of Omega_103 is its own 2-point group") {
  const auto groups = color_groups(make_space(103));
  const std::vector<Point> expected_canonicals = {
      {76, 95}, {153, 87}, {230, 79}, {307, 71}, {384, 63}, {461, 55}};
  std::size_t found = 0;
  for (const ColorGroup& g : groups) {
    if (g.kind == GroupKind::SelfConjugate && g.point_count == 2) {
      REQUIRE(g.members.size() == 1);
      CHECK(std::count(expected_canonicals.begin(), expected_canonicals.end(),
                       g.members[0]) == 1);
      ++found;
    }
  }
  CHECK(found == 6);
}

TEST_CASE("groups partition the space and are conjugation-closed") {
  for (std::uint64_t n = 1; n <= 99; ++n) {
    const OmegaSpace s = make_space(n);
    const auto groups = color_groups(s);
    std::uint64_t total = 0;
    bool ordered = true;
    bool closed = true;
    Point prev{0, 0};
    for (const ColorGroup& g : groups) {
      total += g.point_count;
      const Point first = g.members.front();
      ordered = ordered && (g.id == 0 || prev < first);
      prev = first;

      std::set<Point> points;
      for (Point m : g.members) {
        for (Point p : orbit_iter(s, m)) points.insert(p);
      }
      closed = closed && points.size() == g.point_count;
      for (Point p : points) {
        closed = closed && points.count(conjugate(s, p)) == 1;
      }
    }
    CHECK(total == s.size());
    CHECK(ordered);
    CHECK(closed);
    CHECK(groups[0].kind == GroupKind::FixedPointSet);
  }
}

TEST_CASE("render_omega: Omega_8 at cell 1 is a 10x8 image with 4 colors") {
  const Image img = render_omega(make_space(8), 1);
  CHECK(img.width() == 10);
  CHECK(img.height() == 8);
  CHECK(distinct_colors(img).size() == 4);
  CHECK(centrally_symmetric(img));
}

TEST_CASE("render_omega: Omega_2 at cell 1 is a 10x2 image with 2 colors") {
  const Image img = render_omega(make_space(2), 1);
  CHECK(img.width() == 10);
  CHECK(img.height() == 2);
  CHECK(distinct_colors(img).size() == 2);
  CHECK(centrally_symmetric(img));
  // Fixed points (0,0) and (9,1) are black; y grows upward, row 0 on top.
  CHECK(img.pixel(0, 1) == Rgb{0, 0, 0});
  CHECK(img.pixel(9, 0) == Rgb{0, 0, 0});
  CHECK(count_color(img, {0, 0, 0}) == 2);
}

TEST_CASE("pixel coverage matches group point counts") {
  for (std::uint64_t n : {2ull, 8ull, 16ull, 34ull}) {
    const OmegaSpace s = make_space(n);
    const std::size_t cell = 2;
    const Image img = render_omega(s, cell);
    const auto groups = color_groups(s);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const Rgb color = palette_color(g, groups.size());
      CHECK(count_color(img, color) == groups[g].point_count * cell * cell);
    }
  }
}

TEST_CASE("render_tiling repeats the base rectangle") {
  const OmegaSpace s = make_space(8);
  const Image base = render_omega(s, 1);
  const Image same = render_tiling(s, 1, 1, 1);
  CHECK(same.bytes() == base.bytes());

  const Image tiled = render_tiling(s, 2, 3, 4);
  CHECK(tiled.width() == 120);
  CHECK(tiled.height() == 64);
  CHECK(centrally_symmetric(tiled));
  const Image block = render_omega(s, 4);
  bool equal = true;
  for (std::size_t row = 0; row < tiled.height(); ++row) {
    for (std::size_t col = 0; col < tiled.width(); ++col) {
      equal = equal && tiled.pixel(col, row) ==
                           block.pixel(col % block.width(),
                                       row % block.height());
    }
  }
  CHECK(equal);
}

TEST_CASE("orbit plots mark exactly the orbit cells") {
  const Image plot9 = render_orbit_plot(make_space(9), {9, 0}, 1);
  CHECK(plot9.width() == 10);
  CHECK(plot9.height() == 9);
  CHECK(count_color(plot9, {0, 0, 0}) == 44);

  const Image plot7 = render_orbit_plot(make_space(7), {7, 0}, 1);
  CHECK(count_color(plot7, {0, 0, 0}) == 22);

  const Image fixed = render_orbit_plot(make_space(34), {0, 0}, 1);
  CHECK(count_color(fixed, {0, 0, 0}) == 1);
  // The fixed point (0,0) sits bottom-left.
  CHECK(fixed.pixel(0, fixed.height() - 1) == Rgb{0, 0, 0});
}

TEST_CASE("write_ppm emits the exact P6 byte layout") {
  const Image white(1, 1, {255, 255, 255});
  const std::string bytes = write_ppm(white);
  CHECK(bytes == std::string("P6\n1 1\n255\n\xFF\xFF\xFF", 14));

  const Image img = render_omega(make_space(8), 1);
  const std::string ppm = write_ppm(img);
  CHECK(ppm.size() == std::string("P6\n10 8\n255\n").size() + 3 * 10 * 8);
  CHECK(write_ppm(render_omega(make_space(8), 1)) == ppm);  // deterministic
}

TEST_CASE("render guards") {
  CHECK_THROWS_AS(render_omega(make_space(8), 0), std::invalid_argument);
  CHECK_THROWS_AS(render_omega(make_space(999999), 1), CapacityError);
  CHECK_THROWS_AS(render_tiling(make_space(8), 0, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_orbit_plot(make_space(8), {20, 0}, 1),
                  PointRangeError);
}
