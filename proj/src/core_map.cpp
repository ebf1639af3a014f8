#include "omega/core_map.hpp"

#include <numeric>
#include <string>

namespace omega {

namespace {

constexpr std::uint64_t kPow10[] = {
    1ull,
    10ull,
    100ull,
    1000ull,
    10000ull,
    100000ull,
    1000000ull,
    10000000ull,
    100000000ull,
    1000000000ull,
    10000000000ull,
    100000000000ull,
    1000000000000ull,
    10000000000000ull,
    100000000000000ull,
    1000000000000000ull,
    10000000000000000ull,
    100000000000000000ull,
    1000000000000000000ull,
    10000000000000000000ull,
};

void check_point(const OmegaSpace& space, Point p, const char* op) {
  if (!space.contains(p)) {
    throw PointRangeError(std::string(op) + ": point (" + std::to_string(p.x) +
                          "," + std::to_string(p.y) + ") outside Omega_" +
                          std::to_string(space.n()));
  }
}

}  // namespace

unsigned decimal_digits(std::uint64_t n) {
  unsigned k = 1;
  while (n >= 10) {
    n /= 10;
    ++k;
  }
  return k;
}

OmegaSpace make_space(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("make_space: n must be positive");
  }
  const unsigned k = decimal_digits(n);
  const std::uint64_t modulus = kPow10[k];
  const auto product = static_cast<unsigned __int128>(n) * modulus;
  if (product > (static_cast<unsigned __int128>(1) << 63)) {
    throw CapacityError("make_space: n*10^k exceeds 2^63 for n = " +
                        std::to_string(n));
  }
  return OmegaSpace(n, k, modulus);
}

Point forward(const OmegaSpace& space, Point p) {
  check_point(space, p, "forward");
  const std::uint64_t m = space.n() * p.x + p.y;
  return {m % space.chunk_modulus(), m / space.chunk_modulus()};
}

Point inverse(const OmegaSpace& space, Point p) {
  check_point(space, p, "inverse");
  const std::uint64_t v = p.x + space.chunk_modulus() * p.y;
  return {v / space.n(), v % space.n()};
}

Point conjugate(const OmegaSpace& space, Point p) {
  check_point(space, p, "conjugate");
  return {space.chunk_modulus() - 1 - p.x, space.n() - 1 - p.y};
}

std::vector<Point> fixed_points(const OmegaSpace& space) {
  // (n-1)x = (10^k-1)y with g = gcd(n-1, 10^k-1) has exactly the solutions
  // x = t*(10^k-1)/g, y = t*(n-1)/g for t = 0..g. For n = 1 the equation
  // degenerates to y = 0 and the same parametrization still enumerates the
  // whole bottom row.
  const std::uint64_t g = std::gcd(space.n() - 1, space.chunk_modulus() - 1);
  const std::uint64_t xstep = (space.chunk_modulus() - 1) / g;
  const std::uint64_t ystep = (space.n() - 1) / g;
  std::vector<Point> out;
  out.reserve(g + 1);
  for (std::uint64_t t = 0; t <= g; ++t) {
    out.push_back({xstep * t, ystep * t});
  }
  return out;
}

}  // namespace omega
