#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace omega {

// Raised when n (or a derived workload) exceeds the configured arithmetic or
// memory capacity.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a point lies outside the space it is used with.
class PointRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// One element (x, y) of the rectangle {0..10^k-1} x {0..n-1}.
// Ordering is lexicographic by (x, y).
struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// The rectangle of integer points attached to a k-digit positive number n,
// with the constants every map on it needs. Construction guarantees
// n * 10^k <= 2^63, so n*x + y and x + 10^k*y never overflow 64-bit
// unsigned arithmetic anywhere downstream.
class OmegaSpace {
 public:
  std::uint64_t n() const { return n_; }
  unsigned k() const { return k_; }
  std::uint64_t chunk_modulus() const { return chunk_modulus_; }  // 10^k
  std::uint64_t size() const { return size_; }                    // n * 10^k

  bool contains(Point p) const { return p.x < chunk_modulus_ && p.y < n_; }

  // Linear index v = x + 10^k * y; enumerates the rectangle row by row.
  std::uint64_t index_of(Point p) const { return p.x + chunk_modulus_ * p.y; }
  Point point_at(std::uint64_t v) const {
    return {v % chunk_modulus_, v / chunk_modulus_};
  }

  friend bool operator==(const OmegaSpace& a, const OmegaSpace& b) {
    return a.n_ == b.n_;
  }

 private:
  friend OmegaSpace make_space(std::uint64_t n);
  OmegaSpace(std::uint64_t n, unsigned k, std::uint64_t modulus)
      : n_(n), k_(k), chunk_modulus_(modulus), size_(n * modulus) {}

  std::uint64_t n_;
  unsigned k_;
  std::uint64_t chunk_modulus_;
  std::uint64_t size_;
};

// Number of decimal digits of n (n >= 1).
unsigned decimal_digits(std::uint64_t n);

// Builds the space for a positive n. Throws std::invalid_argument for n = 0
// and CapacityError when n * 10^k would exceed 2^63.
OmegaSpace make_space(std::uint64_t n);

// One carry step of multiplication by n in base 10^k:
//   n*x + y = x' + 10^k * y'.
// A bijection of the space.
Point forward(const OmegaSpace& space, Point p);

// Inverse of forward: x = (x' + 10^k*y') / n, y = (x' + 10^k*y') mod n.
Point inverse(const OmegaSpace& space, Point p);

// Point reflection through the rectangle's center:
//   (10^k - 1 - x, n - 1 - y).
Point conjugate(const OmegaSpace& space, Point p);

// All fixed points of forward, ascending by x. They solve
// (n-1)*x = (10^k-1)*y and always include the two corners.
std::vector<Point> fixed_points(const OmegaSpace& space);

}  // namespace omega
