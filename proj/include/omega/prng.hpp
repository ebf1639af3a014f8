#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omega/core_map.hpp"

namespace omega {

// Raised by the statistical battery for samples below the configured floor.
class InsufficientSampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two-dimensional generator driven by the orbit of a seed point (default the
// standard point (n, 0)). Emits (x/10^k, y/n) of the current point — the
// seed itself first — then advances by one forward step. The pair stream is
// periodic with period orbit_length(space, seed).
class OrbitGenerator {
 public:
  explicit OrbitGenerator(const OmegaSpace& space);
  OrbitGenerator(const OmegaSpace& space, Point seed);

  std::pair<double, double> next();

  const OmegaSpace& space() const { return space_; }
  Point seed() const { return seed_; }
  Point current() const { return current_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  OmegaSpace space_;
  Point seed_;
  Point current_;
  std::uint64_t emitted_ = 0;
};

// First (or second) components of the orbit pair stream, as unit-interval
// doubles.
std::vector<double> orbit_unit_stream(const OmegaSpace& space, Point seed,
                                      std::size_t count,
                                      bool first_component = true);

// von Neumann middle-square state: square the 4-digit value, zero-pad to 8
// digits, keep digits 3..6.
struct MiddleSquareState {
  std::uint32_t value = 0;  // always in [0, 9999]
};

MiddleSquareState middle_square_next(MiddleSquareState state);

// Lehmer recurrence m' = 5^17 * m (mod 2^40), unit output m / 2^40.
struct LehmerState {
  std::uint64_t m = 1;  // always in [0, 2^40)
};

LehmerState lehmer_next(LehmerState state);

inline double lehmer_unit(LehmerState state) {
  return static_cast<double>(state.m) / 1099511627776.0;  // 2^40
}

std::vector<double> lehmer_unit_stream(std::uint64_t m0, std::size_t count);

struct TestConfig {
  std::size_t min_samples = 1000;
};

struct TestReport {
  std::string name;
  double statistic = 0.0;
  unsigned degrees_of_freedom = 0;
  double threshold = 0.0;  // chi-square upper critical value at alpha = 0.01
  bool pass = false;       // statistic <= threshold
  std::size_t sample_size = 0;
};

// Chi-square over 100 equal-width bins of [0, 1); df = 99.
TestReport chi_square_uniformity(std::span<const double> sample);

// Gap test on [0, 0.5): lengths 0..9 plus a pooled >= 10 class; df = 10.
TestReport gap_test(std::span<const double> sample);

// Maximum of t = 5 consecutive values, transformed by u^5, chi-square over
// 10 equal bins; df = 9.
TestReport maximum_of_t_test(std::span<const double> sample);

// Poker test on hands of 5 first decimal digits, classified by the number of
// distinct digits (1..5); df = 4.
TestReport poker_test(std::span<const double> sample);

// Runs all four tests in the order uniformity, gap, maximum-of-t, poker.
std::vector<TestReport> run_tests(std::span<const double> sample,
                                  TestConfig config = {});

}  // namespace omega
