#include "omega/prng.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace omega {

namespace {

constexpr std::uint64_t kLehmerMultiplier = 762939453125ull;  // 5^17
constexpr std::uint64_t kLehmerMask = (std::uint64_t{1} << 40) - 1;

// Upper critical values of the chi-square distribution at alpha = 0.01 for
// the degrees of freedom this battery uses.
double chi_square_threshold(unsigned df) {
  switch (df) {
    case 4: return 13.276704;
    case 9: return 21.665994;
    case 10: return 23.209251;
    case 99: return 134.641617;
    default: throw std::invalid_argument("no tabulated threshold for df");
  }
}

TestReport make_report(std::string name, double statistic, unsigned df,
                       std::size_t samples) {
  TestReport report;
  report.name = std::move(name);
  report.statistic = statistic;
  report.degrees_of_freedom = df;
  report.threshold = chi_square_threshold(df);
  report.pass = statistic <= report.threshold;
  report.sample_size = samples;
  return report;
}

std::size_t first_digit(double u) {
  auto d = static_cast<std::size_t>(u * 10.0);
  return d > 9 ? 9 : d;
}

}  // namespace

OrbitGenerator::OrbitGenerator(const OmegaSpace& space)
    : OrbitGenerator(space, Point{space.n(), 0}) {}

OrbitGenerator::OrbitGenerator(const OmegaSpace& space, Point seed)
    : space_(space), seed_(seed), current_(seed) {
  if (!space.contains(seed)) {
    throw PointRangeError("OrbitGenerator: seed outside the space");
  }
}

std::pair<double, double> OrbitGenerator::next() {
  const double u = static_cast<double>(current_.x) /
                   static_cast<double>(space_.chunk_modulus());
  const double v = static_cast<double>(current_.y) /
                   static_cast<double>(space_.n());
  current_ = forward(space_, current_);
  ++emitted_;
  return {u, v};
}

std::vector<double> orbit_unit_stream(const OmegaSpace& space, Point seed,
                                      std::size_t count,
                                      bool first_component) {
  OrbitGenerator gen(space, seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto [u, v] = gen.next();
    out.push_back(first_component ? u : v);
  }
  return out;
}

MiddleSquareState middle_square_next(MiddleSquareState state) {
  const std::uint64_t square =
      static_cast<std::uint64_t>(state.value) * state.value;
  return {static_cast<std::uint32_t>(square / 100 % 10000)};
}

LehmerState lehmer_next(LehmerState state) {
  // Only the low 40 bits of the product matter, so plain 64-bit wraparound
  // multiplication is exact here.
  return {(kLehmerMultiplier * state.m) & kLehmerMask};
}

std::vector<double> lehmer_unit_stream(std::uint64_t m0, std::size_t count) {
  LehmerState state{m0 & kLehmerMask};
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(lehmer_unit(state));
    state = lehmer_next(state);
  }
  return out;
}

TestReport chi_square_uniformity(std::span<const double> sample) {
  constexpr std::size_t kBins = 100;
  std::array<std::uint64_t, kBins> counts{};
  for (double u : sample) {
    auto idx = static_cast<std::size_t>(u * 100.0);
    if (idx > kBins - 1) idx = kBins - 1;
    ++counts[idx];
  }
  const double expected = static_cast<double>(sample.size()) / kBins;
  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  return make_report("uniformity", statistic, kBins - 1, sample.size());
}

TestReport gap_test(std::span<const double> sample) {
  constexpr std::size_t kMaxGap = 10;  // lengths 0..9, pooled at >= 10
  std::array<std::uint64_t, kMaxGap + 1> tally{};
  std::size_t run = 0;
  for (double u : sample) {
    if (u < 0.5) {
      ++tally[run < kMaxGap ? run : kMaxGap];
      run = 0;
    } else {
      ++run;
    }
  }
  std::uint64_t gaps = 0;
  for (std::uint64_t t : tally) gaps += t;
  if (gaps == 0) {
    TestReport report = make_report("gap", 0.0, kMaxGap, sample.size());
    report.statistic = std::numeric_limits<double>::infinity();
    report.pass = false;
    return report;
  }
  double statistic = 0.0;
  double p = 0.5;  // P(gap = i) = 2^-(i+1); the pooled tail also has 2^-10
  for (std::size_t i = 0; i <= kMaxGap; ++i) {
    const double expected = static_cast<double>(gaps) * p;
    const double d = static_cast<double>(tally[i]) - expected;
    statistic += d * d / expected;
    if (i + 1 < kMaxGap) p *= 0.5;
  }
  return make_report("gap", statistic, kMaxGap, sample.size());
}

TestReport maximum_of_t_test(std::span<const double> sample) {
  constexpr std::size_t kGroup = 5;
  constexpr std::size_t kBins = 10;
  const std::size_t groups = sample.size() / kGroup;
  std::array<std::uint64_t, kBins> counts{};
  for (std::size_t g = 0; g < groups; ++g) {
    double v = sample[g * kGroup];
    for (std::size_t j = 1; j < kGroup; ++j) {
      v = std::max(v, sample[g * kGroup + j]);
    }
    const double w = v * v * v * v * v;  // max^t is uniform for iid input
    auto idx = static_cast<std::size_t>(w * 10.0);
    if (idx > kBins - 1) idx = kBins - 1;
    ++counts[idx];
  }
  const double expected = static_cast<double>(groups) / kBins;
  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  return make_report("maximum-of-5", statistic, kBins - 1, sample.size());
}

TestReport poker_test(std::span<const double> sample) {
  constexpr std::size_t kHand = 5;
  // P(h distinct digits in a hand of 5): Stirling(5,h) * 10!/(10-h)! / 10^5.
  constexpr std::array<double, 5> kProb = {0.0001, 0.0135, 0.18, 0.504,
                                           0.3024};
  const std::size_t hands = sample.size() / kHand;
  std::array<std::uint64_t, 5> counts{};
  for (std::size_t h = 0; h < hands; ++h) {
    bool seen[10] = {};
    std::size_t distinct = 0;
    for (std::size_t j = 0; j < kHand; ++j) {
      const std::size_t d = first_digit(sample[h * kHand + j]);
      if (!seen[d]) {
        seen[d] = true;
        ++distinct;
      }
    }
    ++counts[distinct - 1];
  }
  double statistic = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = static_cast<double>(hands) * kProb[i];
    const double d = static_cast<double>(counts[i]) - expected;
    statistic += d * d / expected;
  }
  return make_report("poker", statistic, counts.size() - 1, sample.size());
}

std::vector<TestReport> run_tests(std::span<const double> sample,
                                  TestConfig config) {
  if (sample.size() < config.min_samples) {
    throw InsufficientSampleError(
        "run_tests: need at least " + std::to_string(config.min_samples) +
        " samples, got " + std::to_string(sample.size()));
  }
  return {chi_square_uniformity(sample), gap_test(sample),
          maximum_of_t_test(sample), poker_test(sample)};
}

}  // namespace omega
