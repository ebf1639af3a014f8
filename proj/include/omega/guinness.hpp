#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/core_map.hpp"

namespace omega {

// Raised by operations that require a whole or one-half Guinness number.
class NotGuinnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GuinnessKind { Whole, Half, Neither };

std::string_view to_string(GuinnessKind kind);

struct GuinnessClass {
  GuinnessKind kind = GuinnessKind::Neither;
  // Length of the standard orbit O_n(n, 0).
  std::uint64_t standard_orbit_length = 0;
};

// Whole  <=> standard orbit length = n*10^k - 2
// Half   <=> standard orbit length = n*10^k/2 - 1
GuinnessClass classify(std::uint64_t n);

// All n in [lo, hi] of the given kind, ascending. Work is split per n across
// jobs threads; the result does not depend on the worker count.
std::vector<std::uint64_t> scan(std::uint64_t lo, std::uint64_t hi,
                                GuinnessKind kind, unsigned jobs = 1);

// Consecutive pairs (n, n+1) in [lo, hi] that are both one-half Guinness.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twins(std::uint64_t lo,
                                                           std::uint64_t hi,
                                                           unsigned jobs = 1);

// Lazy producer of the k-digit chunks of G_n, most significant first.
//
// The emission order is x_0, x_{r-1}, x_{r-2}, ..., x_1 where (x_i, y_i) is
// the standard orbit: after the generating chunk n, the stream walks the
// inverse map, which needs O(1) memory. This is the unique order whose first
// k digits read n and whose k-digit left-rotation equals G_n / n (the
// reverse reading would produce G_n / n itself).
class DigitChunkStream {
 public:
  std::uint64_t total_chunks() const { return total_; }
  unsigned chunk_width() const { return space_.k(); }
  std::uint64_t total_digits() const { return total_ * space_.k(); }
  std::uint64_t emitted() const { return emitted_; }

  // Next chunk value in [0, 10^k), or nullopt once all r chunks are out.
  std::optional<std::uint64_t> next_chunk();

  // Drains the stream into out as zero-padded ASCII digits, no separators,
  // no trailing newline. Returns the number of characters written.
  std::uint64_t write_digits(std::ostream& out);

  // Drains the stream into a string; meant for desk-scale n.
  std::string to_digit_string();

 private:
  friend DigitChunkStream digit_stream(std::uint64_t n);
  DigitChunkStream(OmegaSpace space, std::uint64_t total);

  OmegaSpace space_;
  Point seed_;
  Point cursor_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
};

DigitChunkStream digit_stream(std::uint64_t n);

struct RotationCheck {
  std::uint64_t n = 0;
  std::uint64_t digit_count = 0;
  bool holds = false;                // n * rotated = G_n, checked exactly
  std::string first_chunk;           // leading k digits of G_n
  bool quotient_tail_match = false;  // long-division route: G_n / n = rotated
};

inline constexpr std::uint64_t kDefaultRotationDigitBudget = std::uint64_t{1}
                                                             << 28;

// Materializes G_n, moves its first k digits to the end (keeping any zeros
// the block carries) and verifies n * rotated = G_n with exact base-10
// arithmetic. Throws NotGuinnessError when n is neither whole nor half, and
// CapacityError when the digit count exceeds max_digits.
RotationCheck verify_rotation(
    std::uint64_t n, std::uint64_t max_digits = kDefaultRotationDigitBudget);

}  // namespace omega
