#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omega/core_map.hpp"

namespace omega {

// A decimal number split into base-10^k chunks, least significant first.
struct ChunkedDecimal {
  std::vector<std::uint64_t> chunks;
  unsigned chunk_width = 0;      // k
  std::size_t source_digits = 0;

  std::size_t chunk_count() const { return chunks.size(); }
  // Reassembles the source digit string, leading zeros included.
  std::string to_digits() const;
};

// Partitions m from its end into groups of k digits; the most significant
// group may be shorter. Throws std::invalid_argument for an empty string,
// a non-digit character, or k = 0.
ChunkedDecimal chunk_decimal(std::string_view m, unsigned k);

struct MultiplyStep {
  std::uint64_t chunk;  // x'_i, the produced base-10^k digit
  std::uint64_t carry;  // y'_i, carried into the next step
};

struct MultiplyTrace {
  std::vector<MultiplyStep> steps;  // in chunk order, least significant first
  std::string product;
};

// m * n where n is treated as one k-digit chunk: split m with width
// k = digits(n), start with carry 0 and apply one forward step of Omega_n
// per chunk, chaining each carry into the next step. The result is the final
// carry followed by the produced chunks, leading zeros stripped.
MultiplyTrace multiply_traced(std::string_view m, std::uint64_t n);

std::string multiply(std::string_view m, std::uint64_t n);

}  // namespace omega
