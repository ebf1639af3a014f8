#include "omega/chunk_multiply.hpp"

#include <cctype>

namespace omega {

std::string ChunkedDecimal::to_digits() const {
  std::string out;
  out.reserve(source_digits);
  const std::size_t head =
      source_digits - chunk_width * (chunks.size() - 1);
  for (std::size_t i = chunks.size(); i-- > 0;) {
    const std::size_t width = (i + 1 == chunks.size()) ? head : chunk_width;
    std::string part = std::to_string(chunks[i]);
    out.append(width - part.size(), '0');
    out += part;
  }
  return out;
}

ChunkedDecimal chunk_decimal(std::string_view m, unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("chunk_decimal: chunk width must be positive");
  }
  if (m.empty()) {
    throw std::invalid_argument("chunk_decimal: empty digit string");
  }
  for (char c : m) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("chunk_decimal: non-digit '") +
                                  c + "'");
    }
  }
  ChunkedDecimal out;
  out.chunk_width = k;
  out.source_digits = m.size();
  std::size_t end = m.size();
  while (end > 0) {
    const std::size_t begin = end >= k ? end - k : 0;
    std::uint64_t value = 0;
    for (std::size_t i = begin; i < end; ++i) {
      value = value * 10 + static_cast<std::uint64_t>(m[i] - '0');
    }
    out.chunks.push_back(value);
    end = begin;
  }
  return out;
}

MultiplyTrace multiply_traced(std::string_view m, std::uint64_t n) {
  const OmegaSpace space = make_space(n);
  const ChunkedDecimal parts = chunk_decimal(m, space.k());

  MultiplyTrace trace;
  trace.steps.reserve(parts.chunks.size());
  std::uint64_t carry = 0;  // y_0 = 0; afterwards y_i = y'_{i-1}
  for (std::uint64_t chunk : parts.chunks) {
    const Point image = forward(space, {chunk, carry});
    trace.steps.push_back({image.x, image.y});
    carry = image.y;
  }

  std::string digits = std::to_string(carry);
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    const std::string part = std::to_string(trace.steps[i].chunk);
    digits.append(space.k() - part.size(), '0');
    digits += part;
  }
  const std::size_t first = digits.find_first_not_of('0');
  trace.product = first == std::string::npos ? "0" : digits.substr(first);
  return trace;
}

std::string multiply(std::string_view m, std::uint64_t n) {
  return multiply_traced(m, n).product;
}

}  // namespace omega
