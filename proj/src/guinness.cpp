#include "omega/guinness.hpp"

#include <atomic>
#include <algorithm>
#include <ostream>
#include <thread>

#include "omega/orbit_engine.hpp"

namespace omega {

namespace {

void write_chunk(char* dst, std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) {
    dst[i] = static_cast<char>('0' + value % 10);
    value /= 10;
  }
}

// digits * n for a small n, school method. Keeps the input's length
// (leading zeros included); a final carry prepends extra digits.
std::string school_multiply(const std::string& digits, std::uint64_t n) {
  std::string out(digits.size(), '0');
  std::uint64_t carry = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const std::uint64_t t =
        static_cast<std::uint64_t>(digits[i] - '0') * n + carry;
    out[i] = static_cast<char>('0' + t % 10);
    carry = t / 10;
  }
  if (carry != 0) {
    out.insert(0, std::to_string(carry));
  }
  return out;
}

// digits / n by long division; quotient has the same length as the input
// (leading zeros kept). Returns the remainder through rem.
std::string school_divide(const std::string& digits, std::uint64_t n,
                          std::uint64_t& rem) {
  std::string q(digits.size(), '0');
  rem = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::uint64_t cur = rem * 10 + static_cast<std::uint64_t>(digits[i] - '0');
    q[i] = static_cast<char>('0' + cur / n);
    rem = cur % n;
  }
  return q;
}

}  // namespace

std::string_view to_string(GuinnessKind kind) {
  switch (kind) {
    case GuinnessKind::Whole: return "whole";
    case GuinnessKind::Half: return "half";
    default: return "neither";
  }
}

GuinnessClass classify(std::uint64_t n) {
  const OmegaSpace space = make_space(n);
  const std::uint64_t r = orbit_length(space, {n, 0});
  GuinnessClass out;
  out.standard_orbit_length = r;
  if (r == space.size() - 2) {
    out.kind = GuinnessKind::Whole;
  } else if (r == space.size() / 2 - 1) {
    out.kind = GuinnessKind::Half;
  } else {
    out.kind = GuinnessKind::Neither;
  }
  return out;
}

std::vector<std::uint64_t> scan(std::uint64_t lo, std::uint64_t hi,
                                GuinnessKind kind, unsigned jobs) {
  if (kind == GuinnessKind::Neither) {
    throw std::invalid_argument("scan: kind must be whole or half");
  }
  if (lo == 0 || lo > hi) {
    throw std::invalid_argument("scan: need 1 <= lo <= hi");
  }
  make_space(hi);  // capacity check up front; capacity is monotone in n

  const std::uint64_t count = hi - lo + 1;
  std::vector<std::uint8_t> match(count, 0);
  std::atomic<std::uint64_t> cursor{lo};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t n = cursor.fetch_add(1, std::memory_order_relaxed);
      if (n > hi) break;
      match[n - lo] = classify(n).kind == kind;
    }
  };

  const unsigned extra =
      jobs > 1 ? std::min<std::uint64_t>(jobs - 1, count - 1) : 0;
  std::vector<std::thread> pool;
  pool.reserve(extra);
  for (unsigned i = 0; i < extra; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (match[i]) out.push_back(lo + i);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> twins(std::uint64_t lo,
                                                           std::uint64_t hi,
                                                           unsigned jobs) {
  const std::vector<std::uint64_t> halves =
      scan(lo, hi, GuinnessKind::Half, jobs);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i + 1 < halves.size(); ++i) {
    if (halves[i] + 1 == halves[i + 1]) {
      out.emplace_back(halves[i], halves[i] + 1);
    }
  }
  return out;
}

DigitChunkStream::DigitChunkStream(OmegaSpace space, std::uint64_t total)
    : space_(space),
      seed_{space.n(), 0},
      cursor_{space.n(), 0},
      total_(total) {}

std::optional<std::uint64_t> DigitChunkStream::next_chunk() {
  if (emitted_ == total_) return std::nullopt;
  std::uint64_t chunk;
  if (emitted_ == 0) {
    chunk = seed_.x;  // the generating chunk n itself
  } else {
    chunk = cursor_.x;
  }
  cursor_ = inverse(space_, cursor_);
  ++emitted_;
  return chunk;
}

std::uint64_t DigitChunkStream::write_digits(std::ostream& out) {
  const unsigned width = space_.k();
  std::string buffer;
  buffer.resize(std::size_t{1} << 16);
  std::size_t pos = 0;
  std::uint64_t written = 0;
  while (auto chunk = next_chunk()) {
    if (pos + width > buffer.size()) {
      out.write(buffer.data(), static_cast<std::streamsize>(pos));
      pos = 0;
    }
    write_chunk(buffer.data() + pos, *chunk, width);
    pos += width;
    written += width;
  }
  out.write(buffer.data(), static_cast<std::streamsize>(pos));
  return written;
}

std::string DigitChunkStream::to_digit_string() {
  std::string out;
  out.reserve(total_digits() - emitted_ * chunk_width());
  const unsigned width = space_.k();
  char buf[24];
  while (auto chunk = next_chunk()) {
    write_chunk(buf, *chunk, width);
    out.append(buf, width);
  }
  return out;
}

DigitChunkStream digit_stream(std::uint64_t n) {
  const OmegaSpace space = make_space(n);
  const std::uint64_t r = orbit_length(space, {n, 0});
  return DigitChunkStream(space, r);
}

RotationCheck verify_rotation(std::uint64_t n, std::uint64_t max_digits) {
  const GuinnessClass cls = classify(n);
  if (cls.kind == GuinnessKind::Neither) {
    throw NotGuinnessError("verify_rotation: " + std::to_string(n) +
                           " is not a Guinness number");
  }
  const OmegaSpace space = make_space(n);
  const std::uint64_t r = cls.standard_orbit_length;
  const unsigned k = space.k();
  const std::uint64_t digit_count = r * k;
  if (digit_count > max_digits) {
    throw CapacityError("verify_rotation: " + std::to_string(digit_count) +
                        " digits exceed the budget of " +
                        std::to_string(max_digits));
  }

  // Materialize G_n by *forward* iteration: chunk x_i lands at character
  // offset (r-i)*k for i >= 1 and chunk x_0 at offset 0. This is a separate
  // route from DigitChunkStream's inverse walk, so the two can be checked
  // against each other.
  std::string g(digit_count, '0');
  Point p{n, 0};
  write_chunk(g.data(), p.x, k);
  for (std::uint64_t i = 1; i < r; ++i) {
    p = forward(space, p);
    write_chunk(g.data() + (r - i) * k, p.x, k);
  }

  RotationCheck check;
  check.n = n;
  check.digit_count = digit_count;
  check.first_chunk = g.substr(0, k);

  std::string rotated = g.substr(k);
  rotated += check.first_chunk;
  check.holds = school_multiply(rotated, n) == g;

  std::uint64_t rem = 0;
  const std::string quotient = school_divide(g, n, rem);
  check.quotient_tail_match = rem == 0 && quotient == rotated;
  return check;
}

}  // namespace omega
