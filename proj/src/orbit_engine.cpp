#include "omega/orbit_engine.hpp"

#include <algorithm>
#include <string>

namespace omega {

namespace {

// Hot loop with the chunk modulus as a compile-time constant, so the modulo
// and division compile to multiply-shift sequences. Desk-scale scans spend
// essentially all their time here.
template <std::uint64_t Modulus>
std::uint64_t orbit_length_loop(std::uint64_t n, Point start) {
  const std::uint64_t x0 = start.x, y0 = start.y;
  std::uint64_t x = x0, y = y0, r = 0;
  do {
    const std::uint64_t m = n * x + y;
    x = m % Modulus;
    y = m / Modulus;
    ++r;
  } while (x != x0 || y != y0);
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t orbit_length(const OmegaSpace& space, Point p) {
  if (!space.contains(p)) {
    throw PointRangeError("orbit_length: point outside Omega_" +
                          std::to_string(space.n()));
  }
  switch (space.k()) {
    case 1: return orbit_length_loop<10ull>(space.n(), p);
    case 2: return orbit_length_loop<100ull>(space.n(), p);
    case 3: return orbit_length_loop<1000ull>(space.n(), p);
    case 4: return orbit_length_loop<10000ull>(space.n(), p);
    case 5: return orbit_length_loop<100000ull>(space.n(), p);
    case 6: return orbit_length_loop<1000000ull>(space.n(), p);
    case 7: return orbit_length_loop<10000000ull>(space.n(), p);
    case 8: return orbit_length_loop<100000000ull>(space.n(), p);
    default: return orbit_length_loop<1000000000ull>(space.n(), p);
  }
}

OrbitRange::OrbitRange(const OmegaSpace& space, Point start)
    : space_(space), start_(start) {
  if (!space.contains(start)) {
    throw PointRangeError("orbit_iter: point outside Omega_" +
                          std::to_string(space.n()));
  }
}

OrbitRange orbit_iter(const OmegaSpace& space, Point p) {
  return OrbitRange(space, p);
}

void scan_orbits(const OmegaSpace& space, std::uint64_t cap,
                 const std::function<void(const OrbitSummary&)>& visit,
                 std::vector<std::uint32_t>* orbit_of) {
  const std::uint64_t size = space.size();
  if (size > cap) {
    throw CapacityError("scan: |Omega_" + std::to_string(space.n()) + "| = " +
                        std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
  }
  const std::uint64_t n = space.n();
  const std::uint64_t modulus = space.chunk_modulus();
  const std::uint64_t top = size - 1;  // index of the conjugate of v = 0

  std::vector<bool> visited(size, false);
  if (orbit_of) {
    orbit_of->assign(size, 0);
  }

  std::uint32_t next_id = 0;
  for (std::uint64_t v0 = 0; v0 < size; ++v0) {
    if (visited[v0]) continue;
    OrbitSummary s;
    s.generator = space.point_at(v0);
    s.canonical = s.generator;
    const std::uint64_t conj_v0 = top - v0;  // conjugation is v -> size-1-v
    std::uint64_t x = s.generator.x, y = s.generator.y;
    std::uint64_t v = v0;
    do {
      visited[v] = true;
      if (orbit_of) (*orbit_of)[v] = next_id;
      if (v == conj_v0) s.self_conjugate = true;
      s.canonical = std::min(s.canonical, Point{x, y});
      ++s.length;
      const std::uint64_t m = n * x + y;
      x = m % modulus;
      y = m / modulus;
      v = x + modulus * y;
    } while (v != v0);
    visit(s);
    ++next_id;
  }
}

std::uint64_t DecompositionSignature::total_points() const {
  std::uint64_t total = 0;
  for (const auto& [r, m] : entries) total += r * m;
  return total;
}

std::uint64_t DecompositionSignature::orbit_count() const {
  std::uint64_t total = 0;
  for (const auto& [r, m] : entries) total += m;
  return total;
}

DecompositionSignature decompose(const OmegaSpace& space, std::uint64_t cap) {
  std::map<std::uint64_t, std::uint64_t> lengths;
  scan_orbits(space, cap,
              [&](const OrbitSummary& s) { ++lengths[s.length]; });
  DecompositionSignature sig;
  sig.entries.assign(lengths.begin(), lengths.end());
  return sig;
}

ConjugacyCensus conjugacy_census(const OmegaSpace& space, std::uint64_t cap) {
  ConjugacyCensus census;
  std::uint64_t unpaired = 0;
  scan_orbits(space, cap, [&](const OrbitSummary& s) {
    ++census.orbit_count;
    if (s.self_conjugate) {
      ++census.self_conjugate_by_length[s.length];
    } else {
      ++unpaired;
    }
  });
  // The conjugate image of an orbit is an orbit, so non-self-conjugate
  // orbits come in pairs.
  census.conjugate_pair_count = unpaired / 2;
  return census;
}

std::vector<OrbitSummary> orbits(const OmegaSpace& space, std::uint64_t cap) {
  std::vector<OrbitSummary> out;
  scan_orbits(space, cap, [&](const OrbitSummary& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(),
            [](const OrbitSummary& a, const OrbitSummary& b) {
              return a.canonical < b.canonical;
            });
  return out;
}

std::uint64_t order_oracle(const OmegaSpace& space) {
  const std::uint64_t m = space.size() - 1;
  std::uint64_t acc = 10 % m;
  std::uint64_t order = 1;
  while (acc != 1) {
    acc = mulmod(acc, 10, m);
    ++order;
  }
  return order;
}

}  // namespace omega
