#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "omega/core_map.hpp"

namespace omega {

// Default ceiling for full-space scans (decompose, census, color partition).
inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 31;

struct OrbitSummary {
  Point generator;            // first point discovered (smallest index v)
  std::uint64_t length = 0;   // least r >= 1 with forward^r(p) = p
  Point canonical;            // lexicographically smallest (x, y) on the orbit
  bool self_conjugate = false;  // point set closed under conjugation
};

// Orbit-length multiset of the full partition of the space.
struct DecompositionSignature {
  // (orbit length r_i, multiplicity m_i), ascending by r_i.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::uint64_t total_points() const;
  std::uint64_t orbit_count() const;
};

struct ConjugacyCensus {
  std::map<std::uint64_t, std::uint64_t> self_conjugate_by_length;
  std::uint64_t conjugate_pair_count = 0;  // unordered {orbit, conjugate} pairs
  std::uint64_t orbit_count = 0;
};

// Least r >= 1 with forward^r(p) = p, by direct iteration.
std::uint64_t orbit_length(const OmegaSpace& space, Point p);

// Single-pass range over the orbit of p: yields exactly r points starting at
// p, each the forward image of its predecessor.
class OrbitRange {
 public:
  class iterator {
   public:
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    Point operator*() const { return current_; }
    iterator& operator++() {
      current_ = forward(*space_, current_);
      done_ = current_ == start_;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class OrbitRange;
    iterator(const OmegaSpace* space, Point start)
        : space_(space), start_(start), current_(start) {}

    const OmegaSpace* space_;
    Point start_;
    Point current_;
    bool done_ = false;
  };

  OrbitRange(const OmegaSpace& space, Point start);

  iterator begin() const { return iterator(&space_, start_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  const OmegaSpace& space_;
  Point start_;
};

OrbitRange orbit_iter(const OmegaSpace& space, Point p);

// Visits every orbit of the space once, in order of its smallest index v.
// When orbit_of is non-null it receives one entry per point: the id of the
// orbit containing that point, ids in visit order. Throws CapacityError when
// the space exceeds cap.
void scan_orbits(const OmegaSpace& space, std::uint64_t cap,
                 const std::function<void(const OrbitSummary&)>& visit,
                 std::vector<std::uint32_t>* orbit_of = nullptr);

DecompositionSignature decompose(const OmegaSpace& space,
                                 std::uint64_t cap = kDefaultScanCap);

ConjugacyCensus conjugacy_census(const OmegaSpace& space,
                                 std::uint64_t cap = kDefaultScanCap);

// All orbit summaries, ordered by canonical representative.
std::vector<OrbitSummary> orbits(const OmegaSpace& space,
                                 std::uint64_t cap = kDefaultScanCap);

// Multiplicative order of 10 modulo M = n*10^k - 1, by iterated modular
// multiplication. gcd(10, M) = 1 always holds since M ends in 9. Exists for
// cross-validation only; the orbit operations above never consult it.
std::uint64_t order_oracle(const OmegaSpace& space);

}  // namespace omega
