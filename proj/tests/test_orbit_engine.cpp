#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "omega/orbit_engine.hpp"
#include "test_support.hpp"

using namespace omega;

namespace {

std::vector<Point> collect(const OmegaSpace& s, Point p) {
  std::vector<Point> out;
  for (Point q : orbit_iter(s, p)) out.push_back(q);
  return out;
}

DecompositionSignature sig_of(std::uint64_t n) {
  return decompose(make_space(n));
}

using Entries = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

}  // namespace

TEST_CASE("orbit_length on the standard point") {
  CHECK(orbit_length(make_space(2013), {2013, 0}) == 10064999);
  CHECK(orbit_length(make_space(2), {2, 0}) == 18);

  const OmegaSpace s34 = make_space(34);
  for (Point p : fixed_points(s34)) {
    CHECK(orbit_length(s34, p) == 1);
  }
  CHECK_THROWS_AS(orbit_length(make_space(7), {10, 0}), PointRangeError);
}

TEST_CASE("orbit_iter yields the orbit once, starting at the seed") {
  const OmegaSpace s2 = make_space(2);
  const auto orbit = collect(s2, {2, 0});
  REQUIRE(orbit.size() == 18);
  const std::vector<Point> head = {{2, 0}, {4, 0}, {8, 0},
                                   {6, 1}, {3, 1}, {7, 0}};
  CHECK(std::equal(head.begin(), head.end(), orbit.begin()));
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    CHECK(forward(s2, orbit[i]) == orbit[i + 1]);
  }

  CHECK(collect(make_space(34), {0, 0}) == std::vector<Point>{{0, 0}});
  CHECK(collect(make_space(103), {76, 95}) ==
        std::vector<Point>{{76, 95}, {923, 7}});
}

TEST_CASE("decompose reproduces known signatures") {
  CHECK(sig_of(10).entries == Entries{{1, 10}, {3, 330}});
  CHECK(sig_of(16).entries == Entries{{1, 4}, {3, 12}, {5, 24}, {15, 96}});
  CHECK(sig_of(20).entries == Entries{{1, 2}, {999, 2}});
  CHECK(sig_of(8).entries == Entries{{1, 2}, {13, 6}});
}

TEST_CASE("decompose respects the point cap") {
  CHECK_THROWS_AS(decompose(make_space(2), 10), CapacityError);
  CHECK_NOTHROW(decompose(make_space(2), 20));
}

TEST_CASE("partition property: orbit lengths sum to the space size") {
  for (std::uint64_t n = 1; n <= 99; ++n) {
    const OmegaSpace s = make_space(n);
    const auto sig = decompose(s);
    CHECK(sig.total_points() == s.size());
    for (const auto& [r, m] : sig.entries) {
      CHECK(r >= 1);
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("census counts self-conjugate orbits") {
  const ConjugacyCensus c103 = conjugacy_census(make_space(103));
  CHECK(c103.self_conjugate_by_length.at(2) == 6);

  const ConjugacyCensus c142 = conjugacy_census(make_space(142));
  CHECK(c142.self_conjugate_by_length.at(2) == 71);

  const ConjugacyCensus c37 = conjugacy_census(make_space(37));
  CHECK(c37.self_conjugate_by_length.at(4) == 34);

  const ConjugacyCensus c46 = conjugacy_census(make_space(46));
  CHECK(c46.self_conjugate_by_length.at(4) == 18);
}

TEST_CASE("census pair counts balance the orbit count") {
  for (std::uint64_t n : {2, 8, 10, 16, 34, 37, 103, 142}) {
    const OmegaSpace s = make_space(n);
    const ConjugacyCensus census = conjugacy_census(s);
    std::uint64_t self = 0;
    for (const auto& [len, count] : census.self_conjugate_by_length) {
      self += count;
    }
    CHECK(2 * census.conjugate_pair_count + self == census.orbit_count);
    CHECK(census.orbit_count == decompose(s).orbit_count());
  }
}

TEST_CASE("census agrees with the subgroup closed forms") {
  for (std::uint64_t n : {37, 46, 103, 142}) {
    const ConjugacyCensus census = conjugacy_census(make_space(n));
    const auto count_of = [&](std::uint64_t len) -> std::uint64_t {
      const auto it = census.self_conjugate_by_length.find(len);
      return it == census.self_conjugate_by_length.end() ? 0 : it->second;
    };
    CHECK(count_of(2) == testsupport::self_conjugate_pairs_closed_form(n));
    CHECK(count_of(4) == testsupport::self_conjugate_quads_closed_form(n));
  }
  // No single- or double-digit space has a self-conjugate 2-orbit.
  for (std::uint64_t n = 1; n <= 99; ++n) {
    CHECK(testsupport::self_conjugate_pairs_closed_form(n) == 0);
  }
}

TEST_CASE("orbits() lists every orbit ordered by canonical point") {
  const OmegaSpace s = make_space(103);
  const auto all = orbits(s);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const OrbitSummary& a, const OrbitSummary& b) {
                         return a.canonical < b.canonical;
                       }));

  // The six self-conjugate 2-orbits carry exactly these point pairs.
  const std::vector<std::vector<Point>> expected = {
      {{76, 95}, {923, 7}},  {{153, 87}, {846, 15}}, {{230, 79}, {769, 23}},
      {{307, 71}, {692, 31}}, {{384, 63}, {615, 39}}, {{461, 55}, {538, 47}}};
  std::vector<std::set<Point>> got;
  for (const OrbitSummary& o : all) {
    if (o.length == 2 && o.self_conjugate) {
      std::set<Point> pts;
      for (Point p : orbit_iter(s, o.generator)) pts.insert(p);
      got.push_back(std::move(pts));
    }
  }
  REQUIRE(got.size() == expected.size());
  for (const auto& pair : expected) {
    CHECK(std::count(got.begin(), got.end(),
                     std::set<Point>(pair.begin(), pair.end())) == 1);
  }
}

TEST_CASE("orbit summaries: canonical lies on the orbit, length-1 = fixed") {
  for (std::uint64_t n : {2, 11, 16, 34}) {
    const OmegaSpace s = make_space(n);
    for (const OrbitSummary& o : orbits(s)) {
      const auto pts = collect(s, o.generator);
      CHECK(pts.size() == o.length);
      CHECK(std::find(pts.begin(), pts.end(), o.canonical) != pts.end());
      CHECK(*std::min_element(pts.begin(), pts.end()) == o.canonical);
      CHECK((o.length == 1) == (forward(s, o.generator) == o.generator));
    }
  }
}

TEST_CASE("the conjugate image of an orbit is an orbit of the same length") {
  for (std::uint64_t n = 1; n <= 99; ++n) {
    const OmegaSpace s = make_space(n);
    bool ok = true;
    for (const OrbitSummary& o : orbits(s)) {
      std::set<Point> image;
      for (Point p : orbit_iter(s, o.generator)) {
        image.insert(conjugate(s, p));
      }
      std::set<Point> partner;
      for (Point p : orbit_iter(s, conjugate(s, o.generator))) {
        partner.insert(p);
      }
      ok = ok && image == partner && image.size() == o.length;
      ok = ok && (o.self_conjugate ==
                  (image.count(o.generator) == 1));
    }
    CHECK(ok);
  }
}

TEST_CASE("decompose equals the cycle structure of v -> n*v mod (n*10^k-1)") {
  for (std::uint64_t n = 1; n <= 99; ++n) {
    const auto sig = decompose(make_space(n)).entries;
    const auto oracle = testsupport::modular_cycle_structure(n);
    CHECK(sig == Entries(oracle.begin(), oracle.end()));
  }
}

TEST_CASE("order_oracle computes the multiplicative order of 10") {
  CHECK(order_oracle(make_space(10)) == 3);    // 10^3 = 1 mod 999
  CHECK(order_oracle(make_space(2)) == 18);    // mod 19
  CHECK(order_oracle(make_space(1)) == 1);     // mod 9

  // mod 20129999 the order is 10064999: half of M-1, and odd, so it is not
  // divisible by k = 4. Verified independently via modular exponentiation.
  const std::uint64_t d = order_oracle(make_space(2013));
  CHECK(d == 10064999);
  CHECK(testsupport::modpow(10, d, 20129999) == 1);
  CHECK(testsupport::modpow(10, d / 7, 20129999) != 1);
  CHECK(testsupport::modpow(10, d / 10064999, 20129999) != 1);
}

TEST_CASE("standard orbit length is d / gcd(d, k)") {
  for (std::uint64_t n = 1; n <= 99; ++n) {
    const OmegaSpace s = make_space(n);
    const std::uint64_t d = order_oracle(s);
    std::uint64_t g = d, b = s.k();
    while (b) {
      const std::uint64_t t = g % b;
      g = b;
      b = t;
    }
    CHECK(orbit_length(s, {n, 0}) == d / g);
  }
}
