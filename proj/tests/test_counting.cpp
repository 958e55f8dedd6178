#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "qcong/counting.hpp"
#include "qcong/qfunctions.hpp"

using namespace qcong;
using counting::Kind;

namespace {

// Counts partitions of n by brute force over (plain multiplicity, marked
// copies) per part size, filtered by the kind's definition.
long brute_count(Kind kind, unsigned ell, unsigned n) {
  std::function<long(unsigned, unsigned)> go = [&](unsigned size, unsigned left) -> long {
    if (left == 0) return 1;
    if (size == 0) return 0;
    const bool divisible = ell != 0 && size % ell == 0;
    const unsigned max_marked = kind == Kind::distinct_two_copies ? 2
                                : (kind == Kind::plain || kind == Kind::regular) ? 0
                                                                                 : 1;
    long total = 0;
    for (unsigned plain = 0; plain * size <= left; ++plain) {
      for (unsigned marked = 0; marked <= max_marked; ++marked) {
        const unsigned used = (plain + marked) * size;
        if (used > left) break;
        if (kind == Kind::distinct_two_copies && plain > 0) continue;
        if (kind == Kind::regular && divisible && plain > 0) continue;
        if (kind == Kind::nonoverlined_regular && divisible && plain > 0) continue;
        if (kind == Kind::overlined_regular && divisible && marked > 0) continue;
        // One of two distinguishable copies can be chosen in two ways.
        const long ways = (kind == Kind::distinct_two_copies && marked == 1) ? 2 : 1;
        total += ways * go(size - 1, left - used);
      }
    }
    return total;
  };
  return go(n, n);
}

EtaQuotient quotient_for(Kind kind, unsigned ell) {
  switch (kind) {
    case Kind::plain:
      return {{1, -1}};
    case Kind::overpartition:
      return {{2, 1}, {1, -2}};
    case Kind::regular:
      return {{ell, 1}, {1, -1}};
    case Kind::overlined_regular:
      return {{2, 1}, {ell, 1}, {1, -2}, {2 * ell, -1}};
    case Kind::nonoverlined_regular:
      return rstar_quotient(ell);
    case Kind::distinct_two_copies:
      return {{2, 2}, {1, -2}};
  }
  return {};
}

std::set<std::string> rendered(const std::vector<counting::Partition>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(counting::to_string(p));
  return out;
}

}  // namespace

TEST_CASE("count: anchors") {
  CHECK(counting::count({Kind::overpartition, 0}, 3).values[3] == 8);
  CHECK(counting::count({Kind::nonoverlined_regular, 2}, 3).values[3] == 6);
  CHECK(counting::count({Kind::overlined_regular, 2}, 3).values[3] == 6);
  CHECK(counting::count({Kind::plain, 0}, 3).values[3] == 3);
}

TEST_CASE("count: table invariants") {
  for (Kind k : {Kind::plain, Kind::overpartition, Kind::regular, Kind::overlined_regular,
                 Kind::nonoverlined_regular, Kind::distinct_two_copies}) {
    const auto t = counting::count({k, 3}, 60);
    CHECK(t.values.size() == 61);
    CHECK(t.values[0] == 1);
    for (std::size_t n = 1; n <= 60; ++n) {
      CHECK(t.values[n] >= 0);
      // Every kind here can use a part of size 1.
      CHECK(t.values[n] >= t.values[n - 1]);
    }
  }
}

TEST_CASE("count matches brute-force enumeration") {
  for (Kind k : {Kind::plain, Kind::overpartition, Kind::regular, Kind::overlined_regular,
                 Kind::nonoverlined_regular, Kind::distinct_two_copies}) {
    for (unsigned ell : {2u, 3u, 4u}) {
      const auto t = counting::count({k, ell}, 14);
      for (unsigned n = 0; n <= 14; ++n) {
        INFO(counting::PartitionKind{k, ell}.name() << " n=" << n);
        CHECK(t.values[n] == brute_count(k, ell, n));
      }
    }
  }
}

TEST_CASE("enumerate_small: examples") {
  const auto r2 = counting::enumerate_small({Kind::nonoverlined_regular, 2}, 3);
  CHECK(rendered(r2) ==
        std::set<std::string>{"3", "3'", "2' + 1", "2' + 1'", "1' + 1 + 1", "1 + 1 + 1"});
  const auto p3 = counting::enumerate_small({Kind::plain, 0}, 3);
  CHECK(rendered(p3) == std::set<std::string>{"3", "2 + 1", "1 + 1 + 1"});
  for (Kind k : {Kind::plain, Kind::overpartition, Kind::distinct_two_copies}) {
    const auto e = counting::enumerate_small({k, 2}, 0);
    REQUIRE(e.size() == 1);
    CHECK(e[0].empty());
  }
  CHECK_THROWS_AS(counting::enumerate_small({Kind::plain, 0}, 13), ArgumentError);
}

TEST_CASE("enumerate_small length equals the count") {
  for (Kind k : {Kind::plain, Kind::overpartition, Kind::regular, Kind::overlined_regular,
                 Kind::nonoverlined_regular, Kind::distinct_two_copies}) {
    for (unsigned ell : {2u, 3u, 5u}) {
      const auto t = counting::count({k, ell}, 10);
      for (unsigned n = 0; n <= 10; ++n) {
        const auto list = counting::enumerate_small({k, ell}, n);
        CHECK(mpz_class(static_cast<unsigned long>(list.size())) == t.values[n]);
        CHECK(rendered(list).size() == list.size());  // no duplicates
        for (const auto& p : list) {
          unsigned sum = 0;
          for (const auto& part : p) sum += part.size;
          CHECK(sum == n);
          CHECK(std::is_sorted(p.begin(), p.end(),
                               [](const auto& a, const auto& b) { return a.size > b.size; }));
        }
      }
    }
  }
}

TEST_CASE("oracle-series agreement for n <= 300") {
  for (unsigned ell : {2u, 3u, 4u, 5u, 6u, 8u, 10u, 15u}) {
    for (Kind k : {Kind::regular, Kind::overlined_regular, Kind::nonoverlined_regular}) {
      const auto t = counting::count({k, ell}, 300);
      const auto s = eta_quotient(quotient_for(k, ell), 301);
      for (std::size_t n = 0; n <= 300; ++n) CHECK(s.coefficient(n) == t.values[n]);
    }
  }
  for (Kind k : {Kind::plain, Kind::overpartition, Kind::distinct_two_copies}) {
    const auto t = counting::count({k, 0}, 300);
    const auto s = eta_quotient(quotient_for(k, 0), 301);
    for (std::size_t n = 0; n <= 300; ++n) CHECK(s.coefficient(n) == t.values[n]);
  }
}

TEST_CASE("Ramanujan congruences for n <= 300") {
  const auto p = counting::count({Kind::plain, 0}, 11 * 300 + 6).values;
  for (std::size_t n = 0; n <= 300; ++n) {
    CHECK(p[5 * n + 4] % 5 == 0);
    CHECK(p[7 * n + 5] % 7 == 0);
    CHECK(p[11 * n + 6] % 11 == 0);
  }
}

TEST_CASE("parse_kind") {
  CHECK(counting::parse_kind("rstar", 2) == counting::PartitionKind{Kind::nonoverlined_regular, 2});
  CHECK(counting::parse_kind("pbar", 0).kind == Kind::overpartition);
  CHECK(counting::parse_kind("d2", 0).kind == Kind::distinct_two_copies);
  CHECK_THROWS_AS(counting::parse_kind("rstar", 0), ArgumentError);
  CHECK_THROWS_AS(counting::parse_kind("bogus", 2), ArgumentError);
}
