#include <doctest.h>

#include <algorithm>

#include "qcong/counting.hpp"
#include "qcong/search.hpp"

using namespace qcong;

namespace {

const SearchCandidate* find(const std::vector<SearchCandidate>& v, std::size_t a, std::size_t b,
                            Modulus m) {
  for (const auto& c : v) {
    if (c.progression == Progression{a, b} && c.modulus == m) return &c;
  }
  return nullptr;
}

SearchOptions opts(unsigned ell, std::size_t step, Modulus m, std::size_t order) {
  SearchOptions o;
  o.ell = ell;
  o.max_step = step;
  o.max_modulus = m;
  o.order = order;
  return o;
}

}  // namespace

TEST_CASE("search rediscovers the R*_4 progressions") {
  const auto found = search(opts(4, 4, 4, 500));
  for (std::size_t b : {2u, 3u}) {
    const auto* c = find(found, 4, b, 4);
    REQUIRE(c != nullptr);
    CHECK(!c->rediscovers.empty());
    CHECK(c->rediscovers.front().rfind("thm3.1.i", 0) == 0);
    CHECK(c->evidence == (500 - b + 3) / 4);
  }
}

TEST_CASE("search rediscovers the R*_8 progressions") {
  const auto found = search(opts(8, 8, 8, 500));
  for (std::size_t b : {3u, 5u, 7u}) {
    const auto* c = find(found, 8, b, 8);
    REQUIRE(c != nullptr);
    CHECK(!c->rediscovers.empty());
  }
  const auto* c = find(found, 4, 3, 8);
  REQUIRE(c != nullptr);
  CHECK(!c->rediscovers.empty());
  // 8n+3 mod 8 is implied by 4n+3 mod 8.
  const auto* fine = find(found, 8, 3, 8);
  REQUIRE(fine->implied_by);
  CHECK(fine->implied_by->progression == Progression{4, 3});
  CHECK(fine->implied_by->modulus == 8);
}

TEST_CASE("search candidates hold on the counting oracle and are sorted") {
  for (unsigned ell : {2u, 4u, 8u}) {
    const std::size_t order = ell == 2 ? 100 : 500;
    const auto found = search(opts(ell, ell, ell, order));
    const auto r = counting::count({counting::Kind::nonoverlined_regular, ell}, order - 1).values;
    for (const auto& c : found) {
      CHECK(c.evidence >= 50);
      for (std::size_t i = c.progression.offset; i < order; i += c.progression.step) {
        CHECK(r[i] % c.modulus == 0);
      }
    }
    CHECK(std::is_sorted(found.begin(), found.end(), [](const auto& x, const auto& y) {
      return x.evidence > y.evidence;
    }));
    // Nothing missed: every (a, b, m) in range that holds on the oracle is reported.
    for (std::size_t a = 1; a <= ell; ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if ((order - b + a - 1) / a < 50) continue;
        for (Modulus m = 2; m <= ell; ++m) {
          bool holds = true;
          for (std::size_t i = b; i < order; i += a) holds = holds && r[i] % m == 0;
          CHECK((find(found, a, b, m) != nullptr) == holds);
        }
      }
    }
  }
}

TEST_CASE("search respects the support threshold") {
  auto o = opts(8, 8, 8, 120);
  const auto found = search(o);
  for (const auto& c : found) CHECK(c.evidence >= 50);
  o.min_support = 10;
  CHECK(search(o).size() >= found.size());
  CHECK_THROWS_AS(search(opts(0, 4, 4, 100)), ArgumentError);
}

TEST_CASE("search JSON shape") {
  const auto found = search(opts(4, 4, 4, 500));
  REQUIRE(!found.empty());
  const auto j = to_json(found.front());
  CHECK(j.contains("progression"));
  CHECK(j.contains("modulus"));
  CHECK(j.contains("evidence"));
  CHECK(j.contains("rediscovers"));
  CHECK(j.contains("implied_by"));
}
