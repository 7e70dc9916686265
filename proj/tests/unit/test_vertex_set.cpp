#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "doctest.h"
#include "essc/vertex_set.hpp"
#include "unit/fixtures.hpp"

using essc::VertexSet;
using essc::vertex_id;

TEST_CASE("construction enforces strictly increasing ids") {
  CHECK_NOTHROW(VertexSet({0, 3, 7}));
  CHECK_THROWS_AS(VertexSet({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet({2, 2}), std::invalid_argument);
  CHECK(VertexSet::from_unsorted({5, 1, 5, 3}) == VertexSet({1, 3, 5}));
  CHECK(VertexSet::range(4) == VertexSet({0, 1, 2, 3}));
  CHECK(VertexSet::range(0).empty());
}

TEST_CASE("membership") {
  const VertexSet s({1, 4, 9});
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK_FALSE(VertexSet().contains(0));
}

TEST_CASE("set algebra matches std::set") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = essc::test::random_subset(40, 0.4, rng);
    const auto b = essc::test::random_subset(40, 0.3, rng);
    std::set<vertex_id> sa(a.begin(), a.end());
    std::set<vertex_id> sb(b.begin(), b.end());
    std::vector<vertex_id> u, i, d;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(u));
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(i));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(d));
    CHECK(a.set_union(b) == VertexSet(u));
    CHECK(a.set_intersection(b) == VertexSet(i));
    CHECK(a.set_difference(b) == VertexSet(d));
    CHECK(a.intersection_size(b) == i.size());
  }
}

TEST_CASE("ordering is by size, then lexicographic") {
  CHECK(VertexSet({9}) < VertexSet({0, 1}));
  CHECK(VertexSet({0, 2}) < VertexSet({1, 2}));
  CHECK(VertexSet({0, 1}) < VertexSet({0, 2}));
  CHECK((VertexSet({3}) <=> VertexSet({3})) == std::strong_ordering::equal);
}

TEST_CASE("hashing agrees with equality") {
  std::unordered_set<VertexSet> seen;
  seen.insert(VertexSet({1, 2}));
  seen.insert(VertexSet::from_unsorted({2, 1}));
  seen.insert(VertexSet({1, 3}));
  CHECK(seen.size() == 2);
}
