#include <set>

#include "blockset/bounds.hpp"
#include "blockset/construct3.hpp"
#include "blockset/verify.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

EdgeTuple tri(VertexId a, VertexId b, VertexId c) { return EdgeTuple::canonical({a, b, c}, 64); }

std::vector<VertexId> iota_ids(VertexId from, std::size_t count) {
  std::vector<VertexId> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<VertexId>(from + i);
  return v;
}

}  // namespace

TEST_CASE("h_pair sizes and members") {
  const std::vector<VertexId> a1{0}, b1{1};
  CHECK(h_pair(a1, b1).empty());

  const std::vector<VertexId> a2{0, 1}, b2{2, 3};
  const auto two = h_pair(a2, b2);
  CHECK(two == std::vector<EdgeTuple>{tri(0, 1, 2), tri(0, 1, 3)});

  for (std::size_t k = 2; k <= 9; ++k) {
    const auto a = iota_ids(0, k);
    const auto b = iota_ids(static_cast<VertexId>(k), k);
    CHECK(h_pair(a, b).size() == k * (k - 1));
  }

  const std::vector<VertexId> overlap_a{0, 1}, overlap_b{1, 2};
  try {
    h_pair(overlap_a, overlap_b);
    FAIL("expected OverlappingSets");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverlappingSets);
  }
}

TEST_CASE("construct3 small cases") {
  const auto n3 = construct3(3);
  REQUIRE(n3.family.size() == 1);
  CHECK(n3.family.edges()[0] == tri(0, 1, 2));

  const auto n6 = construct3(6);
  const std::set<EdgeTuple> golden{tri(0, 1, 2), tri(0, 1, 3), tri(2, 3, 4), tri(2, 3, 5),
                                   tri(0, 4, 5), tri(1, 4, 5), tri(0, 2, 4), tri(1, 3, 5)};
  CHECK(std::set<EdgeTuple>(n6.family.begin(), n6.family.end()) == golden);
  CHECK(n6.count(EdgeColor::Red) == 6);
  CHECK(n6.count(EdgeColor::Blue) == 2);

  CHECK(construct3(7).family.size() == 12);
  CHECK(construct3(11).family.size() == 33);

  CHECK_THROWS_AS(construct3(2), Error);
}

TEST_CASE("construct3 sizes match the closed forms") {
  for (std::size_t n = 3; n <= 60; ++n) {
    CAPTURE(n);
    const auto c = construct3(n);
    const std::size_t k = n / 3;
    CHECK(c.family.size() == phi3(n));
    const std::size_t closed = n % 3 == 0 ? 3 * k * k - 2 * k : (n % 3 == 1 ? 3 * k * k : 3 * k * k + 2 * k);
    CHECK(c.family.size() == closed);
    CHECK(c.count(EdgeColor::Red) == 3 * k * (k - 1));
    const std::size_t blue = n % 3 == 0 ? k : (n % 3 == 1 ? 3 * k : 5 * k);
    CHECK(c.count(EdgeColor::Blue) == blue);
    CHECK(c.colors.size() == c.family.size());
  }
}

TEST_CASE("construct3 vertex degrees") {
  for (std::size_t n = 3; n <= 30; ++n) {
    CAPTURE(n);
    const auto c = construct3(n);
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : c.family) {
      for (auto v : e) ++degree[v];
    }
    for (std::size_t v = 0; v < n; ++v) {
      CHECK(degree[v] >= n - 2);
      if (n % 3 == 0) CHECK(degree[v] == n - 2);
    }
  }
}

TEST_CASE("construct3 is accepted by both verifiers for n <= 12") {
  for (std::size_t n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const auto f = construct3(n).family;
    CHECK(verify_link(f).blocking);
    CHECK(verify_enumerate(f).blocking);
  }
}

TEST_CASE("Layout3 numbering") {
  const Layout3 l(11);
  CHECK(l.k == 3);
  CHECK(l.u(0) == 0);
  CHECK(l.v(0) == 3);
  CHECK(l.w(2) == 8);
  CHECK(l.u(3) == 0);  // indices mod k
  CHECK(l.infinity1() == 9);
  CHECK(l.infinity2() == 10);
}

TEST_CASE("structure_report examples") {
  SUBCASE("A untouched, one vertex of B removed") {
    const auto a = iota_ids(0, 4), b = iota_ids(4, 4);
    const std::vector<VertexId> x{b[0]};
    const auto r = structure_report(a, b, x);
    REQUIRE(r.a_induced_connected);
    CHECK(*r.a_induced_connected);
    REQUIRE(r.no_ab_edges);
    CHECK(*r.no_ab_edges);
    CHECK(r.all_hold());
  }
  SUBCASE("all of B removed gives a complete graph on A") {
    const auto a = iota_ids(0, 3), b = iota_ids(3, 3);
    const auto r = structure_report(a, b, b);
    REQUIRE(r.complete_on_a_minus_x);
    CHECK(*r.complete_on_a_minus_x);
    CHECK(r.component_count == 1);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].size() == 3);
  }
  SUBCASE("mixed removal has at most two components") {
    const auto a = iota_ids(0, 5), b = iota_ids(5, 5);
    const std::vector<VertexId> x{a[0], b[1]};
    const auto r = structure_report(a, b, x);
    CHECK((r.component_count == 1 || r.component_count == 2));
    REQUIRE(r.at_most_two_components);
    CHECK(*r.at_most_two_components);
  }
}

TEST_CASE("structure clauses hold exhaustively for k <= 5") {
  std::size_t two_component_cases = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto a = iota_ids(0, k), b = iota_ids(static_cast<VertexId>(k), k);
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      std::vector<VertexId> x;
      for (VertexId v = 0; v < 2 * k; ++v) {
        if (mask >> v & 1) x.push_back(v);
      }
      const auto r = structure_report(a, b, x);
      CAPTURE(k);
      CAPTURE(mask);
      REQUIRE(r.all_hold());
      if (r.segments_split_initial_terminal) ++two_component_cases;
    }
  }
  // The two-component branch is actually exercised.
  CHECK(two_component_cases > 0);
}

TEST_CASE("removing all of A is outside the two-component clause") {
  // With A inside X no pair of a triple survives, so B \ X is edgeless.
  const auto a = iota_ids(0, 4), b = iota_ids(4, 4);
  const auto r = structure_report(a, b, a);
  CHECK(r.component_count == 4);
  CHECK_FALSE(r.at_most_two_components.has_value());
}

TEST_CASE("red and blue edge sets are disjoint") {
  for (std::size_t n = 3; n <= 40; ++n) {
    const auto c = construct3(n);
    std::set<EdgeTuple> red;
    for (std::size_t j = 0; j < 3; ++j) {
      const Layout3 l(n);
      const auto ids_a = l.block_ids(j), ids_b = l.block_ids((j + 1) % 3);
      if (l.k == 0) continue;
      for (const auto& e : h_pair(ids_a, ids_b)) red.insert(e);
    }
    std::size_t red_seen = 0;
    for (std::size_t i = 0; i < c.family.size(); ++i) {
      const bool is_red = red.count(c.family.edges()[i]) > 0;
      CHECK(is_red == (c.colors[i] == EdgeColor::Red));
      red_seen += is_red;
    }
    CHECK(red_seen == red.size());
  }
}
