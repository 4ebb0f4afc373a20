#include <random>

#include "blockset/construct3.hpp"
#include "blockset/construct_d.hpp"
#include "blockset/verify.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

EdgeTuple tri(VertexId a, VertexId b, VertexId c, std::size_t n) { return EdgeTuple::canonical({a, b, c}, n); }

Family star3(std::size_t n) {
  std::vector<EdgeTuple> edges;
  for (VertexId i = 1; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back(tri(0, i, j, n));
  }
  return Family(n, 3, edges);
}

Family random_family(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<EdgeTuple> edges;
  for (const auto& t : all_tuples(n, 3)) {
    if (keep(rng)) edges.push_back(t);
  }
  return Family(n, 3, edges);
}

}  // namespace

TEST_CASE("link_graph examples") {
  const auto f6 = construct3(6).family;
  const VertexId x0[] = {0};
  const auto g = link_graph(f6, x0);
  CHECK(g.vertices == std::vector<VertexId>{1, 2, 3, 4, 5});
  CHECK(g.edges == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {1, 3}, {2, 4}, {4, 5}});
  CHECK(g.connected());

  const Family single(4, 3, {tri(0, 1, 2, 4)});
  const VertexId x3[] = {3};
  const auto g3 = link_graph(single, x3);
  CHECK(g3.vertices.size() == 3);
  CHECK(g3.edges.empty());
  CHECK(g3.components().size() == 3);

  const auto g0 = link_graph(single, x0);
  CHECK(g0.edges == std::vector<std::pair<VertexId, VertexId>>{{1, 2}});
  CHECK(g0.components() == std::vector<std::vector<VertexId>>{{1, 2}, {3}});

  const Family quad(4, 4, {EdgeTuple::canonical({0, 1, 2, 3}, 4)});
  CHECK_THROWS_AS(link_graph(quad, x0), Error);
}

TEST_CASE("verify_link examples") {
  CHECK(verify_link(construct3(9).family).blocking);
  CHECK(verify_link(star3(6)).blocking);

  const Family single(4, 3, {tri(0, 1, 2, 4)});
  const auto r = verify_link(single);
  CHECK_FALSE(r.blocking);
  const auto* w = std::get_if<DisconnectedLink>(&r.witness);
  REQUIRE(w != nullptr);
  // Numerically smallest failing X is {0}: its link is the edge {1,2} plus the isolated 3.
  CHECK(w->removed == std::vector<VertexId>{0});
  CHECK(w->first == std::vector<VertexId>{1, 2});
  CHECK(w->second == std::vector<VertexId>{3});
  CHECK(r.examined == 1);
  // X = {3} also fails.
  const VertexId x3[] = {3};
  CHECK_FALSE(link_graph(single, x3).connected());
  CHECK(witness_is_sound(single, r));
}

TEST_CASE("verify_link guards") {
  const Family quad(5, 4, {EdgeTuple::canonical({0, 1, 2, 3}, 5)});
  CHECK_THROWS_AS(verify_link(quad), Error);
  VerifyOptions small;
  small.max_link_n = 8;
  try {
    verify_link(construct3(9).family, small);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("verify_enumerate examples") {
  const auto r7 = verify_enumerate(construct3(7).family);
  CHECK(r7.blocking);
  CHECK(r7.examined == 301);

  const auto r48 = verify_enumerate(construct_d(4, 8).family);
  CHECK(r48.blocking);
  CHECK(r48.examined == 1701);

  const Family single(4, 3, {tri(0, 1, 2, 4)});
  const auto r = verify_enumerate(single);
  CHECK_FALSE(r.blocking);
  const auto* w = std::get_if<UnblockedPartition>(&r.witness);
  REQUIRE(w != nullptr);
  CHECK(to_string(w->partition) == "0012");  // first labeling in canonical order
  CHECK(r.examined == 1);
  CHECK(witness_is_sound(single, r));

  const Family tiny(2, 3);
  CHECK_THROWS_AS(verify_enumerate(tiny), Error);
}

TEST_CASE("link_hypergraph examples") {
  const Family quad(4, 4, {EdgeTuple::canonical({0, 1, 2, 3}, 4)});
  const VertexId x01[] = {0, 1};
  const auto h = link_hypergraph(quad, x01);
  CHECK(h.uniformity == 2);
  REQUIRE(h.hyperedges.size() == 1);
  CHECK(h.hyperedges[0] == EdgeTuple::from_sorted({2, 3}));

  const auto f6 = construct3(6).family;
  const VertexId x0[] = {0};
  const auto l6 = link_hypergraph(f6, x0);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : l6.hyperedges) pairs.emplace_back(e[0], e[1]);
  CHECK(pairs == link_graph(f6, x0).edges);

  const VertexId x4[] = {4};
  const auto ls = link_hypergraph(star3(5), x4);
  CHECK(ls.hyperedges == std::vector<EdgeTuple>{EdgeTuple::from_sorted({0, 1}), EdgeTuple::from_sorted({0, 2}),
                                                EdgeTuple::from_sorted({0, 3})});

  const VertexId x012[] = {0, 1, 2};
  try {
    link_hypergraph(quad, x012);
    FAIL("expected ArityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityViolation);
  }
}

TEST_CASE("blocking families have links with at least n-d+1 edges") {
  const auto f = construct_d(4, 8).family;
  for (const auto& c : all_tuples(8, 2)) {
    const auto h = link_hypergraph(f, c.vertices());
    CHECK(h.hyperedges.size() >= 8 - 4 + 1);
  }
}

TEST_CASE("link and enumeration verdicts agree on random families") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> size(4, 9);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  int negatives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const auto f = random_family(rng, n, density(rng));
    const auto a = verify_link(f);
    const auto b = verify_enumerate(f);
    CAPTURE(trial);
    REQUIRE(a.blocking == b.blocking);
    REQUIRE(witness_is_sound(f, a));
    REQUIRE(witness_is_sound(f, b));
    negatives += !a.blocking;
  }
  CHECK(negatives > 0);
  CHECK(negatives < 200);
}

TEST_CASE("monotonicity under adding and removing edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + trial % 3;
    const auto f = random_family(rng, n, 0.5);
    const auto tuples = all_tuples(n, 3);
    const auto& t = tuples[rng() % tuples.size()];
    if (verify_enumerate(f).blocking) {
      CHECK(verify_enumerate(f.with(t)).blocking);
      CHECK(verify_link(f.with(t)).blocking);
    } else if (f.contains(t)) {
      CHECK_FALSE(verify_enumerate(f.without(t)).blocking);
      CHECK_FALSE(verify_link(f.without(t)).blocking);
    }
  }
}

TEST_CASE("witnesses do not depend on the worker count") {
  std::mt19937_64 rng(3);
  VerifyOptions parallel;
  parallel.threads = 4;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 9 + trial % 6;  // spans several 4096-subset chunks
    const auto f = random_family(rng, n, 0.25);
    const auto serial = verify_link(f);
    const auto par = verify_link(f, parallel);
    REQUIRE(serial.blocking == par.blocking);
    REQUIRE(serial.examined == par.examined);
    if (!serial.blocking) {
      const auto& s = std::get<DisconnectedLink>(serial.witness);
      const auto& p = std::get<DisconnectedLink>(par.witness);
      CHECK(s.removed == p.removed);
      CHECK(s.first == p.first);
      CHECK(s.second == p.second);
    }
  }
  const auto big = construct3(14).family;
  const auto s = verify_link(big);
  const auto p = verify_link(big, parallel);
  CHECK(s.blocking);
  CHECK(s.examined == p.examined);
  // Every X with 1 <= |X| <= n-2: all subsets minus the empty set, the full set and the n co-singletons.
  CHECK(s.examined == (1u << 14) - 2 - 14);
}
