#include "blockset/bounds.hpp"
#include "blockset/search.hpp"
#include "blockset/verify.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

// Independent oracle: try every family of a given size in lexicographic order.
bool exists_blocking_of_size(std::size_t n, std::size_t d, std::size_t size) {
  const auto tuples = all_tuples(n, d);
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::vector<EdgeTuple> edges;
    for (auto i : pick) edges.push_back(tuples[i]);
    if (verify_enumerate(Family(n, d, edges)).blocking) return true;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == tuples.size() - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void check_optimum(std::size_t n, std::size_t d, std::uint64_t expected) {
  CAPTURE(n);
  CAPTURE(d);
  const auto r = min_blocking(n, d);
  CHECK(r.proved_optimal);
  CHECK_FALSE(r.budget_exceeded);
  CHECK(r.optimum == expected);
  CHECK(r.witness_family.size() == expected);
  CHECK(verify_enumerate(r.witness_family).blocking);
}

}  // namespace

TEST_CASE("search finds known optima") {
  check_optimum(4, 3, 3);
  check_optimum(5, 3, 5);
  check_optimum(6, 3, 8);
  check_optimum(5, 4, 4);
  for (std::size_t d = 1; d <= 6; ++d) check_optimum(d, d, 1);
}

TEST_CASE("pairs need a spanning tree") {
  for (std::size_t n = 2; n <= 8; ++n) check_optimum(n, 2, n - 1);
}

TEST_CASE("brute force agrees on the smallest cases") {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 3}, {5, 3}, {5, 4}, {5, 2}}) {
    CAPTURE(n);
    CAPTURE(d);
    const auto opt = min_blocking(n, d).optimum;
    CHECK(exists_blocking_of_size(n, d, opt));
    CHECK_FALSE(exists_blocking_of_size(n, d, opt - 1));
  }
}

TEST_CASE("search starts at the lower bound and stays below greedy") {
  const auto r = min_blocking(6, 3);
  CHECK(r.start_size == lower_bound_ceil(3, 6));
  const auto g = greedy_upper(6, 3);
  CHECK(verify_enumerate(g).blocking);
  CHECK(r.optimum <= g.size());
  const auto g54 = greedy_upper(5, 4);
  CHECK(verify_enumerate(g54).blocking);
}

TEST_CASE("probe_size finds nothing below the optimum") {
  const auto below = probe_size(6, 3, 7);
  CHECK_FALSE(below.found);
  CHECK(below.exhausted);
  const auto at = probe_size(6, 3, 8);
  CHECK(at.found);
  REQUIRE(at.family);
  CHECK(verify_enumerate(*at.family).blocking);
}

TEST_CASE("plain covering search without the degree prune agrees") {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 3}, {5, 3}, {5, 4}}) {
    CAPTURE(n);
    CAPTURE(d);
    const auto pruned = min_blocking(n, d);
    SearchOptions plain;
    plain.degree_prune = false;
    const auto unpruned = min_blocking(n, d, plain);
    CHECK(unpruned.proved_optimal);
    CHECK(unpruned.optimum == pruned.optimum);
    CHECK(unpruned.nodes_expanded >= pruned.nodes_expanded);
  }
}

TEST_CASE("node budget is reported, not hidden") {
  SearchOptions tight;
  tight.max_nodes = 5;
  const auto r = min_blocking(7, 4, tight);
  CHECK(r.budget_exceeded);
  CHECK_FALSE(r.proved_optimal);
  CHECK(verify_enumerate(r.witness_family).blocking);
  CHECK(r.optimum == r.witness_family.size());
}

TEST_CASE("size caps and arity") {
  try {
    min_blocking(12, 4);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(min_blocking(3, 4), Error);
}
