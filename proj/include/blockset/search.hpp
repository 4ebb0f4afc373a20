#pragma once

#include <cstdint>
#include <optional>

#include "blockset/core.hpp"

namespace blockset {

struct SearchOptions {
  std::optional<std::uint64_t> max_nodes;  // cumulative over all target sizes
  std::uint64_t max_tuples = 120;          // cap on C(n, d)
  std::uint64_t max_partitions = 5000;     // cap on S(n, d)
  /// Prune with the per-(d-2)-subset degree requirement. Disable only to
  /// audit the plain covering search.
  bool degree_prune = true;
};

struct SearchResult {
  std::uint64_t optimum = 0;  // best known size when !proved_optimal
  Family witness_family{0, 0};
  std::uint64_t nodes_expanded = 0;
  bool proved_optimal = false;
  bool budget_exceeded = false;
  std::uint64_t start_size = 0;  // first target size tried
};

/// Outcome of asking whether a blocking family of exactly `size` tuples
/// (or fewer) exists.
struct SizeProbe {
  bool found = false;
  bool exhausted = false;  // search space fully explored within budget
  std::optional<Family> family;
  std::uint64_t nodes_expanded = 0;
};

/// Exact minimum blocking set by iterative deepening from the degree-count
/// lower bound. Throws InvalidArity if d > n and TooLarge past the caps.
SearchResult min_blocking(std::size_t n, std::size_t d, const SearchOptions& options = {});

SizeProbe probe_size(std::size_t n, std::size_t d, std::uint64_t size, const SearchOptions& options = {});

/// Greedy cover: repeatedly take the tuple blocking the most unblocked
/// partitions, ties to the lexicographically smaller tuple.
Family greedy_upper(std::size_t n, std::size_t d);

}  // namespace blockset
