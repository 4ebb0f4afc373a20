#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blockset/core.hpp"

namespace blockset {

/// G_E(X) for a triple family: vertices V \ X, and {y, z} is an edge when
/// {x, y, z} is in E for some x in X.
struct LinkGraph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;  // sorted, y < z

  std::vector<std::vector<VertexId>> components() const;
  /// Graphs with at most one vertex count as connected.
  bool connected() const { return components().size() <= 1; }
};

/// Link of X: vertices V \ X, hyperedges tau with X u tau in E.
struct LinkHypergraph {
  std::size_t uniformity = 0;
  std::vector<VertexId> vertices;
  std::vector<EdgeTuple> hyperedges;
};

/// X may contain ids outside [0, n); those are ignored. Throws WrongArity if d != 3.
LinkGraph link_graph(const Family& f, std::span<const VertexId> x);

/// Throws ArityViolation if |X| > d - 2.
LinkHypergraph link_hypergraph(const Family& f, std::span<const VertexId> x);

enum class Method { Link, Enumerate };

const char* to_string(Method m) noexcept;

struct UnblockedPartition {
  PartitionLabeling partition;
};

struct DisconnectedLink {
  std::vector<VertexId> removed;  // X
  std::vector<VertexId> first;    // component holding the smallest vertex of V \ X
  std::vector<VertexId> second;   // every other vertex of V \ X

  PartitionLabeling to_partition(std::size_t n) const;
};

using Witness = std::variant<std::monostate, UnblockedPartition, DisconnectedLink>;

struct VerificationReport {
  bool blocking = false;
  Method method = Method::Enumerate;
  Witness witness;
  std::uint64_t examined = 0;  // subsets or partitions checked
};

struct VerifyOptions {
  std::size_t max_link_n = 22;
  unsigned threads = 1;
};

/// Decides blocking for d = 3 by checking that G_E(X) is connected for every
/// X with 1 <= |X| <= n - 2. Subsets are visited as n-bit integers in
/// increasing order; the witness is the numerically smallest failing X.
/// Throws WrongArity if d != 3 and TooLarge if n exceeds options.max_link_n.
VerificationReport verify_link(const Family& f, const VerifyOptions& options = {});

/// Checks every d-partition in canonical order. Throws InvalidArity if d > n.
VerificationReport verify_enumerate(const Family& f);

/// True iff the witness re-checks as unblocked under the core predicates.
bool witness_is_sound(const Family& f, const VerificationReport& report);

}  // namespace blockset
