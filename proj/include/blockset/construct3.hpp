#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockset/core.hpp"

namespace blockset {

/// Vertex numbering for the three-block construction on n vertices:
/// u_i = i, v_i = k + i, w_i = 2k + i, then the one or two extra points.
struct Layout3 {
  std::size_t n = 0;
  std::size_t k = 0;

  explicit Layout3(std::size_t n_vertices);

  std::size_t residue() const noexcept { return n % 3; }
  VertexId u(std::size_t i) const noexcept { return static_cast<VertexId>(i % k); }
  VertexId v(std::size_t i) const noexcept { return static_cast<VertexId>(k + i % k); }
  VertexId w(std::size_t i) const noexcept { return static_cast<VertexId>(2 * k + i % k); }
  /// Block j in {0, 1, 2}, element i (mod k).
  VertexId block(std::size_t j, std::size_t i) const noexcept {
    return static_cast<VertexId>(j * k + i % k);
  }
  std::vector<VertexId> block_ids(std::size_t j) const;
  /// The single extra point when n = 1 (mod 3), or the first of two.
  VertexId infinity1() const noexcept { return static_cast<VertexId>(3 * k); }
  VertexId infinity2() const noexcept { return static_cast<VertexId>(3 * k + 1); }
};

enum class EdgeColor { Red, Blue };

const char* to_string(EdgeColor c) noexcept;

struct ColoredFamily {
  Family family;
  std::vector<EdgeColor> colors;  // aligned with family.edges()

  std::size_t count(EdgeColor c) const;
};

/// Gadget triples {a_i, a_j, b_(i+j)} and {a_i, a_j, b_(i+j+1)} for i < j,
/// indices mod k. Sorted, without duplicates.
std::vector<EdgeTuple> h_pair(std::span<const VertexId> a_ids, std::span<const VertexId> b_ids);

/// Minimum 3-blocking set on n >= 3 vertices. Throws TooSmall below 3.
ColoredFamily construct3(std::size_t n);

/// Diagnostics for the link graph of the gadget on A and B after removing X.
/// Each clause is empty when its hypothesis does not apply to X.
struct StructureReport {
  std::size_t component_count = 0;
  std::vector<std::vector<VertexId>> components;

  // A and X disjoint, B meets X.
  std::optional<bool> a_induced_connected;
  std::optional<bool> no_ab_edges;
  // B inside X.
  std::optional<bool> complete_on_a_minus_x;
  // A meets X, A not inside X, B not inside X.
  std::optional<bool> at_most_two_components;
  std::optional<bool> connected_when_b_untouched;
  // Two-component case only.
  std::optional<bool> segments_split_initial_terminal;
  std::optional<bool> both_components_meet_b;
  std::optional<bool> terminal_b_after_removed;

  bool all_hold() const;
};

StructureReport structure_report(std::span<const VertexId> a_ids, std::span<const VertexId> b_ids,
                                 std::span<const VertexId> x);

}  // namespace blockset
