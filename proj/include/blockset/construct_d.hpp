#pragma once

#include <cstdint>
#include <vector>

#include "blockset/core.hpp"

namespace blockset {

enum class StepKind { Base, EvenSplit, OddPeel };
enum class BaseRule { Empty, Singleton, Star, Construct3, SingleTuple };

const char* to_string(StepKind k) noexcept;
const char* to_string(BaseRule r) noexcept;

/// Rule tree recorded by construct_d.
///
/// EvenSplit: `pivot` is k; children[i] built T_i = construct_d(d - i, k) on
/// [0, k), placed at offset k. OddPeel: `pivot` is the peeled vertex x = n-1;
/// children[0] is the (d-1)-family on [0, n-1) that gets x appended and
/// children[1] is the d-family on [0, n-1).
struct ConstructionTrace {
  StepKind kind = StepKind::Base;
  std::size_t d = 0;
  std::size_t n = 0;
  BaseRule base = BaseRule::Empty;
  std::size_t pivot = 0;
  std::vector<ConstructionTrace> children;

  std::size_t depth() const;
};

struct Construction {
  Family family;
  ConstructionTrace trace;
};

/// Recursive d-blocking set on [0, n). Rule order: n < d, d in {1, 2, 3},
/// n == d, then even split or odd peel.
Construction construct_d(std::size_t d, std::size_t n);

/// Rebuilds the family a trace describes, from the rule tree alone.
Family replay(const ConstructionTrace& trace);

/// Edge count construct_d produces, from the same recursion on sizes.
std::uint64_t predicted_size(std::size_t d, std::size_t n);

}  // namespace blockset
