#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockset {

/// Vertices are dense ids 0..n-1.
using VertexId = std::uint32_t;

enum class ErrorCode {
  DuplicateVertex,
  OutOfRange,
  InvalidArity,
  OverlappingSets,
  TooSmall,
  WrongArity,
  ArityViolation,
  OutOfDomain,
  TooLarge,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A strictly increasing d-subset of vertex ids.
class EdgeTuple {
 public:
  EdgeTuple() = default;

  /// Sorts `vertices`; throws DuplicateVertex or OutOfRange.
  static EdgeTuple canonical(std::span<const VertexId> vertices, std::size_t n);
  static EdgeTuple canonical(std::initializer_list<VertexId> vertices, std::size_t n) {
    return canonical(std::span<const VertexId>(vertices.begin(), vertices.size()), n);
  }

  /// Caller guarantees strictly increasing input.
  static EdgeTuple from_sorted(std::vector<VertexId> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  bool contains(VertexId v) const noexcept;

  /// Bit i set iff vertex i is in the tuple; requires every id < 64.
  std::uint64_t mask() const noexcept;

  friend auto operator<=>(const EdgeTuple&, const EdgeTuple&) = default;
  friend bool operator==(const EdgeTuple&, const EdgeTuple&) = default;

 private:
  explicit EdgeTuple(std::vector<VertexId> v) : vertices_(std::move(v)) {}
  std::vector<VertexId> vertices_;
};

std::string to_string(const EdgeTuple& t);

EdgeTuple canonicalize_tuple(std::span<const VertexId> vertices, std::size_t n);

/// A deduplicated, lexicographically sorted set of d-tuples on [0, n).
class Family {
 public:
  Family(std::size_t n, std::size_t d) : n_(n), d_(d) {}
  Family(std::size_t n, std::size_t d, std::vector<EdgeTuple> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<EdgeTuple>& edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  bool contains(const EdgeTuple& t) const;

  /// Copy with `t` inserted (or removed); set semantics.
  Family with(const EdgeTuple& t) const;
  Family without(const EdgeTuple& t) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  void validate_and_normalize();

  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<EdgeTuple> edges_;
};

/// Set partition of [0, n) into exactly d nonempty parts, stored as a
/// restricted-growth string: labels[0] == 0 and each label is at most one
/// more than the maximum label before it.
class PartitionLabeling {
 public:
  using Label = std::uint8_t;
  static constexpr std::size_t kMaxParts = 64;

  PartitionLabeling() = default;

  /// Accepts any labeling using exactly `d` distinct values and relabels it
  /// into restricted-growth form. Throws InvalidArity otherwise.
  static PartitionLabeling from_labels(std::span<const std::size_t> labels, std::size_t d);
  static PartitionLabeling from_labels(std::initializer_list<std::size_t> labels, std::size_t d) {
    return from_labels(std::span<const std::size_t>(labels.begin(), labels.size()), d);
  }
  /// Partition whose parts are the given vertex sets; every vertex of
  /// [0, n) must appear exactly once.
  static PartitionLabeling from_parts(const std::vector<std::vector<VertexId>>& parts,
                                      std::size_t n);

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t d() const noexcept { return d_; }
  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::vector<std::vector<VertexId>> parts() const;

  friend bool operator==(const PartitionLabeling&, const PartitionLabeling&) = default;

 private:
  friend class PartitionEnumerator;
  std::vector<Label> labels_;
  std::size_t d_ = 0;
};

std::string to_string(const PartitionLabeling& p);

/// Single-pass stream of all d-partitions of [0, n) in lexicographic order
/// of their restricted-growth strings.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t d);

  bool done() const noexcept { return done_; }
  const PartitionLabeling& current() const noexcept { return current_; }
  void advance();

 private:
  PartitionLabeling current_;
  std::vector<PartitionLabeling::Label> prefix_max_;
  bool done_ = false;
};

/// Throws InvalidArity unless 1 <= d <= n.
PartitionEnumerator enumerate_partitions(std::size_t n, std::size_t d);

/// Calls `visit` on every partition until it returns false. Returns the
/// number of partitions visited.
std::uint64_t for_each_partition(std::size_t n, std::size_t d,
                                 const std::function<bool(const PartitionLabeling&)>& visit);

/// Stirling partition number S(n, d); saturates at UINT64_MAX.
std::uint64_t stirling2(std::size_t n, std::size_t d);

/// True iff the tuple's vertices carry pairwise distinct labels.
bool blocks_partition(const EdgeTuple& t, const PartitionLabeling& p) noexcept;

/// Lexicographically smallest tuple of `f` that is rainbow for `p`.
std::optional<EdgeTuple> family_blocks(const Family& f, const PartitionLabeling& p);

/// Binomial coefficient with overflow check (throws OutOfDomain).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All k-subsets of [0, n) in lexicographic order.
std::vector<EdgeTuple> all_tuples(std::size_t n, std::size_t k);

}  // namespace blockset
