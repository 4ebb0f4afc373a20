#include "blockset/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace blockset {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::ArityViolation: return "ArityViolation";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

// ---------------------------------------------------------------------------
// EdgeTuple

EdgeTuple EdgeTuple::canonical(std::span<const VertexId> vertices, std::size_t n) {
  std::vector<VertexId> v(vertices.begin(), vertices.end());
  for (VertexId x : v) {
    if (x >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "vertex " + std::to_string(x) + " not in [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorCode::DuplicateVertex, "tuple repeats a vertex");
  }
  return EdgeTuple(std::move(v));
}

EdgeTuple EdgeTuple::from_sorted(std::vector<VertexId> vertices) {
  return EdgeTuple(std::move(vertices));
}

bool EdgeTuple::contains(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::uint64_t EdgeTuple::mask() const noexcept {
  std::uint64_t m = 0;
  for (VertexId v : vertices_) m |= std::uint64_t{1} << v;
  return m;
}

std::string to_string(const EdgeTuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

EdgeTuple canonicalize_tuple(std::span<const VertexId> vertices, std::size_t n) {
  return EdgeTuple::canonical(vertices, n);
}

// ---------------------------------------------------------------------------
// Family

Family::Family(std::size_t n, std::size_t d, std::vector<EdgeTuple> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
  validate_and_normalize();
}

void Family::validate_and_normalize() {
  for (const auto& e : edges_) {
    if (e.size() != d_) {
      throw Error(ErrorCode::InvalidArity, "edge " + to_string(e) + " is not a " +
                                               std::to_string(d_) + "-tuple");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n_) {
        throw Error(ErrorCode::OutOfRange, "edge " + to_string(e) + " exceeds n=" +
                                               std::to_string(n_));
      }
      if (i > 0 && e[i - 1] >= e[i]) {
        throw Error(ErrorCode::DuplicateVertex, "edge " + to_string(e) + " is not strictly increasing");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Family::contains(const EdgeTuple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

Family Family::with(const EdgeTuple& t) const {
  auto edges = edges_;
  auto it = std::lower_bound(edges.begin(), edges.end(), t);
  if (it == edges.end() || *it != t) edges.insert(it, t);
  return Family(n_, d_, std::move(edges));
}

Family Family::without(const EdgeTuple& t) const {
  auto edges = edges_;
  auto it = std::lower_bound(edges.begin(), edges.end(), t);
  if (it != edges.end() && *it == t) edges.erase(it);
  Family out(n_, d_);
  out.edges_ = std::move(edges);
  return out;
}

// ---------------------------------------------------------------------------
// PartitionLabeling

PartitionLabeling PartitionLabeling::from_labels(std::span<const std::size_t> labels,
                                                 std::size_t d) {
  if (d == 0 || d > kMaxParts) {
    throw Error(ErrorCode::InvalidArity, "part count must be in [1, 64]");
  }
  std::vector<std::size_t> relabel;  // relabel[k] = original label of canonical label k
  PartitionLabeling p;
  p.d_ = d;
  p.labels_.reserve(labels.size());
  for (std::size_t l : labels) {
    auto it = std::find(relabel.begin(), relabel.end(), l);
    if (it == relabel.end()) {
      relabel.push_back(l);
      it = relabel.end() - 1;
    }
    p.labels_.push_back(static_cast<Label>(it - relabel.begin()));
    if (relabel.size() > d) break;
  }
  if (relabel.size() != d) {
    throw Error(ErrorCode::InvalidArity, "labeling uses " + std::to_string(relabel.size()) +
                                             " parts, expected " + std::to_string(d));
  }
  return p;
}

PartitionLabeling PartitionLabeling::from_parts(const std::vector<std::vector<VertexId>>& parts,
                                                std::size_t n) {
  std::vector<std::size_t> labels(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorCode::InvalidArity, "empty part");
    for (VertexId v : parts[i]) {
      if (v >= n) throw Error(ErrorCode::OutOfRange, "part vertex out of range");
      if (labels[v] != std::numeric_limits<std::size_t>::max()) {
        throw Error(ErrorCode::DuplicateVertex, "vertex in two parts");
      }
      labels[v] = i;
    }
  }
  for (auto l : labels) {
    if (l == std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorCode::OutOfRange, "parts do not cover every vertex");
    }
  }
  return from_labels(labels, parts.size());
}

std::vector<std::vector<VertexId>> PartitionLabeling::parts() const {
  std::vector<std::vector<VertexId>> out(d_);
  for (std::size_t v = 0; v < labels_.size(); ++v) out[labels_[v]].push_back(static_cast<VertexId>(v));
  return out;
}

std::string to_string(const PartitionLabeling& p) {
  std::ostringstream os;
  for (auto l : p.labels()) os << static_cast<int>(l);
  return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) {
    throw Error(ErrorCode::InvalidArity,
                "need 1 <= d <= n, got d=" + std::to_string(d) + ", n=" + std::to_string(n));
  }
  if (d > PartitionLabeling::kMaxParts) {
    throw Error(ErrorCode::InvalidArity, "at most 64 parts supported");
  }
  current_.d_ = d;
  current_.labels_.assign(n, 0);
  prefix_max_.assign(n, 0);
  // Smallest string: n-d+1 zeros followed by 1, 2, ..., d-1.
  for (std::size_t j = 1; j < d; ++j) current_.labels_[n - d + j] = static_cast<PartitionLabeling::Label>(j);
  for (std::size_t i = 1; i < n; ++i) {
    prefix_max_[i] = std::max(prefix_max_[i - 1], current_.labels_[i]);
  }
}

void PartitionEnumerator::advance() {
  if (done_) return;
  auto& a = current_.labels_;
  const std::size_t n = a.size();
  const std::size_t d = current_.d_;
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t before = prefix_max_[i - 1];
    const std::size_t next = static_cast<std::size_t>(a[i]) + 1;
    if (next > before + 1 || next >= d) continue;
    const std::size_t top = std::max(before, next);
    const std::size_t remaining = n - 1 - i;
    if (remaining + top < d - 1) continue;
    a[i] = static_cast<PartitionLabeling::Label>(next);
    prefix_max_[i] = static_cast<PartitionLabeling::Label>(top);
    const std::size_t fresh = d - 1 - top;
    const std::size_t zeros = remaining - fresh;
    std::size_t j = i + 1;
    for (std::size_t z = 0; z < zeros; ++z, ++j) {
      a[j] = 0;
      prefix_max_[j] = prefix_max_[j - 1];
    }
    for (std::size_t l = top + 1; l < d; ++l, ++j) {
      a[j] = static_cast<PartitionLabeling::Label>(l);
      prefix_max_[j] = a[j];
    }
    return;
  }
  done_ = true;
}

PartitionEnumerator enumerate_partitions(std::size_t n, std::size_t d) {
  return PartitionEnumerator(n, d);
}

std::uint64_t for_each_partition(std::size_t n, std::size_t d,
                                 const std::function<bool(const PartitionLabeling&)>& visit) {
  std::uint64_t count = 0;
  for (auto e = enumerate_partitions(n, d); !e.done(); e.advance()) {
    ++count;
    if (!visit(e.current())) break;
  }
  return count;
}

std::uint64_t stirling2(std::size_t n, std::size_t d) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (d > n) return 0;
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, d); j >= 1; --j) {
      std::uint64_t scaled;
      std::uint64_t sum;
      if (__builtin_mul_overflow(row[j], j, &scaled) ||
          __builtin_add_overflow(scaled, row[j - 1], &sum)) {
        sum = kMax;
      }
      row[j] = sum;
    }
    row[0] = 0;
  }
  return row[d];
}

// ---------------------------------------------------------------------------
// Predicates

bool blocks_partition(const EdgeTuple& t, const PartitionLabeling& p) noexcept {
  std::uint64_t seen = 0;
  for (VertexId v : t) {
    const std::uint64_t bit = std::uint64_t{1} << p.label(v);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::optional<EdgeTuple> family_blocks(const Family& f, const PartitionLabeling& p) {
  if (f.n() != p.n() || f.d() != p.d()) {
    throw Error(ErrorCode::InvalidArity, "family and partition disagree on (n, d)");
  }
  for (const auto& e : f) {
    if (blocks_partition(e, p)) return e;
  }
  return std::nullopt;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t num = (n - k + i) / (i / g);
    std::uint64_t next;
    if (__builtin_mul_overflow(r / g, num, &next)) {
      throw Error(ErrorCode::OutOfDomain,
                  "C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
    }
    r = next;
  }
  return r;
}

std::vector<EdgeTuple> all_tuples(std::size_t n, std::size_t k) {
  std::vector<EdgeTuple> out;
  if (k > n) return out;
  std::vector<VertexId> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<VertexId>(i);
  while (true) {
    out.push_back(EdgeTuple::from_sorted(c));
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace blockset
