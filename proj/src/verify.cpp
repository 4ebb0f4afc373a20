#include "blockset/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "blockset/union_find.hpp"

namespace blockset {

const char* to_string(Method m) noexcept { return m == Method::Link ? "link" : "enumerate"; }

std::vector<std::vector<VertexId>> LinkGraph::components() const {
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  DisjointSets sets(vertices.size());
  for (auto [y, z] : edges) sets.unite(index.at(y), index.at(z));
  std::map<std::size_t, std::vector<VertexId>> grouped;
  for (std::size_t i = 0; i < vertices.size(); ++i) grouped[sets.find(i)].push_back(vertices[i]);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<bool> membership(std::size_t n, std::span<const VertexId> x) {
  std::vector<bool> in(n, false);
  for (auto v : x) {
    if (v < n) in[v] = true;
  }
  return in;
}

}  // namespace

LinkGraph link_graph(const Family& f, std::span<const VertexId> x) {
  if (f.d() != 3) throw Error(ErrorCode::WrongArity, "link graph is defined for triple families");
  const auto in_x = membership(f.n(), x);
  LinkGraph g;
  for (VertexId v = 0; v < f.n(); ++v) {
    if (!in_x[v]) g.vertices.push_back(v);
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : f) {
    std::vector<VertexId> rest;
    for (auto v : e) {
      if (!in_x[v]) rest.push_back(v);
    }
    if (rest.size() == 2) pairs.emplace(rest[0], rest[1]);
  }
  g.edges.assign(pairs.begin(), pairs.end());
  return g;
}

LinkHypergraph link_hypergraph(const Family& f, std::span<const VertexId> x) {
  std::set<VertexId> face;
  for (auto v : x) face.insert(v);
  if (face.size() + 2 > f.d()) {
    throw Error(ErrorCode::ArityViolation,
                "|X| = " + std::to_string(face.size()) + " exceeds d - 2 = " + std::to_string(f.d() - 2));
  }
  LinkHypergraph h;
  h.uniformity = f.d() - face.size();
  for (VertexId v = 0; v < f.n(); ++v) {
    if (!face.count(v)) h.vertices.push_back(v);
  }
  for (const auto& e : f) {
    if (!std::all_of(face.begin(), face.end(), [&](VertexId v) { return e.contains(v); })) continue;
    std::vector<VertexId> tau;
    for (auto v : e) {
      if (!face.count(v)) tau.push_back(v);
    }
    h.hyperedges.push_back(EdgeTuple::from_sorted(std::move(tau)));
  }
  return h;
}

PartitionLabeling DisconnectedLink::to_partition(std::size_t n) const {
  return PartitionLabeling::from_parts({removed, first, second}, n);
}

// ---------------------------------------------------------------------------
// Link method

namespace {

struct ChunkResult {
  std::uint64_t examined = 0;
  std::uint64_t failing_mask = 0;  // 0 = none
};

class LinkChecker {
 public:
  explicit LinkChecker(const Family& f) : n_(f.n()) {
    masks_.reserve(f.size());
    for (const auto& e : f) masks_.push_back(e.mask());
  }

  std::size_t n() const noexcept { return n_; }

  bool in_range(std::uint64_t x) const noexcept {
    const auto pop = static_cast<std::size_t>(std::popcount(x));
    return pop >= 1 && pop + 2 <= n_;
  }

  /// Scans [lo, hi) and stops at the first disconnected X.
  ChunkResult scan(std::uint64_t lo, std::uint64_t hi) const {
    ChunkResult r;
    for (std::uint64_t x = lo; x < hi; ++x) {
      if (!in_range(x)) continue;
      ++r.examined;
      if (!connected(x)) {
        r.failing_mask = x;
        return r;
      }
    }
    return r;
  }

  bool connected(std::uint64_t x) const {
    DisjointSets sets(n_);
    for (std::uint64_t m : masks_) {
      const std::uint64_t hit = m & x;
      if (hit == 0 || (hit & (hit - 1)) != 0) continue;  // need exactly one vertex in X
      const std::uint64_t pair = m & ~x;
      const int y = std::countr_zero(pair);
      const int z = std::countr_zero(pair & (pair - 1));
      sets.unite(static_cast<std::size_t>(y), static_cast<std::size_t>(z));
    }
    std::size_t root = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < n_; ++v) {
      if (x >> v & 1) continue;
      const std::size_t r = sets.find(v);
      if (root == std::numeric_limits<std::size_t>::max()) root = r;
      else if (r != root) return false;
    }
    return true;
  }

  DisconnectedLink explain(std::uint64_t x, const Family& f) const {
    DisconnectedLink w;
    for (VertexId v = 0; v < n_; ++v) {
      if (x >> v & 1) w.removed.push_back(v);
    }
    const auto comps = link_graph(f, w.removed).components();
    // Components are sorted, so comps[0] holds the smallest surviving vertex.
    w.first = comps.at(0);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      w.second.insert(w.second.end(), comps[c].begin(), comps[c].end());
    }
    std::sort(w.second.begin(), w.second.end());
    return w;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

VerificationReport verify_link(const Family& f, const VerifyOptions& options) {
  if (f.d() != 3) throw Error(ErrorCode::WrongArity, "link method requires d = 3");
  if (f.n() < 3) throw Error(ErrorCode::InvalidArity, "link method requires n >= 3");
  if (f.n() > options.max_link_n || f.n() > 62) {
    throw Error(ErrorCode::TooLarge, "link method capped at n = " + std::to_string(options.max_link_n) +
                                         ", got n = " + std::to_string(f.n()));
  }
  const LinkChecker checker(f);
  const std::uint64_t end = std::uint64_t{1} << f.n();

  // Fixed chunking keeps the witness and the examined count independent of
  // how many workers run.
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunk_count = (end + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunk_count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_failure{chunk_count};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count || c > first_failure.load()) return;
      results[c] = checker.scan(c * kChunk, std::min(end, (c + 1) * kChunk));
      if (results[c].failing_mask != 0) {
        std::uint64_t seen = first_failure.load();
        while (c < seen && !first_failure.compare_exchange_weak(seen, c)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.method = Method::Link;
  const std::uint64_t fail = first_failure.load();
  const std::uint64_t last = std::min(fail, chunk_count - 1);
  for (std::uint64_t c = 0; c <= last; ++c) report.examined += results[c].examined;
  if (fail == chunk_count) {
    report.blocking = true;
  } else {
    report.blocking = false;
    report.witness = checker.explain(results[fail].failing_mask, f);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration method

VerificationReport verify_enumerate(const Family& f) {
  if (f.d() < 1 || f.d() > f.n()) {
    throw Error(ErrorCode::InvalidArity, "enumeration needs 1 <= d <= n");
  }
  VerificationReport report;
  report.method = Method::Enumerate;
  report.blocking = true;
  for (auto e = enumerate_partitions(f.n(), f.d()); !e.done(); e.advance()) {
    ++report.examined;
    const auto& p = e.current();
    const bool hit = std::any_of(f.begin(), f.end(), [&](const EdgeTuple& t) { return blocks_partition(t, p); });
    if (!hit) {
      report.blocking = false;
      report.witness = UnblockedPartition{p};
      break;
    }
  }
  return report;
}

bool witness_is_sound(const Family& f, const VerificationReport& report) {
  if (report.blocking) return std::holds_alternative<std::monostate>(report.witness);
  if (const auto* u = std::get_if<UnblockedPartition>(&report.witness)) {
    return !family_blocks(f, u->partition).has_value();
  }
  if (const auto* l = std::get_if<DisconnectedLink>(&report.witness)) {
    if (f.d() != 3 || l->removed.empty() || l->first.empty() || l->second.empty()) return false;
    return !family_blocks(f, l->to_partition(f.n())).has_value();
  }
  return false;
}

}  // namespace blockset
