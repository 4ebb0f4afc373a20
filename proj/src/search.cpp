#include "blockset/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "blockset/bounds.hpp"
#include "blockset/verify.hpp"

namespace blockset {

namespace {

/// All d-tuples and d-partitions of [0, n) with their incidence.
struct Universe {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<EdgeTuple> tuples;
  std::vector<std::vector<std::uint32_t>> rainbow;  // partition -> tuples blocking it
  std::vector<std::vector<std::uint32_t>> blocked;  // tuple -> partitions it blocks
  std::vector<std::vector<std::uint32_t>> faces;    // tuple -> (d-2)-subsets it contains
  std::size_t face_count = 0;

  Universe(std::size_t n_, std::size_t d_) : n(n_), d(d_) {
    tuples = all_tuples(n, d);
    blocked.resize(tuples.size());
    for (auto e = enumerate_partitions(n, d); !e.done(); e.advance()) {
      const auto p = static_cast<std::uint32_t>(rainbow.size());
      rainbow.emplace_back();
      for (std::uint32_t t = 0; t < tuples.size(); ++t) {
        if (blocks_partition(tuples[t], e.current())) {
          rainbow.back().push_back(t);
          blocked[t].push_back(p);
        }
      }
    }
    if (d >= 2) {
      const auto all_faces = all_tuples(n, d - 2);
      face_count = all_faces.size();
      faces.resize(tuples.size());
      for (std::uint32_t t = 0; t < tuples.size(); ++t) {
        const auto& tup = tuples[t];
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<VertexId> face;
            for (std::size_t m = 0; m < d; ++m) {
              if (m != i && m != j) face.push_back(tup[m]);
            }
            const auto key = EdgeTuple::from_sorted(std::move(face));
            const auto it = std::lower_bound(all_faces.begin(), all_faces.end(), key);
            faces[t].push_back(static_cast<std::uint32_t>(it - all_faces.begin()));
          }
        }
      }
    }
  }

  Family family_of(const std::vector<std::uint32_t>& ids) const {
    std::vector<EdgeTuple> edges;
    for (auto t : ids) edges.push_back(tuples[t]);
    return Family(n, d, std::move(edges));
  }
};

void check_caps(std::size_t n, std::size_t d, const SearchOptions& options) {
  if (d < 1 || d > n) throw Error(ErrorCode::InvalidArity, "search needs 1 <= d <= n");
  const std::uint64_t tuples = binomial(n, d);
  const std::uint64_t parts = stirling2(n, d);
  if (tuples > options.max_tuples || parts > options.max_partitions) {
    throw Error(ErrorCode::TooLarge, "C(n,d) = " + std::to_string(tuples) + ", S(n,d) = " +
                                         std::to_string(parts) + " exceed the search caps");
  }
}

struct BudgetExhausted {};

/// Depth-first covering search for a fixed target size.
class Prover {
 public:
  Prover(const Universe& u, const SearchOptions& options, std::uint64_t node_allowance)
      : u_(u),
        options_(options),
        allowance_(node_allowance),
        cover_(u.rainbow.size(), 0),
        forbidden_(u.tuples.size(), false),
        chosen_deg_(u.face_count, 0),
        avail_deg_(u.face_count, 0) {
    if (u.d >= 2) {
      need_ = u.n - u.d + 1;
      per_tuple_ = u.d * (u.d - 1) / 2;
      for (const auto& fs : u.faces) {
        for (auto c : fs) ++avail_deg_[c];
      }
      deficit_ = need_ * u.face_count;
      for (std::size_t c = 0; c < u.face_count; ++c) {
        if (avail_deg_[c] < need_) ++infeasible_;
      }
    }
  }

  /// Throws BudgetExhausted when the node allowance runs out.
  bool run(std::uint64_t size) {
    size_ = size;
    return dfs(0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::uint32_t>& chosen() const noexcept { return chosen_; }

 private:
  bool dfs(std::size_t frontier) {
    if (++nodes_ > allowance_) throw BudgetExhausted{};
    while (frontier < cover_.size() && cover_[frontier] > 0) ++frontier;
    if (frontier == cover_.size()) return true;
    if (chosen_.size() >= size_) return false;
    if (options_.degree_prune && u_.d >= 2) {
      if (infeasible_ > 0) return false;
      const std::size_t more = (deficit_ + per_tuple_ - 1) / per_tuple_;
      if (chosen_.size() + more > size_) return false;
    }
    std::vector<std::uint32_t> banned;
    bool found = false;
    for (auto t : u_.rainbow[frontier]) {
      if (forbidden_[t]) continue;
      choose(t);
      if (dfs(frontier + 1)) {
        found = true;
        break;
      }
      unchoose(t);
      forbid(t);
      banned.push_back(t);
    }
    for (auto it = banned.rbegin(); it != banned.rend(); ++it) unforbid(*it);
    return found;
  }

  void choose(std::uint32_t t) {
    chosen_.push_back(t);
    for (auto p : u_.blocked[t]) ++cover_[p];
    if (u_.d >= 2) {
      for (auto c : u_.faces[t]) {
        if (chosen_deg_[c] < need_) --deficit_;
        ++chosen_deg_[c];
        --avail_deg_[c];
      }
    }
  }

  void unchoose(std::uint32_t t) {
    chosen_.pop_back();
    for (auto p : u_.blocked[t]) --cover_[p];
    if (u_.d >= 2) {
      for (auto c : u_.faces[t]) {
        --chosen_deg_[c];
        ++avail_deg_[c];
        if (chosen_deg_[c] < need_) ++deficit_;
      }
    }
  }

  void forbid(std::uint32_t t) {
    forbidden_[t] = true;
    if (u_.d >= 2) {
      for (auto c : u_.faces[t]) {
        if (chosen_deg_[c] + avail_deg_[c] == need_) ++infeasible_;
        --avail_deg_[c];
      }
    }
  }

  void unforbid(std::uint32_t t) {
    forbidden_[t] = false;
    if (u_.d >= 2) {
      for (auto c : u_.faces[t]) {
        ++avail_deg_[c];
        if (chosen_deg_[c] + avail_deg_[c] == need_) --infeasible_;
      }
    }
  }

  const Universe& u_;
  const SearchOptions& options_;
  std::uint64_t allowance_;
  std::uint64_t size_ = 0;
  std::uint64_t nodes_ = 0;

  std::vector<std::uint32_t> cover_;
  std::vector<bool> forbidden_;
  std::vector<std::uint32_t> chosen_;

  std::size_t need_ = 0;
  std::size_t per_tuple_ = 1;
  std::vector<std::size_t> chosen_deg_;
  std::vector<std::size_t> avail_deg_;
  std::size_t deficit_ = 0;
  std::size_t infeasible_ = 0;
};

SizeProbe probe(const Universe& u, std::uint64_t size, const SearchOptions& options,
                std::uint64_t allowance) {
  SizeProbe out;
  Prover prover(u, options, allowance);
  try {
    out.found = prover.run(size);
    out.exhausted = true;
  } catch (const BudgetExhausted&) {
    out.exhausted = false;
  }
  out.nodes_expanded = std::min(prover.nodes(), allowance);
  if (out.found) out.family = u.family_of(prover.chosen());
  return out;
}

Family greedy_on(const Universe& u) {
  std::vector<bool> covered(u.rainbow.size(), false);
  std::size_t remaining = u.rainbow.size();
  std::vector<std::uint32_t> picked;
  while (remaining > 0) {
    std::uint32_t best = 0;
    std::size_t best_gain = 0;
    for (std::uint32_t t = 0; t < u.tuples.size(); ++t) {
      std::size_t gain = 0;
      for (auto p : u.blocked[t]) gain += !covered[p];
      if (gain > best_gain) {
        best_gain = gain;
        best = t;
      }
    }
    picked.push_back(best);
    for (auto p : u.blocked[best]) {
      if (!covered[p]) {
        covered[p] = true;
        --remaining;
      }
    }
  }
  return u.family_of(picked);
}

void require_blocking(const Family& f) {
  if (!verify_enumerate(f).blocking) throw std::logic_error("search produced a non-blocking family");
}

}  // namespace

Family greedy_upper(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw Error(ErrorCode::InvalidArity, "greedy needs 1 <= d <= n");
  const Universe u(n, d);
  auto f = greedy_on(u);
  require_blocking(f);
  return f;
}

SizeProbe probe_size(std::size_t n, std::size_t d, std::uint64_t size, const SearchOptions& options) {
  check_caps(n, d, options);
  const Universe u(n, d);
  auto out = probe(u, size, options, options.max_nodes.value_or(UINT64_MAX));
  if (out.family) require_blocking(*out.family);
  return out;
}

SearchResult min_blocking(std::size_t n, std::size_t d, const SearchOptions& options) {
  check_caps(n, d, options);
  const Universe u(n, d);
  const Family incumbent = greedy_on(u);
  require_blocking(incumbent);

  SearchResult result;
  result.start_size = d >= 3 ? lower_bound_ceil(d, n) : 1;
  const std::uint64_t budget = options.max_nodes.value_or(UINT64_MAX);
  for (std::uint64_t s = result.start_size; s < incumbent.size(); ++s) {
    const auto p = probe(u, s, options, budget - result.nodes_expanded);
    result.nodes_expanded += p.nodes_expanded;
    if (p.found) {
      require_blocking(*p.family);
      result.optimum = p.family->size();
      result.witness_family = *p.family;
      result.proved_optimal = true;
      return result;
    }
    if (!p.exhausted) {
      result.budget_exceeded = true;
      result.optimum = incumbent.size();
      result.witness_family = incumbent;
      return result;
    }
  }
  result.optimum = incumbent.size();
  result.witness_family = incumbent;
  result.proved_optimal = true;
  return result;
}

}  // namespace blockset
