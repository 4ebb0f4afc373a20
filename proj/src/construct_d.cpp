#include "blockset/construct_d.hpp"

#include <algorithm>
#include <map>

#include "blockset/bounds.hpp"
#include "blockset/construct3.hpp"

namespace blockset {

const char* to_string(StepKind k) noexcept {
  switch (k) {
    case StepKind::Base: return "base";
    case StepKind::EvenSplit: return "even_split";
    case StepKind::OddPeel: return "odd_peel";
  }
  return "?";
}

const char* to_string(BaseRule r) noexcept {
  switch (r) {
    case BaseRule::Empty: return "empty";
    case BaseRule::Singleton: return "singleton";
    case BaseRule::Star: return "star";
    case BaseRule::Construct3: return "construct3";
    case BaseRule::SingleTuple: return "single_tuple";
  }
  return "?";
}

std::size_t ConstructionTrace::depth() const {
  std::size_t deepest = 0;
  for (const auto& c : children) deepest = std::max(deepest, c.depth());
  return deepest + 1;
}

namespace {

using Key = std::pair<std::size_t, std::size_t>;

Family base_family(std::size_t d, std::size_t n, BaseRule rule) {
  std::vector<EdgeTuple> edges;
  switch (rule) {
    case BaseRule::Empty:
      break;
    case BaseRule::Singleton:
      edges.push_back(EdgeTuple::from_sorted({0}));
      break;
    case BaseRule::Star:
      for (VertexId i = 1; i < n; ++i) edges.push_back(EdgeTuple::from_sorted({0, i}));
      break;
    case BaseRule::Construct3:
      return construct3(n).family;
    case BaseRule::SingleTuple: {
      std::vector<VertexId> all(d);
      for (std::size_t i = 0; i < d; ++i) all[i] = static_cast<VertexId>(i);
      edges.push_back(EdgeTuple::from_sorted(std::move(all)));
      break;
    }
  }
  return Family(n, d, std::move(edges));
}

BaseRule base_rule_for(std::size_t d, std::size_t n) {
  if (n < d) return BaseRule::Empty;
  if (d == 1) return BaseRule::Singleton;
  if (d == 2) return BaseRule::Star;
  if (d == 3) return BaseRule::Construct3;
  return BaseRule::SingleTuple;
}

/// W = union over i of { s u (t + k) : s an i-subset of [0, k), t in parts[i] }.
Family combine_split(std::size_t d, std::size_t k, const std::vector<const Family*>& parts) {
  std::vector<EdgeTuple> edges;
  for (std::size_t i = 0; i < d; ++i) {
    const Family& child = *parts[i];
    if (child.empty()) continue;
    for (const auto& s : all_tuples(k, i)) {
      for (const auto& t : child) {
        std::vector<VertexId> e(s.begin(), s.end());
        for (VertexId v : t) e.push_back(static_cast<VertexId>(v + k));
        edges.push_back(EdgeTuple::from_sorted(std::move(e)));
      }
    }
  }
  return Family(2 * k, d, std::move(edges));
}

/// (lower + {x}) u same, on [0, x].
Family combine_peel(std::size_t d, VertexId x, const Family& lower, const Family& same) {
  std::vector<EdgeTuple> edges(same.begin(), same.end());
  for (const auto& t : lower) {
    std::vector<VertexId> e(t.begin(), t.end());
    e.push_back(x);
    edges.push_back(EdgeTuple::from_sorted(std::move(e)));
  }
  return Family(static_cast<std::size_t>(x) + 1, d, std::move(edges));
}

class Builder {
 public:
  const Construction& build(std::size_t d, std::size_t n) {
    if (auto it = memo_.find({d, n}); it != memo_.end()) return it->second;
    Construction c = make(d, n);
    return memo_.emplace(Key{d, n}, std::move(c)).first->second;
  }

 private:
  Construction make(std::size_t d, std::size_t n) {
    ConstructionTrace trace;
    trace.d = d;
    trace.n = n;
    if (n < d || d <= 3 || n == d) {
      trace.kind = StepKind::Base;
      trace.base = base_rule_for(d, n);
      return Construction{base_family(d, n, trace.base), std::move(trace)};
    }
    if (n % 2 == 0) {
      const std::size_t k = n / 2;
      trace.kind = StepKind::EvenSplit;
      trace.pivot = k;
      std::vector<const Family*> parts;
      for (std::size_t i = 0; i < d; ++i) {
        const Construction& child = build(d - i, k);
        parts.push_back(&child.family);
        trace.children.push_back(child.trace);
      }
      return Construction{combine_split(d, k, parts), std::move(trace)};
    }
    const auto x = static_cast<VertexId>(n - 1);
    const Construction& lower = build(d - 1, n - 1);
    const Construction& same = build(d, n - 1);
    trace.kind = StepKind::OddPeel;
    trace.pivot = x;
    trace.children = {lower.trace, same.trace};
    return Construction{combine_peel(d, x, lower.family, same.family), std::move(trace)};
  }

  std::map<Key, Construction> memo_;
};

class SizePredictor {
 public:
  std::uint64_t size(std::size_t d, std::size_t n) {
    if (n < d || d == 0) return 0;
    if (d == 1) return 1;
    if (d == 2) return n - 1;
    if (d == 3) return phi3(n);
    if (n == d) return 1;
    if (auto it = memo_.find({d, n}); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    if (n % 2 == 0) {
      const std::size_t k = n / 2;
      for (std::size_t i = 0; i < d; ++i) total += binomial(k, i) * size(d - i, k);
    } else {
      total = size(d - 1, n - 1) + size(d, n - 1);
    }
    memo_[{d, n}] = total;
    return total;
  }

 private:
  std::map<Key, std::uint64_t> memo_;
};

}  // namespace

Construction construct_d(std::size_t d, std::size_t n) {
  if (d == 0) throw Error(ErrorCode::InvalidArity, "d must be at least 1");
  Builder builder;
  return builder.build(d, n);
}

Family replay(const ConstructionTrace& trace) {
  switch (trace.kind) {
    case StepKind::Base:
      return base_family(trace.d, trace.n, trace.base);
    case StepKind::EvenSplit: {
      if (trace.children.size() != trace.d) throw Error(ErrorCode::InvalidArity, "split needs d children");
      std::vector<Family> built;
      for (const auto& c : trace.children) built.push_back(replay(c));
      std::vector<const Family*> parts;
      for (const auto& f : built) parts.push_back(&f);
      return combine_split(trace.d, trace.pivot, parts);
    }
    case StepKind::OddPeel: {
      if (trace.children.size() != 2) throw Error(ErrorCode::InvalidArity, "peel needs two children");
      return combine_peel(trace.d, static_cast<VertexId>(trace.pivot), replay(trace.children[0]),
                          replay(trace.children[1]));
    }
  }
  throw Error(ErrorCode::Parse, "unknown trace step");
}

std::uint64_t predicted_size(std::size_t d, std::size_t n) {
  if (d == 0) throw Error(ErrorCode::InvalidArity, "d must be at least 1");
  SizePredictor p;
  return p.size(d, n);
}

}  // namespace blockset
