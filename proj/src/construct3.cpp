#include "blockset/construct3.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blockset/union_find.hpp"

namespace blockset {

Layout3::Layout3(std::size_t n_vertices) : n(n_vertices), k(n_vertices / 3) {}

std::vector<VertexId> Layout3::block_ids(std::size_t j) const {
  std::vector<VertexId> ids(k);
  for (std::size_t i = 0; i < k; ++i) ids[i] = block(j, i);
  return ids;
}

const char* to_string(EdgeColor c) noexcept { return c == EdgeColor::Red ? "red" : "blue"; }

std::size_t ColoredFamily::count(EdgeColor c) const {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
}

namespace {

std::size_t id_bound(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexId m = 0;
  for (auto v : a) m = std::max(m, v);
  for (auto v : b) m = std::max(m, v);
  return static_cast<std::size_t>(m) + 1;
}

}  // namespace

std::vector<EdgeTuple> h_pair(std::span<const VertexId> a_ids, std::span<const VertexId> b_ids) {
  if (a_ids.size() != b_ids.size() || a_ids.empty()) {
    throw Error(ErrorCode::InvalidArity, "gadget sides must both have k >= 1 vertices");
  }
  const std::set<VertexId> a_set(a_ids.begin(), a_ids.end());
  for (auto b : b_ids) {
    if (a_set.count(b)) throw Error(ErrorCode::OverlappingSets, "A and B share vertex " + std::to_string(b));
  }
  const std::size_t k = a_ids.size();
  const std::size_t bound = id_bound(a_ids, b_ids);
  std::vector<EdgeTuple> out;
  out.reserve(k * (k - 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t shift = 0; shift < 2; ++shift) {
        const VertexId tri[3] = {a_ids[i], a_ids[j], b_ids[(i + j + shift) % k]};
        out.push_back(EdgeTuple::canonical(tri, bound));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColoredFamily construct3(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "construction needs n >= 3, got " + std::to_string(n));
  const Layout3 layout(n);
  const std::size_t k = layout.k;

  std::map<EdgeTuple, EdgeColor> colored;
  for (std::size_t j = 0; j < 3; ++j) {
    const auto a = layout.block_ids(j);
    const auto b = layout.block_ids((j + 1) % 3);
    for (auto& e : h_pair(a, b)) colored.emplace(std::move(e), EdgeColor::Red);
  }

  auto blue = [&](VertexId x, VertexId y, VertexId z) {
    const VertexId tri[3] = {x, y, z};
    colored.emplace(EdgeTuple::canonical(tri, n), EdgeColor::Blue);
  };
  const VertexId inf1 = layout.infinity1();
  const VertexId inf2 = layout.infinity2();
  for (std::size_t i = 0; i < k; ++i) {
    switch (layout.residue()) {
      case 0:
        blue(layout.u(i), layout.v(i), layout.w(i));
        break;
      case 1:
        blue(inf1, layout.u(i), layout.v(i));
        blue(inf1, layout.v(i), layout.w(i));
        blue(inf1, layout.w(i), layout.u(i + 1));
        break;
      default:
        blue(inf1, layout.u(i), layout.v(i));
        blue(inf1, layout.v(i), layout.w(i));
        blue(inf2, layout.w(i), layout.u(i + 1));
        blue(inf2, layout.u(i), layout.v(i + 1));
        blue(inf1, inf2, layout.w(i));
        break;
    }
  }

  std::vector<EdgeTuple> edges;
  std::vector<EdgeColor> colors;
  edges.reserve(colored.size());
  colors.reserve(colored.size());
  for (auto& [e, c] : colored) {
    edges.push_back(e);
    colors.push_back(c);
  }
  return ColoredFamily{Family(n, 3, std::move(edges)), std::move(colors)};
}

// ---------------------------------------------------------------------------
// Structure diagnostics

bool StructureReport::all_hold() const {
  for (const auto& clause : {a_induced_connected, no_ab_edges, complete_on_a_minus_x,
                             at_most_two_components, connected_when_b_untouched,
                             segments_split_initial_terminal, both_components_meet_b,
                             terminal_b_after_removed}) {
    if (clause && !*clause) return false;
  }
  return true;
}

StructureReport structure_report(std::span<const VertexId> a_ids, std::span<const VertexId> b_ids,
                                 std::span<const VertexId> x) {
  const auto triples = h_pair(a_ids, b_ids);
  const std::size_t k = a_ids.size();

  // Local indices: a_i -> i, b_i -> k + i.
  std::map<VertexId, std::size_t> local;
  for (std::size_t i = 0; i < k; ++i) {
    local[a_ids[i]] = i;
    local[b_ids[i]] = k + i;
  }
  std::vector<bool> removed(2 * k, false);
  for (auto v : x) {
    auto it = local.find(v);
    if (it != local.end()) removed[it->second] = true;
  }
  auto is_a = [k](std::size_t i) { return i < k; };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& t : triples) {
    std::size_t inside = 0;
    std::vector<std::size_t> rest;
    for (auto v : t) {
      const std::size_t li = local.at(v);
      if (removed[li]) ++inside;
      else rest.push_back(li);
    }
    if (inside == 1) edges.emplace_back(rest[0], rest[1]);
  }

  DisjointSets all(2 * k);
  for (auto [p, q] : edges) all.unite(p, q);

  StructureReport report;
  std::map<std::size_t, std::vector<VertexId>> by_root;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (!removed[i]) by_root[all.find(i)].push_back(is_a(i) ? a_ids[i] : b_ids[i - k]);
  }
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    report.components.push_back(std::move(members));
  }
  std::sort(report.components.begin(), report.components.end());
  report.component_count = report.components.size();

  bool a_meets_x = false, a_inside_x = true, b_meets_x = false, b_inside_x = true;
  for (std::size_t i = 0; i < k; ++i) {
    a_meets_x |= removed[i];
    a_inside_x &= removed[i];
    b_meets_x |= removed[k + i];
    b_inside_x &= removed[k + i];
  }

  if (!a_meets_x && b_meets_x) {
    DisjointSets within_a(k);
    bool cross = false;
    for (auto [p, q] : edges) {
      if (is_a(p) && is_a(q)) within_a.unite(p, q);
      else if (is_a(p) != is_a(q)) cross = true;
    }
    report.a_induced_connected = within_a.set_count() == 1;
    report.no_ab_edges = !cross;
  }

  if (b_inside_x) {
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (auto [p, q] : edges) present.emplace(std::min(p, q), std::max(p, q));
    bool complete = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!removed[i] && !removed[j] && !present.count({i, j})) complete = false;
      }
    }
    report.complete_on_a_minus_x = complete;
  }

  if (a_meets_x && !a_inside_x && !b_inside_x) {
    report.at_most_two_components = report.component_count <= 2;
    if (!b_meets_x) report.connected_when_b_untouched = report.component_count == 1;
    if (report.component_count == 2) {
      // The initial component holds the successor of the first removed A-vertex
      // that has a surviving successor.
      std::size_t initial_root = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (removed[j] && !removed[(j + 1) % k]) {
          initial_root = all.find((j + 1) % k);
          break;
        }
      }
      bool segments_ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (!removed[j]) continue;
        // Walk the surviving run after a_j: initial vertices, then terminal ones.
        std::size_t initial = 0, terminal = 0;
        bool order_ok = true;
        for (std::size_t t = (j + 1) % k; !removed[t]; t = (t + 1) % k) {
          if (all.find(t) == initial_root) {
            if (terminal > 0) order_ok = false;
            ++initial;
          } else {
            ++terminal;
          }
        }
        const bool empty_run = initial == 0 && terminal == 0;
        if (!empty_run && (!order_ok || initial == 0 || terminal == 0)) segments_ok = false;
      }
      report.segments_split_initial_terminal = segments_ok;

      bool b_in_initial = false, b_in_terminal = false, terminal_after_removed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (removed[k + i]) continue;
        const bool in_initial = all.find(k + i) == initial_root;
        b_in_initial |= in_initial;
        b_in_terminal |= !in_initial;
        if (!in_initial && removed[k + (i + k - 1) % k]) terminal_after_removed = true;
      }
      report.both_components_meet_b = b_in_initial && b_in_terminal;
      report.terminal_b_after_removed = terminal_after_removed;
    }
  }
  return report;
}

}  // namespace blockset
