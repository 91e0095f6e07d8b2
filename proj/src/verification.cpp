#include "twin/verification.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "graph_util.hpp"

namespace twin {

bool Verdict::holds() const {
  return std::all_of(dimensions.begin(), dimensions.end(), [](const auto& w) { return !w.has_value(); });
}

namespace {

std::vector<int> successors(const RegionGraph& g, int v) {
  std::vector<int> out;
  out.reserve(g.out[v].size());
  for (int eid : g.out[v]) out.push_back(g.edges[eid].target);
  return out;
}

// BFS tree from a source; returns parent array (-1 unreached, source points to itself).
std::vector<int> bfs_tree(const RegionGraph& g, int source) {
  std::vector<int> parent(g.size(), -1);
  std::deque<int> queue{source};
  parent[source] = source;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int eid : g.out[v]) {
      const int w = g.edges[eid].target;
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

std::vector<int> tree_path(const std::vector<int>& parent, int target) {
  std::vector<int> path;
  for (int v = target; ; v = parent[v]) {
    path.push_back(v);
    if (parent[v] == v) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Shortest path inside an allowed vertex set (both endpoints allowed).
std::vector<int> restricted_path(const std::vector<std::vector<int>>& adj, const std::vector<bool>& allowed,
                                 int from, int to, bool nonempty) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -1);
  std::deque<int> queue;
  // A non-empty path must leave "from" even when from == to.
  for (int w : adj[from]) {
    if (!allowed[w] || parent[w] >= 0) continue;
    parent[w] = from;
    queue.push_back(w);
  }
  if (!nonempty && from == to) return {from};
  while (!queue.empty() && parent[to] < 0) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (allowed[w] && parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (parent[to] < 0) return {};
  std::vector<int> path{to};
  int v = parent[to];
  while (v != from) {
    path.push_back(v);
    v = parent[v];
  }
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<ViolationWitness> find_violation(const RegionGraph& g, const PriorityFunction& pf, int k,
                                               bool indirect) {
  const int n = g.size();
  if (n == 0) return std::nullopt;
  const int D = pf.count;
  auto prio = [&](int v) { return pf.at(g.vertices[v].location, k); };
  const std::vector<int> from_initial = bfs_tree(g, g.initial);

  std::vector<std::vector<int>> plain(n);
  std::vector<std::vector<int>> reverse(n);
  for (int v = 0; v < n; ++v) {
    plain[v] = successors(g, v);
    for (int w : plain[v]) reverse[w].push_back(v);
  }

  std::vector<int> local(static_cast<std::size_t>(n) * D, -1);
  for (int anchor = 0; anchor < n; ++anchor) {
    const int p0 = prio(anchor);
    if (p0 % 2 == 0 || from_initial[anchor] < 0) continue;

    std::vector<bool> reaches_anchor;
    if (indirect) {
      reaches_anchor.assign(n, false);
      std::deque<int> queue{anchor};
      reaches_anchor[anchor] = true;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : reverse[v])
          if (!reaches_anchor[u]) {
            reaches_anchor[u] = true;
            queue.push_back(u);
          }
      }
    }

    // Product nodes (v, m): BFS from (anchor, p0) keeping m odd.
    std::vector<std::pair<int, int>> nodes;
    std::vector<int> parent;
    auto visit = [&](int v, int m, int from) {
      const std::size_t key = static_cast<std::size_t>(v) * D + m;
      if (local[key] >= 0) return;
      local[key] = static_cast<int>(nodes.size());
      nodes.emplace_back(v, m);
      parent.push_back(from);
    };
    visit(anchor, p0, -1);
    std::vector<std::vector<int>> adj;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto [v, m] = nodes[i];
      adj.emplace_back();
      for (int w : plain[v]) {
        const int m2 = std::min(m, prio(w));
        if (m2 % 2 == 0) continue;
        visit(w, m2, static_cast<int>(i));
        adj[i].push_back(local[static_cast<std::size_t>(w) * D + m2]);
      }
    }
    for (const auto& [v, m] : nodes) local[static_cast<std::size_t>(v) * D + m] = -1;

    const std::vector<int> comp = detail::strongly_connected(adj);
    const int count = nodes.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> size(count, 0), entry(count, -1), frac_node(count, -1);
    std::vector<bool> loop(count, false);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const int c = comp[i];
      ++size[c];
      for (int j : adj[i])
        if (j == static_cast<int>(i)) loop[c] = true;
      const bool integral = gamma_integral(g.vertices[nodes[i].first]);
      if (integral && entry[c] < 0) entry[c] = static_cast<int>(i);
      if (!integral && frac_node[c] < 0) frac_node[c] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const int c = comp[i];
      if (entry[c] != static_cast<int>(i) || frac_node[c] < 0) continue;
      if (size[c] < 2 && !loop[c]) continue;
      const int r2 = nodes[i].first;
      if (indirect && !reaches_anchor[r2]) continue;

      ViolationWitness w;
      w.dimension = k;
      w.indirect = indirect;
      w.anchor = anchor;
      w.prefix = tree_path(from_initial, anchor);
      w.anchor_index = w.prefix.size() - 1;
      std::vector<int> stem;
      for (int j = static_cast<int>(i); parent[j] >= 0; j = parent[j]) stem.push_back(nodes[j].first);
      std::reverse(stem.begin(), stem.end());
      w.prefix.insert(w.prefix.end(), stem.begin(), stem.end());

      std::vector<bool> in_comp(nodes.size(), false);
      for (std::size_t j = 0; j < nodes.size(); ++j) in_comp[j] = comp[j] == c;
      const int f = frac_node[c];
      std::vector<int> there = restricted_path(adj, in_comp, static_cast<int>(i), f, true);
      std::vector<int> back = restricted_path(adj, in_comp, f, static_cast<int>(i), true);
      for (int j : there) w.cycle.push_back(nodes[j].first);
      w.fractional_marker = w.cycle.size() - 1;
      for (std::size_t j = 1; j < back.size(); ++j) w.cycle.push_back(nodes[back[j]].first);
      w.integral_marker = 0;

      if (indirect) {
        std::vector<bool> all(n, true);
        w.return_path = restricted_path(plain, all, r2, anchor, false);
      }
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> ordered_target_reach(const RegionGraph& g, const PriorityFunction& pf, int k,
                                                     int start, const std::vector<RegionFilter>& targets) {
  const int D = pf.count;
  const int T = static_cast<int>(targets.size());
  auto prio = [&](int v) { return pf.at(g.vertices[v].location, k); };
  auto advance = [&](int v, int idx) {
    while (idx < T && targets[idx](g.vertices[v])) ++idx;
    return idx;
  };
  const int m0 = prio(start);
  if (m0 % 2 == 0) return std::nullopt;

  auto key = [&](int v, int m, int idx) {
    return (static_cast<std::size_t>(v) * D + m) * (T + 1) + idx;
  };
  std::unordered_map<std::size_t, std::size_t> seen;
  struct Node {
    int v, m, idx;
    std::ptrdiff_t parent;
  };
  std::vector<Node> nodes;
  auto push = [&](int v, int m, int idx, std::ptrdiff_t parent) {
    if (seen.emplace(key(v, m, idx), nodes.size()).second) nodes.push_back(Node{v, m, idx, parent});
  };
  push(start, m0, advance(start, 0), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node cur = nodes[i];
    if (cur.idx == T) {
      std::vector<int> path;
      for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i); j >= 0; j = nodes[j].parent) path.push_back(nodes[j].v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int eid : g.out[cur.v]) {
      const int w = g.edges[eid].target;
      const int m = std::min(cur.m, prio(w));
      if (m % 2 == 0) continue;
      push(w, m, advance(w, cur.idx), static_cast<std::ptrdiff_t>(i));
    }
  }
  return std::nullopt;
}

std::optional<ViolationWitness> find_direct_violation(const RegionGraph& g, const PriorityFunction& pf, int k) {
  return find_violation(g, pf, k, false);
}

std::optional<ViolationWitness> find_indirect_violation(const RegionGraph& g, const PriorityFunction& pf, int k) {
  return find_violation(g, pf, k, true);
}

Verdict verify(const ModelBundle& b, Mode mode) { return verify(b, build_region_graph(b.automaton), mode); }

Verdict verify(const ModelBundle& b, const RegionGraph& g, Mode mode) {
  Verdict v;
  for (int k = 0; k < b.priorities.dimensions; ++k)
    v.dimensions.push_back(mode == Mode::Direct ? find_direct_violation(g, b.priorities, k)
                                                : find_indirect_violation(g, b.priorities, k));
  return v;
}

WitnessRun realize_witness(const ModelBundle& b, const RegionGraph& g, const ViolationWitness& w,
                           std::size_t stages) {
  const TimedAutomaton& ta = b.automaton;
  if (w.prefix.empty() || w.prefix.front() != g.initial || w.anchor_index >= w.prefix.size() ||
      w.prefix[w.anchor_index] != w.anchor || w.cycle.size() < 2 || w.cycle.front() != w.cycle.back() ||
      w.cycle.front() != w.prefix.back())
    throw std::invalid_argument("witness inconsistent with graph");
  WitnessRun out;
  out.run.states.push_back(initial_state(ta));
  auto here = [&] { return out.run.states.size() - 1; };
  if (!w.indirect) {
    extend_along(ta, g, out.run, w.prefix);
    out.stage_starts.push_back(w.anchor_index);
    for (std::size_t s = 0; s < stages; ++s) extend_along(ta, g, out.run, w.cycle);
    out.stage_ends.push_back(here());
    return out;
  }
  if (w.return_path.empty() || w.return_path.front() != w.cycle.front() || w.return_path.back() != w.anchor)
    throw std::invalid_argument("witness inconsistent with graph");
  const std::vector<int> to_anchor(w.prefix.begin(), w.prefix.begin() + static_cast<std::ptrdiff_t>(w.anchor_index) + 1);
  const std::vector<int> stem(w.prefix.begin() + static_cast<std::ptrdiff_t>(w.anchor_index), w.prefix.end());
  extend_along(ta, g, out.run, to_anchor);
  for (std::size_t n = 1; n <= stages; ++n) {
    out.stage_starts.push_back(here());
    extend_along(ta, g, out.run, stem);
    for (std::size_t r = 0; r <= n; ++r) extend_along(ta, g, out.run, w.cycle);
    out.stage_ends.push_back(here());
    extend_along(ta, g, out.run, w.return_path);
  }
  if (stages == 0) {
    out.stage_starts.push_back(here());
    extend_along(ta, g, out.run, stem);
    out.stage_ends.push_back(here());
  }
  return out;
}

}  // namespace twin
