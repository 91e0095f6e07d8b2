#include <deque>

#include "twin/region.hpp"

namespace twin {

std::optional<int> RegionGraph::find(const StateRegion& r) const {
  auto it = index.find(r);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

RegionGraph build_region_graph(const TimedAutomaton& ta) {
  RegionGraph g;
  g.bounds = clock_bounds(ta);
  std::deque<int> queue;
  auto intern = [&](StateRegion r) {
    auto [it, fresh] = g.index.emplace(r, g.size());
    if (fresh) {
      g.vertices.push_back(std::move(r));
      g.out.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto link = [&](int from, int to, int edge) {
    g.out[from].push_back(static_cast<int>(g.edges.size()));
    g.edges.push_back(GraphEdge{from, to, edge});
  };

  Valuation zero(ta.clock_count(), Rational(0));
  g.initial = intern(StateRegion{ta.initial, region_of(zero, g.bounds)});

  std::vector<std::vector<int>> outgoing(ta.location_count());
  for (std::size_t e = 0; e < ta.edges.size(); ++e)
    outgoing[ta.edges[e].source].push_back(static_cast<int>(e));

  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const StateRegion here = g.vertices[v];
    const Location& loc = ta.locations[here.location];

    ClockRegion next = delay_successor(here.clocks, g.bounds);
    if (satisfies(next, loc.invariant, g.bounds)) {
      const int w = intern(StateRegion{here.location, std::move(next)});
      link(v, w, -1);
    }
    for (int e : outgoing[here.location]) {
      const Edge& edge = ta.edges[e];
      if (!satisfies(here.clocks, edge.guard, g.bounds)) continue;
      ClockRegion after = apply_reset(here.clocks, edge.resets);
      if (!satisfies(after, ta.locations[edge.target].invariant, g.bounds)) continue;
      const int w = intern(StateRegion{edge.target, std::move(after)});
      link(v, w, e);
    }
  }
  return g;
}

}  // namespace twin
