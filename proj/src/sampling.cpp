#include <deque>
#include <random>

#include "graph_util.hpp"
#include "twin/semantics.hpp"

namespace twin {

std::vector<bool> live_vertices(const RegionGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> adj(n), rev(n);
  std::vector<bool> self_loop(n, false);
  for (const GraphEdge& e : g.edges) {
    adj[e.source].push_back(e.target);
    rev[e.target].push_back(e.source);
    if (e.source == e.target) self_loop[e.source] = true;
  }
  const std::vector<int> comp = detail::strongly_connected(adj);
  const int m = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
  std::vector<int> size(m, 0);
  std::vector<bool> has_int(m, false), has_frac(m, false), loop(m, false);
  for (int v = 0; v < n; ++v) {
    ++size[comp[v]];
    (gamma_integral(g.vertices[v]) ? has_int : has_frac)[comp[v]] = true;
    if (self_loop[v]) loop[comp[v]] = true;
  }
  std::vector<bool> live(n, false);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    const int c = comp[v];
    if ((size[c] > 1 || loop[c]) && has_int[c] && has_frac[c]) {
      live[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : rev[v])
      if (!live[u]) {
        live[u] = true;
        queue.push_back(u);
      }
  }
  return live;
}

namespace {

void step_along(const TimedAutomaton& ta, const RegionGraph& g, Run& run, const GraphEdge& e) {
  const ConcreteState& s = run.states.back();
  Move m;
  if (e.kind() == StepKind::Delay) {
    std::vector<ClockRegion> chain{g.vertices[e.source].clocks, g.vertices[e.target].clocks};
    m.delay = delay_to_position(s.valuation, chain, 1);
  } else {
    m.delay = 0;
    m.action = ta.edges[e.edge].action;
  }
  ConcreteState next = apply_move(ta, s, m);
  if (!(StateRegion{next.location, region_of(next.valuation, g.bounds)} == g.vertices[e.target]))
    throw std::logic_error("realized step left the target region");
  run.moves.push_back(std::move(m));
  run.states.push_back(std::move(next));
}

}  // namespace

void extend_along(const TimedAutomaton& ta, const RegionGraph& g, Run& run, const std::vector<int>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const GraphEdge* found = nullptr;
    for (int eid : g.out.at(path[i]))
      if (g.edges[eid].target == path[i + 1]) {
        found = &g.edges[eid];
        break;
      }
    if (!found) throw std::invalid_argument("path is not a region-graph path");
    step_along(ta, g, run, *found);
  }
}

std::vector<Run> sample_runs(const TimedAutomaton& ta, std::size_t count, const Rational& horizon,
                             std::uint64_t seed) {
  return sample_runs(ta, build_region_graph(ta), count, horizon, seed);
}

std::vector<Run> sample_runs(const TimedAutomaton& ta, const RegionGraph& g, std::size_t count,
                             const Rational& horizon, std::uint64_t seed) {
  if (!(horizon > 0)) throw std::invalid_argument("horizon must be positive");
  const std::vector<bool> live = live_vertices(g);
  if (g.size() == 0 || !live[g.initial])
    throw Deadlock("no time-divergent continuation from " + encode(g.vertices.at(g.initial), ta));
  std::mt19937_64 rng(seed);
  std::vector<Run> runs;
  runs.reserve(count);
  const std::size_t max_steps = 1000000;
  std::vector<int> options;
  for (std::size_t r = 0; r < count; ++r) {
    Run run;
    run.states.push_back(initial_state(ta));
    int v = g.initial;
    while (run.time(run.states.size() - 1) < horizon) {
      if (run.moves.size() >= max_steps) throw std::runtime_error("sampled run exceeded the step limit");
      options.clear();
      for (int eid : g.out[v])
        if (live[g.edges[eid].target]) options.push_back(eid);
      const GraphEdge& e = g.edges[options[rng() % options.size()]];
      step_along(ta, g, run, e);
      v = e.target;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace twin
