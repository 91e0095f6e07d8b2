#include "twin/arena.hpp"

#include <deque>
#include <sstream>

namespace twin {

std::vector<ClockRegion> move_chain(const TimedAutomaton& ta, const StateRegion& region, const ClockBounds& bounds) {
  std::vector<ClockRegion> chain =
      delay_chain(region.clocks, ta.locations.at(region.location).invariant, bounds).regions;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!gamma_integral(chain[i])) continue;
    chain.resize(gamma_integral(chain[0]) ? i : i + 1);
    break;
  }
  return chain;
}

namespace {

bool edge_enabled(const TimedAutomaton& ta, const Edge& e, const ClockRegion& at, const ClockBounds& bounds) {
  if (!satisfies(at, e.guard, bounds)) return false;
  return satisfies(apply_reset(at, e.resets), ta.locations[e.target].invariant, bounds);
}

bool ticks_before(const std::vector<ClockRegion>& chain, int position) {
  for (int j = 1; j <= position; ++j)
    if (gamma_integral(chain[j])) return true;
  return false;
}

std::vector<AbstractMove> moves_on(const TimedGame& game, const StateRegion& region,
                                   const std::vector<ClockRegion>& chain, const ClockBounds& bounds) {
  const TimedAutomaton& ta = game.automaton;
  std::vector<AbstractMove> out;
  for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
    out.push_back({i, -1});
    for (int e = 0; e < static_cast<int>(ta.edges.size()); ++e) {
      const Edge& edge = ta.edges[e];
      if (edge.source != region.location || !game.p1_owns(edge.action)) continue;
      if (edge_enabled(ta, edge, chain[i], bounds)) out.push_back({i, e});
    }
  }
  return out;
}

std::vector<Resolution> responses_on(const TimedGame& game, const StateRegion& region,
                                     const std::vector<ClockRegion>& chain, const ClockBounds& bounds,
                                     const AbstractMove& pending) {
  const TimedAutomaton& ta = game.automaton;
  const int t = pending.target;
  std::vector<Resolution> out;
  auto fire = [&](int edge, int position) {
    if (edge < 0) return StateRegion{region.location, chain[position]};
    const Edge& e = ta.edges[edge];
    return StateRegion{e.target, apply_reset(chain[position], e.resets)};
  };
  out.push_back({Resolution::Kind::Pass, pending.edge, t, fire(pending.edge, t), ticks_before(chain, t), true});
  for (int i = 0; i <= t; ++i) {
    if (i < t || pending.edge >= 0)
      out.push_back({Resolution::Kind::Preempt, -1, i, fire(-1, i), ticks_before(chain, i), false});
    for (int e = 0; e < static_cast<int>(ta.edges.size()); ++e) {
      const Edge& edge = ta.edges[e];
      if (edge.source != region.location || game.p1_owns(edge.action)) continue;
      if (edge_enabled(ta, edge, chain[i], bounds))
        out.push_back({Resolution::Kind::Preempt, e, i, fire(e, i), ticks_before(chain, i), false});
    }
  }
  return out;
}

}  // namespace

std::vector<AbstractMove> p1_abstract_moves(const TimedGame& game, const StateRegion& region) {
  const ClockBounds bounds = clock_bounds(game.automaton);
  return moves_on(game, region, move_chain(game.automaton, region, bounds), bounds);
}

std::vector<Resolution> p2_responses(const TimedGame& game, const StateRegion& region, const AbstractMove& pending) {
  const ClockBounds bounds = clock_bounds(game.automaton);
  const auto chain = move_chain(game.automaton, region, bounds);
  if (pending.target < 0 || pending.target >= static_cast<int>(chain.size()))
    throw std::invalid_argument("pending move outside the move chain");
  return responses_on(game, region, chain, bounds, pending);
}

MoveTable::MoveTable(const TimedGame& game, const RegionGraph& graph)
    : game_(game),
      graph_(graph),
      ready_(graph.size(), false),
      chains_(graph.size()),
      moves_(graph.size()),
      responses_(graph.size()),
      successors_(graph.size()) {}

void MoveTable::fill(int r) const {
  if (ready_[r]) return;
  const StateRegion& region = graph_.vertices[r];
  chains_[r] = move_chain(game_.automaton, region, graph_.bounds);
  moves_[r] = moves_on(game_, region, chains_[r], graph_.bounds);
  for (const auto& m : moves_[r]) {
    responses_[r].push_back(responses_on(game_, region, chains_[r], graph_.bounds, m));
    std::vector<int> succ;
    for (const auto& res : responses_[r].back()) {
      const auto id = graph_.find(res.successor);
      if (!id) throw std::logic_error("arena successor missing from the region graph");
      succ.push_back(*id);
    }
    successors_[r].push_back(std::move(succ));
  }
  ready_[r] = true;
}

const std::vector<ClockRegion>& MoveTable::chain(int r) const {
  fill(r);
  return chains_[r];
}
const std::vector<AbstractMove>& MoveTable::moves(int r) const {
  fill(r);
  return moves_[r];
}
const std::vector<Resolution>& MoveTable::responses(int r, int m) const {
  fill(r);
  return responses_[r][m];
}
int MoveTable::successor(int r, int m, int k) const {
  fill(r);
  return successors_[r][m][k];
}

int fresh_entry(const ExpandedDpa& condition, const StateRegion& region) {
  return condition.step(condition.initial(), region, false, false);
}

std::optional<int> Arena::p1_vertex(int region, int state) const {
  auto it = p1_index.find(static_cast<long long>(region) << 32 | static_cast<unsigned>(state));
  if (it == p1_index.end()) return std::nullopt;
  return it->second;
}

Arena build_arena(const MoveTable& table, const ExpandedDpa& condition) {
  const RegionGraph& graph = table.graph();
  Arena arena;
  std::vector<LetterClass> letters;
  letters.reserve(graph.size());
  for (const auto& r : graph.vertices) letters.push_back(condition.base().classify(r));

  std::deque<int> queue;
  auto p1 = [&](int region, int state) {
    const long long key = static_cast<long long>(region) << 32 | static_cast<unsigned>(state);
    auto [it, fresh] = arena.p1_index.emplace(key, arena.game.size());
    if (fresh) {
      arena.game.add_vertex(Player::P1, condition.priority(state));
      arena.vertices.push_back({region, state, -1});
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto with_blame = [&](int state, bool blame) {
    auto f = condition.decode(state);
    f.blame = blame;
    return condition.encode(f);
  };

  for (int r = 0; r < graph.size(); ++r) {
    const int s = condition.step(condition.initial(), letters[r], false, false);
    arena.roots.push_back(p1(r, s));
  }
  arena.game.initial = arena.roots[graph.initial];

  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const ArenaVertex here = arena.vertices[v];
    // Blame is ignored by P1's strategies; keep both twins so lookups always succeed.
    p1(here.region, with_blame(here.state, false));
    const auto& moves = table.moves(here.region);
    for (int m = 0; m < static_cast<int>(moves.size()); ++m) {
      const int w = arena.game.add_vertex(Player::P2, arena.game.priority[v]);
      arena.vertices.push_back({here.region, here.state, m});
      arena.game.succ[v].push_back(w);
      const auto& res = table.responses(here.region, m);
      for (int k = 0; k < static_cast<int>(res.size()); ++k) {
        const int next = table.successor(here.region, m, k);
        const int s = condition.step(here.state, letters[next], res[k].tick, res[k].blame);
        const int u = p1(next, s);
        arena.game.succ[w].push_back(u);
      }
    }
  }
  return arena;
}

std::string export_arena_dot(const Arena& arena, const TimedAutomaton& ta, const RegionGraph& graph) {
  std::ostringstream out;
  out << "digraph arena {\n";
  for (int v = 0; v < arena.game.size(); ++v) {
    const auto& x = arena.vertices[v];
    out << "  v" << v << " [shape=" << (arena.game.owner[v] == Player::P1 ? "circle" : "box") << ", label=\""
        << encode(graph.vertices[x.region], ta) << "\\nq=" << x.state;
    if (x.move >= 0) out << " m=" << x.move;
    out << "\\np=" << arena.game.priority[v] << "\"];\n";
  }
  for (int v = 0; v < arena.game.size(); ++v)
    for (int w : arena.game.succ[v]) out << "  v" << v << " -> v" << w << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace twin
