#include "twin/simulate.hpp"

#include <algorithm>

namespace twin {

Move realize_move(const TimedAutomaton& ta, const AbstractMove& move, const ConcreteState& state,
                  const std::vector<ClockRegion>& chain) {
  const ClockBounds bounds = clock_bounds(ta);
  if (chain.empty() || region_of(state.valuation, bounds) != chain.front())
    throw Unrealizable("state does not lie in the move's source region");
  if (move.target < 0 || move.target >= static_cast<int>(chain.size()))
    throw Unrealizable("move target outside the move chain");
  Move out;
  out.delay = delay_to_position(state.valuation, chain, static_cast<std::size_t>(move.target));
  out.action = move.edge < 0 ? kNoAction : ta.edges.at(move.edge).action;
  return out;
}

Move realize_move(const TimedAutomaton& ta, const AbstractMove& move, const ConcreteState& state) {
  const ClockBounds bounds = clock_bounds(ta);
  const StateRegion region{state.location, region_of(state.valuation, bounds)};
  return realize_move(ta, move, state, move_chain(ta, region, bounds));
}

std::optional<Move> concretize(const TimedAutomaton& ta, const Resolution& res, const ConcreteState& state,
                               const std::vector<ClockRegion>& chain) {
  if (res.kind == Resolution::Kind::Pass) return std::nullopt;
  return realize_move(ta, AbstractMove{res.position, res.edge}, state, chain);
}

std::optional<Move> RandomAdversary::respond(const ResponseContext& ctx) {
  const auto& options = ctx.table.responses(ctx.region, ctx.move_index);
  const auto& pick = options[rng_() % options.size()];
  return concretize(ctx.table.game().automaton, pick, ctx.state, ctx.table.chain(ctx.region));
}

std::optional<Move> ScriptAdversary::respond(const ResponseContext&) {
  if (next_ >= script_.size()) return std::nullopt;
  return script_[next_++];
}

void CounterAdversary::start(const MoveTable& table, int region) {
  state_ = fresh_entry(round_->condition, table.graph().vertices[region]);
}

std::optional<Move> CounterAdversary::respond(const ResponseContext& ctx) {
  const auto v = round_->arena.p1_vertex(ctx.region, state_);
  if (!v) return std::nullopt;
  const int w = round_->arena.game.succ[*v][ctx.move_index];
  int choice = round_->solution.strategy[w];
  if (choice < 0) choice = 0;
  const auto& res = ctx.table.responses(ctx.region, ctx.move_index)[choice];
  return concretize(ctx.table.game().automaton, res, ctx.state, ctx.table.chain(ctx.region));
}

void CounterAdversary::observe(const MoveTable& table, int region, bool tick, bool blame) {
  state_ = round_->condition.step(state_, table.graph().vertices[region], tick, blame);
}

Simulation simulate(const MoveTable& table, const RegionStrategy& strategy, Adversary& adversary,
                    const Rational& horizon, std::optional<ConcreteState> start, std::size_t max_steps) {
  const TimedAutomaton& ta = table.game().automaton;
  const RegionGraph& graph = table.graph();
  Simulation sim;
  sim.run.states.push_back(start ? *start : initial_state(ta));
  auto region_id = [&](const ConcreteState& s) {
    const auto id = graph.find(StateRegion{s.location, region_of(s.valuation, graph.bounds)});
    if (!id) throw std::logic_error("simulation left the region graph");
    return *id;
  };
  int region = region_id(sim.run.states.back());
  adversary.start(table, region);
  StrategyMemory memory = strategy.initial();
  for (std::size_t step = 0; step < max_steps; ++step) {
    const ConcreteState& state = sim.run.states.back();
    if (state.valuation[kGamma] >= horizon) {
      sim.reached_horizon = true;
      break;
    }
    const AbstractMove am = strategy.move(memory, region);
    const auto& moves = table.moves(region);
    const auto it = std::find(moves.begin(), moves.end(), am);
    if (it == moves.end()) throw std::logic_error("strategy proposed a move outside the arena");
    const Move p1 = realize_move(ta, am, state, table.chain(region));
    const ResponseContext ctx{table, state, region, static_cast<int>(it - moves.begin()), p1};
    const std::optional<Move> p2 = adversary.respond(ctx);
    const bool p2_fires = p2 && p2->delay <= p1.delay;
    ConcreteState next = apply_move(ta, state, p2_fires ? *p2 : p1);
    const bool tick = floor_int(next.valuation[kGamma]) > floor_int(state.valuation[kGamma]);

    sim.memory.push_back(memory);
    sim.layers.push_back(memory.layer);
    memory = strategy.update(memory, region);
    sim.run.moves.push_back(p2_fires ? *p2 : p1);
    sim.run.p1_blamed.push_back(!p2_fires);
    sim.ticks.push_back(tick);
    sim.run.states.push_back(std::move(next));
    region = region_id(sim.run.states.back());
    adversary.observe(table, region, tick, !p2_fires);
  }
  if (!sim.reached_horizon && sim.run.states.back().valuation[kGamma] >= horizon) sim.reached_horizon = true;
  return sim;
}

}  // namespace twin
