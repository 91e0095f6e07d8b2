#include "twin/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace twin {

MealyStrategy build_mealy(const Arena& arena, const ParitySolution& solution, const ExpandedDpa& condition,
                          const MoveTable& table) {
  const RegionGraph& graph = table.graph();
  const TimedAutomaton& ta = table.game().automaton;
  const Dba& base = condition.base();
  const int D = condition.base_priorities();
  const int R = graph.size();

  MealyStrategy m;
  m.q_count = base.state_count();
  m.priorities = D;
  m.initial_memory = (1 * m.q_count + base.initial()) * D + (D - 1);
  for (const auto& r : graph.vertices) m.regions.push_back(encode(r, ta));
  const std::size_t slots = static_cast<std::size_t>(m.memory_count()) * R;
  m.next.resize(slots);
  m.moves.resize(slots);
  m.wins.resize(slots);

  std::vector<LetterClass> letters;
  for (const auto& r : graph.vertices) letters.push_back(base.classify(r));

  for (int mem = 0; mem < m.memory_count(); ++mem) {
    const int h_prev = mem % D;
    const int q = (mem / D) % m.q_count;
    const bool integral = mem / D / m.q_count == 1;
    for (int r = 0; r < R; ++r) {
      const std::size_t slot = static_cast<std::size_t>(mem) * R + r;
      const bool now_integral = gamma_integral(graph.vertices[r]);
      const bool tick = !integral && now_integral;
      const int q2 = base.step(q, letters[r]);
      const int h = std::min(h_prev, base.priority(q2));
      m.next[slot] = ((now_integral ? 1 : 0) * m.q_count + q2) * D + (tick ? D - 1 : h);

      const auto vertex = arena.p1_vertex(r, condition.encode({q2, tick, false, h}));
      if (vertex && solution.wins(Player::P1, *vertex)) {
        m.moves[slot] = table.moves(r)[solution.strategy[*vertex]];
        m.wins[slot] = true;
      } else {
        m.moves[slot] = table.moves(r).back();
        m.wins[slot] = false;
      }
    }
  }
  return m;
}

bool LayeredMealy::switches(const StrategyMemory& m, int region) const {
  const int e = earliest[region];
  return e >= 0 && e < m.layer;
}

StrategyMemory LayeredMealy::initial() const {
  const int top = static_cast<int>(layers.size()) - 1;
  return {layers[top].initial_memory, top};
}

AbstractMove LayeredMealy::move(const StrategyMemory& m, int region) const {
  if (switches(m, region)) {
    const auto& layer = layers[earliest[region]];
    return layer.move(layer.initial(), region);
  }
  return layers[m.layer].move(m, region);
}

StrategyMemory LayeredMealy::update(const StrategyMemory& m, int region) const {
  if (switches(m, region)) {
    const int e = earliest[region];
    return {layers[e].update(layers[e].initial(), region).base, e};
  }
  return {layers[m.layer].update(m, region).base, m.layer};
}

bool LayeredMealy::winning(const StrategyMemory& m, int region) const {
  if (switches(m, region)) {
    const auto& layer = layers[earliest[region]];
    return layer.winning(layer.initial(), region);
  }
  return layers[m.layer].winning(m, region);
}

LayeredMealy layer_mealy(const std::vector<std::pair<std::vector<bool>, MealyStrategy>>& input) {
  if (input.empty()) throw std::invalid_argument("no layers");
  LayeredMealy out;
  const std::size_t R = input.front().first.size();
  out.earliest.assign(R, -1);
  std::vector<bool> seen(R, false);
  for (const auto& [set, machine] : input) {
    bool grows = false;
    for (std::size_t r = 0; r < R; ++r)
      if (set[r] && !seen[r]) grows = true;
    if (!grows && !out.layers.empty()) continue;
    const int k = static_cast<int>(out.layers.size());
    for (std::size_t r = 0; r < R; ++r)
      if (set[r] && !seen[r]) {
        seen[r] = true;
        out.earliest[r] = k;
      }
    out.layers.push_back(machine);
  }
  return out;
}

}  // namespace twin
