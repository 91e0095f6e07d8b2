#include "twin/window_game.hpp"

#include <stdexcept>

namespace twin {

std::uint64_t lambda_bound(const TimedAutomaton& ta, const PriorityFunction& pf) {
  std::uint64_t weight = 1;
  for (int k = 0; k < pf.dimensions; ++k) weight *= static_cast<std::uint64_t>(pf.count / 2 + 1);
  return 8 * static_cast<std::uint64_t>(ta.location_count()) * count_clock_regions(ta) * weight *
             static_cast<std::uint64_t>(pf.dimensions) +
         3;
}

RegionSet GameSolution::winning_regions(const RegionGraph& graph) const {
  RegionSet out;
  for (int r = 0; r < graph.size(); ++r)
    if (winning[r]) out.insert(graph.vertices[r]);
  return out;
}

RequestResponseSolution solve_request_response(const MoveTable& table, const std::vector<ChainFamily>& families) {
  std::vector<Dba> machines;
  for (const auto& f : families) machines.push_back(chain_dba(f));
  RequestResponseSolution out;
  out.condition = expand_condition(machines.empty() ? chain_dba({}) : intersect_dbas(machines));
  out.arena = build_arena(table, out.condition);
  out.solution = solve_parity(out.arena.game);
  for (int root : out.arena.roots) out.winning.push_back(out.solution.wins(Player::P1, root));
  out.strategy = build_mealy(out.arena, out.solution, out.condition, table);
  return out;
}

namespace {

std::vector<ChainFamily> derive_all(const PriorityFunction& pf) {
  std::vector<ChainFamily> out;
  for (int k = 0; k < pf.dimensions; ++k) out.push_back(derive_chain_family(pf, k));
  return out;
}

}  // namespace

GameSolution solve_direct(const MoveTable& table, const PriorityFunction& pf) {
  GameSolution out;
  out.mode = Mode::Direct;
  out.lambda = lambda_bound(table.game().automaton, pf);
  out.final_families = derive_all(pf);
  auto round = std::make_shared<RequestResponseSolution>(solve_request_response(table, out.final_families));
  out.winning = round->winning;
  out.layers.push_back(out.winning);
  out.iterations = 1;
  out.strategy = std::make_shared<MealyStrategy>(round->strategy);
  out.last_round = std::move(round);
  return out;
}

GameSolution solve_indirect(const MoveTable& table, const PriorityFunction& pf) {
  const RegionGraph& graph = table.graph();
  GameSolution out;
  out.mode = Mode::Indirect;
  out.lambda = lambda_bound(table.game().automaton, pf);
  std::vector<ChainFamily> families = derive_all(pf);
  std::vector<bool> current(graph.size(), false);
  std::vector<std::pair<std::vector<bool>, MealyStrategy>> machines;
  for (;;) {
    auto round = std::make_shared<RequestResponseSolution>(solve_request_response(table, families));
    ++out.iterations;
    bool grew = false;
    for (int r = 0; r < graph.size(); ++r) {
      if (current[r] && !round->winning[r]) throw std::logic_error("winning sets are not monotone");
      if (round->winning[r] && !current[r]) grew = true;
    }
    out.layers.push_back(round->winning);
    machines.emplace_back(round->winning, round->strategy);
    out.final_families = families;
    out.last_round = round;
    if (!grew) break;
    current = round->winning;
    RegionSet absorbed;
    for (int r = 0; r < graph.size(); ++r)
      if (current[r]) absorbed.insert(graph.vertices[r]);
    for (auto& f : families) f = absorb_winning_regions(f, absorbed);
  }
  out.winning = current;
  out.strategy = std::make_shared<LayeredMealy>(layer_mealy(machines));
  return out;
}

}  // namespace twin
