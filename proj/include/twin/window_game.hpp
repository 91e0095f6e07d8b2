#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "twin/arena.hpp"
#include "twin/objective.hpp"
#include "twin/parity.hpp"
#include "twin/strategy.hpp"
#include "twin/verification.hpp"

namespace twin {

std::uint64_t lambda_bound(const TimedAutomaton& automaton, const PriorityFunction& priorities);

struct RequestResponseSolution {
  std::vector<bool> winning;  // per region-graph vertex, by fresh entry
  ExpandedDpa condition;
  Arena arena;
  ParitySolution solution;
  MealyStrategy strategy;
};

RequestResponseSolution solve_request_response(const MoveTable& moves, const std::vector<ChainFamily>& families);

struct GameSolution {
  Mode mode = Mode::Direct;
  std::vector<bool> winning;  // per region-graph vertex
  std::uint64_t lambda = 0;
  std::vector<std::vector<bool>> layers;  // W^1, W^2, ... as computed
  std::size_t iterations = 0;
  std::vector<ChainFamily> final_families;
  std::shared_ptr<const RequestResponseSolution> last_round;
  std::shared_ptr<const RegionStrategy> strategy;

  RegionSet winning_regions(const RegionGraph& graph) const;
};

GameSolution solve_direct(const MoveTable& moves, const PriorityFunction& priorities);
GameSolution solve_indirect(const MoveTable& moves, const PriorityFunction& priorities);

}  // namespace twin
