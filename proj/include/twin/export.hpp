#pragma once

#include <memory>

#include <json.hpp>

#include "twin/objective.hpp"
#include "twin/semantics.hpp"
#include "twin/strategy.hpp"
#include "twin/verification.hpp"
#include "twin/window_game.hpp"

namespace twin {

using Json = nlohmann::json;

Json witness_to_json(const ViolationWitness& w, const RegionGraph& graph, const TimedAutomaton& automaton);
Json verdict_to_json(const Verdict& verdict, Mode mode, const RegionGraph& graph, const TimedAutomaton& automaton);
Json solution_to_json(const GameSolution& solution, const RegionGraph& graph, const TimedAutomaton& automaton);

Json strategy_to_json(const RegionStrategy& strategy);
// Region keys are matched against the graph; throws std::runtime_error on mismatch.
std::shared_ptr<RegionStrategy> strategy_from_json(const Json& j, const RegionGraph& graph,
                                                   const TimedAutomaton& automaton);

Json run_to_json(const Run& run, const TimedAutomaton& automaton);
Run run_from_json(const Json& j, const TimedAutomaton& automaton);

// Transition table restricted to the graph's regions as letters.
Json dba_to_json(const Dba& machine, const RegionGraph& graph, const TimedAutomaton& automaton);

}  // namespace twin
