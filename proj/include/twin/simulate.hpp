#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "twin/arena.hpp"
#include "twin/semantics.hpp"
#include "twin/strategy.hpp"
#include "twin/window_game.hpp"

namespace twin {

class Unrealizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// chain must be the move chain of the state's region.
Move realize_move(const TimedAutomaton& automaton, const AbstractMove& move, const ConcreteState& state,
                  const std::vector<ClockRegion>& chain);
Move realize_move(const TimedAutomaton& automaton, const AbstractMove& move, const ConcreteState& state);

// Concrete move P2 would make for a region-level resolution (Pass yields nullopt).
std::optional<Move> concretize(const TimedAutomaton& automaton, const Resolution& resolution,
                               const ConcreteState& state, const std::vector<ClockRegion>& chain);

struct ResponseContext {
  const MoveTable& table;
  const ConcreteState& state;
  int region;
  int move_index;  // index of P1's abstract move in table.moves(region)
  const Move& p1_move;
};

// nullopt: let P1's move fire.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual void start(const MoveTable&, int /*region*/) {}
  virtual std::optional<Move> respond(const ResponseContext& ctx) = 0;
  virtual void observe(const MoveTable&, int /*region*/, bool /*tick*/, bool /*blame*/) {}
};

// Uniform over region-level resolutions.
class RandomAdversary : public Adversary {
 public:
  explicit RandomAdversary(std::uint64_t seed) : rng_(seed) {}
  std::optional<Move> respond(const ResponseContext& ctx) override;

 private:
  std::mt19937_64 rng_;
};

// Plays the given P2 moves in order, then passes forever.
class ScriptAdversary : public Adversary {
 public:
  explicit ScriptAdversary(std::vector<std::optional<Move>> script) : script_(std::move(script)) {}
  std::optional<Move> respond(const ResponseContext& ctx) override;

 private:
  std::vector<std::optional<Move>> script_;
  std::size_t next_ = 0;
};

// Follows P2's arena strategy of a request-response round, tracking the expanded state.
class CounterAdversary : public Adversary {
 public:
  explicit CounterAdversary(std::shared_ptr<const RequestResponseSolution> round) : round_(std::move(round)) {}
  void start(const MoveTable& table, int region) override;
  std::optional<Move> respond(const ResponseContext& ctx) override;
  void observe(const MoveTable& table, int region, bool tick, bool blame) override;

 private:
  std::shared_ptr<const RequestResponseSolution> round_;
  int state_ = 0;
};

struct Simulation {
  Run run;
  std::vector<bool> ticks;          // per move: floor(gamma) increased
  std::vector<int> layers;          // strategy layer before each move
  std::vector<StrategyMemory> memory;  // memory before each move
  bool reached_horizon = false;
};

Simulation simulate(const MoveTable& table, const RegionStrategy& strategy, Adversary& adversary,
                    const Rational& horizon, std::optional<ConcreteState> start = std::nullopt,
                    std::size_t max_steps = 200000);

}  // namespace twin
