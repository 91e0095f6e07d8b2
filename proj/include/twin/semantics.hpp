#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twin/format.hpp"
#include "twin/model.hpp"
#include "twin/rational.hpp"
#include "twin/region.hpp"

namespace twin {

inline constexpr int kNoAction = -1;

struct ConcreteState {
  int location = 0;
  Valuation valuation;
  friend bool operator==(const ConcreteState&, const ConcreteState&) = default;
};

struct Move {
  Rational delay;
  int action = kNoAction;
};

// states.size() == moves.size() + 1. p1_blamed is filled by game simulation only.
struct Run {
  std::vector<ConcreteState> states;
  std::vector<Move> moves;
  std::vector<bool> p1_blamed;

  const Rational& time(std::size_t i) const { return states[i].valuation[kGamma]; }
};

class DisabledMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Deadlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool satisfies(const Valuation& v, const ClockConstraint& g);
ConcreteState initial_state(const TimedAutomaton& automaton);
ConcreteState apply_move(const TimedAutomaton& automaton, const ConcreteState& state, const Move& move);
Valuation delayed(const Valuation& v, const Rational& delay);

enum class WindowKind { Closed, Open, Broken };

struct WindowStatus {
  WindowKind kind = WindowKind::Open;
  std::size_t index = 0;  // closing index for Closed, breaking index for Broken, last index for Open
  int min_priority = 0;
  Rational elapsed;
};

WindowStatus window_status(const Run& run, const PriorityFunction& priorities, int k,
                           std::size_t start, std::int64_t lambda);

enum class DirectKind { ViolatedAt, PendingFrom, ClearSoFar };

struct DirectVerdict {
  DirectKind kind = DirectKind::ClearSoFar;
  std::size_t index = 0;
};

// One verdict per dimension; linear in the run length times D.
std::vector<DirectVerdict> check_prefix_direct(const Run& run, const PriorityFunction& priorities,
                                               std::int64_t lambda);

// Delay from state (whose region is chain[0]) into chain[position].
Rational delay_to_position(const Valuation& v, const std::vector<ClockRegion>& chain,
                           std::size_t position);

std::vector<Run> sample_runs(const TimedAutomaton& automaton, std::size_t count, const Rational& horizon,
                             std::uint64_t seed);
std::vector<Run> sample_runs(const TimedAutomaton& automaton, const RegionGraph& graph, std::size_t count,
                             const Rational& horizon, std::uint64_t seed);

// Replays a region-graph vertex path from a state lying in its first vertex.
void extend_along(const TimedAutomaton& automaton, const RegionGraph& graph, Run& run,
                  const std::vector<int>& path);

// Vertices from which some time-divergent path exists.
std::vector<bool> live_vertices(const RegionGraph& graph);

}  // namespace twin
