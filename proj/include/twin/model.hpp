#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twin {

// Clock 0 is always the global clock; it is never reset.
inline constexpr int kGamma = 0;
inline constexpr std::string_view kGammaName = "gamma";
inline constexpr int kMaxClocks = 32;

enum class Rel { Lt, Le, Ge, Gt };

struct Atom {
  int clock = 0;
  Rel rel = Rel::Le;
  std::int64_t bound = 0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Conjunction of atoms; no atoms means true.
struct ClockConstraint {
  std::vector<Atom> atoms;
  bool is_true() const { return atoms.empty(); }
  friend bool operator==(const ClockConstraint&, const ClockConstraint&) = default;
};

struct Location {
  std::string name;
  ClockConstraint invariant;
  // False for names that were only referenced, never declared.
  bool declared = true;
};

using ClockSet = std::uint32_t;

struct Edge {
  int source = 0;
  int target = 0;
  ClockConstraint guard;
  int action = 0;
  ClockSet resets = 0;
};

struct TimedAutomaton {
  std::vector<std::string> clocks{std::string(kGammaName)};
  std::vector<Location> locations;
  std::vector<std::string> actions;
  std::vector<Edge> edges;
  int initial = 0;

  int clock_count() const { return static_cast<int>(clocks.size()); }
  int location_count() const { return static_cast<int>(locations.size()); }
  std::optional<int> find_clock(std::string_view name) const;
  std::optional<int> find_location(std::string_view name) const;
  std::optional<int> find_action(std::string_view name) const;

  int add_clock(std::string_view name);
  int add_location(std::string_view name, ClockConstraint invariant = {});
  int add_action(std::string_view name);
  void add_edge(int source, int target, ClockConstraint guard, int action, ClockSet resets);
};

struct PriorityFunction {
  int dimensions = 1;
  int count = 1;  // D
  std::vector<std::vector<int>> table;  // location -> K priorities

  int at(int location, int k) const { return table[location][k]; }
};

// Action ids owned by each player.
struct PlayerPartition {
  std::vector<int> p1_actions;
  std::vector<int> p2_actions;
};

struct TimedGame {
  TimedAutomaton automaton;
  std::vector<std::uint8_t> owner;  // per action: 1 or 2

  bool p1_owns(int action) const { return owner[action] == 1; }
};

TimedGame make_game(const TimedAutomaton& automaton, const PlayerPartition& partition);
// Every action belongs to player 1.
TimedGame make_game(const TimedAutomaton& automaton);

struct Violation {
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const TimedAutomaton& automaton, const PriorityFunction& priorities,
                                const std::optional<PlayerPartition>& partition = std::nullopt);

using ClockBounds = std::vector<int>;

std::int64_t max_constant(const TimedAutomaton& automaton, std::string_view clock);
std::int64_t max_constant(const TimedAutomaton& automaton, int clock);
ClockBounds clock_bounds(const TimedAutomaton& automaton);

bool satisfiable(const ClockConstraint& a, const ClockConstraint& b);
std::string describe(const ClockConstraint& g, const TimedAutomaton& automaton);
const char* rel_symbol(Rel rel);

}  // namespace twin
