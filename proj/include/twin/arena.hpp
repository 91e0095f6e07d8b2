#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "twin/model.hpp"
#include "twin/objective.hpp"
#include "twin/parity.hpp"
#include "twin/region.hpp"

namespace twin {

// Delay into position `target` of the region's move chain, then fire `edge` (-1: pure delay).
struct AbstractMove {
  int target = 0;
  int edge = -1;
  friend bool operator==(const AbstractMove&, const AbstractMove&) = default;
};

struct Resolution {
  enum class Kind { Pass, Preempt };
  Kind kind = Kind::Pass;
  int edge = -1;     // P2 edge for Preempt, -1 for a P2 delay
  int position = 0;  // chain position where the move fires
  StateRegion successor;
  bool tick = false;
  bool blame = false;
};

// Delay chain cut at the first gamma-integral region after the start; a
// gamma-integral start excludes that region.
std::vector<ClockRegion> move_chain(const TimedAutomaton& automaton, const StateRegion& region,
                                    const ClockBounds& bounds);

std::vector<AbstractMove> p1_abstract_moves(const TimedGame& game, const StateRegion& region);
std::vector<Resolution> p2_responses(const TimedGame& game, const StateRegion& region, const AbstractMove& pending);

// Cached per-region move enumeration over a region graph.
class MoveTable {
 public:
  MoveTable(const TimedGame& game, const RegionGraph& graph);

  const std::vector<ClockRegion>& chain(int region) const;
  const std::vector<AbstractMove>& moves(int region) const;
  const std::vector<Resolution>& responses(int region, int move) const;
  // Region-graph vertex of a resolution's successor.
  int successor(int region, int move, int response) const;

  const TimedGame& game() const { return game_; }
  const RegionGraph& graph() const { return graph_; }

 private:
  void fill(int region) const;

  const TimedGame& game_;
  const RegionGraph& graph_;
  mutable std::vector<bool> ready_;
  mutable std::vector<std::vector<ClockRegion>> chains_;
  mutable std::vector<std::vector<AbstractMove>> moves_;
  mutable std::vector<std::vector<std::vector<Resolution>>> responses_;
  mutable std::vector<std::vector<std::vector<int>>> successors_;
};

struct ArenaVertex {
  int region = 0;  // region-graph vertex
  int state = 0;   // expanded condition state
  int move = -1;   // pending move for P2 vertices
};

// P1 vertices branch over MoveTable::moves, P2 vertices over MoveTable::responses,
// so edge indices coincide with move and response indices.
struct Arena {
  ParityGame game;
  std::vector<ArenaVertex> vertices;
  std::vector<int> roots;  // fresh-entry P1 vertex per region-graph vertex
  std::unordered_map<long long, int> p1_index;

  std::optional<int> p1_vertex(int region, int state) const;
};

// Expanded state reached by entering a region with tick and blame unset.
int fresh_entry(const ExpandedDpa& condition, const StateRegion& region);

Arena build_arena(const MoveTable& moves, const ExpandedDpa& condition);

std::string export_arena_dot(const Arena& arena, const TimedAutomaton& automaton, const RegionGraph& graph);

}  // namespace twin
