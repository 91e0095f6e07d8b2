#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twin/model.hpp"
#include "twin/rational.hpp"

namespace twin {

inline constexpr int kAbove = -1;

// interval[x] is k (meaning floor(x) = k <= c_x) or kAbove (x > c_x).
// blocks[0] holds the clocks with zero fractional part (possibly none);
// blocks[1..] are non-empty and ordered by increasing fractional part.
// Tracked clocks are the bounded ones plus gamma.
struct ClockRegion {
  std::vector<int> interval;
  std::vector<ClockSet> blocks{0};

  friend bool operator==(const ClockRegion&, const ClockRegion&) = default;
};

struct StateRegion {
  int location = 0;
  ClockRegion clocks;

  friend bool operator==(const StateRegion&, const StateRegion&) = default;
};

std::size_t hash_value(const ClockRegion& r);
std::size_t hash_value(const StateRegion& r);

}  // namespace twin

template <>
struct std::hash<twin::ClockRegion> {
  std::size_t operator()(const twin::ClockRegion& r) const noexcept { return twin::hash_value(r); }
};
template <>
struct std::hash<twin::StateRegion> {
  std::size_t operator()(const twin::StateRegion& r) const noexcept { return twin::hash_value(r); }
};

namespace twin {

using RegionSet = std::unordered_set<StateRegion>;

class GranularityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ClockRegion region_of(const Valuation& v, const ClockBounds& bounds);
StateRegion region_of(const TimedAutomaton& automaton, int location, const Valuation& v);

bool satisfies(const ClockRegion& region, const ClockConstraint& g, const ClockBounds& bounds);
ClockRegion apply_reset(const ClockRegion& region, ClockSet resets);
ClockRegion delay_successor(const ClockRegion& region, const ClockBounds& bounds);
bool gamma_integral(const ClockRegion& region);
inline bool gamma_integral(const StateRegion& r) { return gamma_integral(r.clocks); }
bool is_tracked(const ClockRegion& region, int clock);
bool is_integral(const ClockRegion& region, int clock);

struct DelayChain {
  std::vector<ClockRegion> regions;
  std::optional<std::size_t> cycle_start;
};

DelayChain delay_chain(const ClockRegion& region, const ClockConstraint& invariant,
                       const ClockBounds& bounds);

// A valuation inside the region; fractional blocks sit at i/(n+1).
Valuation representative(const ClockRegion& region, const ClockBounds& bounds);

// Canonical text, e.g. "l0|gamma:0 / x:0+|frac:(0:{gamma})(1:{x})".
std::string encode(const StateRegion& region, const TimedAutomaton& automaton);
StateRegion decode_region(std::string_view text, const TimedAutomaton& automaton);

enum class StepKind { Delay, Discrete };

struct GraphEdge {
  int source = 0;
  int target = 0;
  int edge = -1;  // automaton edge, -1 for a delay step
  StepKind kind() const { return edge < 0 ? StepKind::Delay : StepKind::Discrete; }
};

struct RegionGraph {
  std::vector<StateRegion> vertices;
  std::unordered_map<StateRegion, int> index;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> out;  // edge ids per vertex
  int initial = 0;
  ClockBounds bounds;

  int size() const { return static_cast<int>(vertices.size()); }
  std::optional<int> find(const StateRegion& r) const;
};

RegionGraph build_region_graph(const TimedAutomaton& automaton);

// Number of clock regions of the automaton, reachable or not.
std::uint64_t count_clock_regions(const TimedAutomaton& automaton);
// |C|! * 2^|C| * prod(2 c_x + 1)
std::uint64_t clock_region_bound(const TimedAutomaton& automaton);

}  // namespace twin
