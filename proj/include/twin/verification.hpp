#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twin/format.hpp"
#include "twin/region.hpp"
#include "twin/semantics.hpp"

namespace twin {

enum class Mode { Direct, Indirect };

// Vertex ids refer to the region graph the witness was computed on.
struct ViolationWitness {
  int dimension = 0;
  bool indirect = false;
  int anchor = 0;
  std::vector<int> prefix;  // initial ... anchor ... cycle entry
  std::size_t anchor_index = 0;
  std::vector<int> cycle;  // entry ... entry
  std::size_t integral_marker = 0;
  std::size_t fractional_marker = 0;
  std::vector<int> return_path;  // cycle entry ... anchor
};

struct Verdict {
  std::vector<std::optional<ViolationWitness>> dimensions;
  bool holds() const;
};

using RegionFilter = std::function<bool(const StateRegion&)>;

// Path from start through the targets in order, keeping the running minimum
// of dimension k odd on every prefix.
std::optional<std::vector<int>> ordered_target_reach(const RegionGraph& graph, const PriorityFunction& pf,
                                                     int k, int start, const std::vector<RegionFilter>& targets);

std::optional<ViolationWitness> find_direct_violation(const RegionGraph& graph, const PriorityFunction& pf, int k);
std::optional<ViolationWitness> find_indirect_violation(const RegionGraph& graph, const PriorityFunction& pf,
                                                        int k);

Verdict verify(const ModelBundle& bundle, Mode mode);
Verdict verify(const ModelBundle& bundle, const RegionGraph& graph, Mode mode);

struct WitnessRun {
  Run run;
  // Per stage: index of the anchor state and of the state closing the last cycle.
  std::vector<std::size_t> stage_starts;
  std::vector<std::size_t> stage_ends;
};

WitnessRun realize_witness(const ModelBundle& bundle, const RegionGraph& graph, const ViolationWitness& witness,
                           std::size_t stages);

}  // namespace twin
