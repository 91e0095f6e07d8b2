#pragma once

#include <string>
#include <vector>

#include "twin/arena.hpp"
#include "twin/objective.hpp"
#include "twin/parity.hpp"

namespace twin {

struct StrategyMemory {
  int base = 0;
  int layer = 0;
  friend bool operator==(const StrategyMemory&, const StrategyMemory&) = default;
};

// Regions are region-graph vertex ids.
class RegionStrategy {
 public:
  virtual ~RegionStrategy() = default;
  virtual StrategyMemory initial() const = 0;
  virtual AbstractMove move(const StrategyMemory& memory, int region) const = 0;
  virtual StrategyMemory update(const StrategyMemory& memory, int region) const = 0;
  virtual bool winning(const StrategyMemory& memory, int region) const = 0;
};

// Memory (int, q, h) encoded as (int * q_count + q) * priorities + h; h = priorities-1
// after an inferred tick.
class MealyStrategy : public RegionStrategy {
 public:
  int q_count = 1;
  int priorities = 2;
  int initial_memory = 0;
  std::vector<std::string> regions;  // canonical encodings, indexed by region id
  std::vector<int> next;             // [memory * regions + region]
  std::vector<AbstractMove> moves;
  std::vector<bool> wins;

  int memory_count() const { return 2 * q_count * priorities; }
  int region_count() const { return static_cast<int>(regions.size()); }

  StrategyMemory initial() const override { return {initial_memory, 0}; }
  AbstractMove move(const StrategyMemory& m, int region) const override { return moves[slot(m.base, region)]; }
  StrategyMemory update(const StrategyMemory& m, int region) const override {
    return {next[slot(m.base, region)], m.layer};
  }
  bool winning(const StrategyMemory& m, int region) const override { return wins[slot(m.base, region)]; }

 private:
  std::size_t slot(int memory, int region) const {
    return static_cast<std::size_t>(memory) * regions.size() + static_cast<std::size_t>(region);
  }
};

class LayeredMealy : public RegionStrategy {
 public:
  std::vector<MealyStrategy> layers;
  std::vector<int> earliest;  // per region: first layer containing it, -1 if none

  StrategyMemory initial() const override;
  AbstractMove move(const StrategyMemory& m, int region) const override;
  StrategyMemory update(const StrategyMemory& m, int region) const override;
  bool winning(const StrategyMemory& m, int region) const override;

 private:
  bool switches(const StrategyMemory& m, int region) const;
};

MealyStrategy build_mealy(const Arena& arena, const ParitySolution& solution, const ExpandedDpa& condition,
                          const MoveTable& moves);

// layers[k] = (W^{k+1} per region, machine computed for it); only strictly growing layers are kept.
LayeredMealy layer_mealy(const std::vector<std::pair<std::vector<bool>, MealyStrategy>>& layers);

}  // namespace twin
