#pragma once

#include <cstdint>
#include <vector>

#include "twin/model.hpp"
#include "twin/region.hpp"

namespace twin {

// Locations plus explicit region overrides; exclusions win over inclusions.
struct RegionPredicate {
  std::vector<bool> locations;
  RegionSet include;
  RegionSet exclude;

  bool contains(const StateRegion& r) const;
};

struct RequestResponse {
  RegionPredicate request;
  RegionPredicate response;
};

// pairs[0] is pair 1 (largest response set).
struct ChainFamily {
  std::vector<RequestResponse> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

ChainFamily derive_chain_family(const PriorityFunction& priorities, int k);
ChainFamily absorb_winning_regions(const ChainFamily& family, const RegionSet& regions);

// Bit i-1 set iff the letter lies in pair i's set.
struct LetterClass {
  std::vector<std::uint64_t> requests;   // per component
  std::vector<std::uint64_t> responses;  // per component
};

// Generalized product of chain DBAs; a single component is the plain chain DBA.
class Dba {
 public:
  Dba() = default;
  explicit Dba(std::vector<ChainFamily> components);

  const std::vector<ChainFamily>& components() const { return components_; }
  int state_count() const { return state_count_; }
  int initial() const { return 0; }
  bool accepting(int state) const;
  int priority(int state) const { return accepting(state) ? 0 : 1; }

  LetterClass classify(const StateRegion& letter) const;
  int step(int state, const LetterClass& letter) const;
  int step(int state, const StateRegion& letter) const { return step(state, classify(letter)); }

  // Per-component chain states and the active index.
  std::vector<int> decode(int state) const;
  int active(int state) const;

 private:
  std::vector<ChainFamily> components_;
  int state_count_ = 1;
};

Dba chain_dba(const ChainFamily& family);
Dba intersect_dbas(const std::vector<Dba>& machines);

// Chain DBA transition on a single component.
int chain_step(int q, std::uint64_t requests, std::uint64_t responses);

class ExpandedDpa {
 public:
  struct Fields {
    int q = 0;
    bool tick = false;
    bool blame = false;
    int h = 0;
  };

  ExpandedDpa() = default;
  explicit ExpandedDpa(Dba base);

  const Dba& base() const { return base_; }
  int base_priorities() const { return kBasePriorities; }
  int d_prime() const { return kBasePriorities % 2 == 1 ? kBasePriorities : kBasePriorities - 1; }
  int state_count() const { return base_.state_count() * 4 * kBasePriorities; }
  int initial() const { return encode({base_.initial(), false, false, kBasePriorities - 1}); }

  int encode(const Fields& f) const { return ((f.q * 2 + f.tick) * 2 + f.blame) * kBasePriorities + f.h; }
  Fields decode(int state) const;
  int priority(int state) const;
  int step(int state, const LetterClass& letter, bool tick, bool blame) const;
  int step(int state, const StateRegion& letter, bool tick, bool blame) const {
    return step(state, base_.classify(letter), tick, blame);
  }

 private:
  static constexpr int kBasePriorities = 2;
  Dba base_;
};

ExpandedDpa expand_condition(const Dba& machine);

}  // namespace twin
