#include "twin/objective.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twin {

bool RegionPredicate::contains(const StateRegion& r) const {
  if (exclude.count(r)) return false;
  if (include.count(r)) return true;
  return r.location < static_cast<int>(locations.size()) && locations[r.location];
}

ChainFamily derive_chain_family(const PriorityFunction& pf, int k) {
  const int n = static_cast<int>(pf.table.size());
  ChainFamily family;
  for (int j = pf.count - 1; j >= 0; --j) {
    if (j % 2 == 0) continue;
    RequestResponse pair;
    pair.request.locations.assign(n, false);
    pair.response.locations.assign(n, false);
    for (int l = 0; l < n; ++l) {
      const int p = pf.at(l, k);
      pair.request.locations[l] = p == j;
      pair.response.locations[l] = p % 2 == 0 && p <= j;
    }
    // a pair without requests never constrains a word
    if (std::find(pair.request.locations.begin(), pair.request.locations.end(), true) == pair.request.locations.end())
      continue;
    family.pairs.push_back(std::move(pair));
  }
  return family;
}

ChainFamily absorb_winning_regions(const ChainFamily& family, const RegionSet& regions) {
  ChainFamily out = family;
  for (auto& pair : out.pairs) {
    for (const auto& r : regions) {
      pair.request.include.erase(r);
      pair.request.exclude.insert(r);
      pair.response.exclude.erase(r);
      pair.response.include.insert(r);
    }
  }
  return out;
}

int chain_step(int q, std::uint64_t requests, std::uint64_t responses) {
  if (q != 0 && (responses >> (q - 1) & 1U)) return 0;
  const int top = requests == 0 ? 0 : 64 - std::countl_zero(requests);
  return std::max(q, top);
}

Dba::Dba(std::vector<ChainFamily> components) : components_(std::move(components)) {
  if (components_.empty()) components_.emplace_back();
  for (const auto& c : components_) {
    if (c.size() >= 63) throw std::invalid_argument("chain family too long");
    state_count_ *= c.size() + 1;
  }
  if (components_.size() > 1) state_count_ *= static_cast<int>(components_.size());
}

std::vector<int> Dba::decode(int state) const {
  const int n = static_cast<int>(components_.size());
  int rest = n > 1 ? state / n : state;
  std::vector<int> q(n);
  for (int c = 0; c < n; ++c) {
    const int radix = components_[c].size() + 1;
    q[c] = rest % radix;
    rest /= radix;
  }
  return q;
}

int Dba::active(int state) const {
  const int n = static_cast<int>(components_.size());
  return n > 1 ? state % n : 0;
}

bool Dba::accepting(int state) const { return active(state) == 0 && decode(state)[0] == 0; }

LetterClass Dba::classify(const StateRegion& letter) const {
  LetterClass out;
  for (const auto& c : components_) {
    std::uint64_t rq = 0, rp = 0;
    for (int i = 0; i < c.size(); ++i) {
      if (c.pairs[i].request.contains(letter)) rq |= std::uint64_t{1} << i;
      if (c.pairs[i].response.contains(letter)) rp |= std::uint64_t{1} << i;
    }
    out.requests.push_back(rq);
    out.responses.push_back(rp);
  }
  return out;
}

int Dba::step(int state, const LetterClass& letter) const {
  const int n = static_cast<int>(components_.size());
  const std::vector<int> q = decode(state);
  int i = active(state);
  if (n > 1 && q[i] == 0) i = (i + 1) % n;
  int code = 0;
  for (int c = n - 1; c >= 0; --c)
    code = code * (components_[c].size() + 1) + chain_step(q[c], letter.requests[c], letter.responses[c]);
  return n > 1 ? code * n + i : code;
}

Dba chain_dba(const ChainFamily& family) { return Dba({family}); }

Dba intersect_dbas(const std::vector<Dba>& machines) {
  if (machines.size() == 1) return machines.front();
  std::vector<ChainFamily> all;
  for (const auto& m : machines)
    for (const auto& c : m.components()) all.push_back(c);
  return Dba(std::move(all));
}

ExpandedDpa::ExpandedDpa(Dba base) : base_(std::move(base)) {}

ExpandedDpa::Fields ExpandedDpa::decode(int state) const {
  Fields f;
  f.h = state % kBasePriorities;
  state /= kBasePriorities;
  f.blame = state % 2;
  state /= 2;
  f.tick = state % 2;
  f.q = state / 2;
  return f;
}

int ExpandedDpa::priority(int state) const {
  const Fields f = decode(state);
  if (f.tick) return f.h;
  return f.blame ? d_prime() : d_prime() + 1;
}

int ExpandedDpa::step(int state, const LetterClass& letter, bool tick, bool blame) const {
  const Fields f = decode(state);
  const int q = base_.step(f.q, letter);
  const int p = base_.priority(q);
  return encode({q, tick, blame, f.tick ? p : std::min(f.h, p)});
}

ExpandedDpa expand_condition(const Dba& machine) { return ExpandedDpa(machine); }

}  // namespace twin
