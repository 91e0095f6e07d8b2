#include <algorithm>

#include "twin/semantics.hpp"

namespace twin {

bool satisfies(const Valuation& v, const ClockConstraint& g) {
  for (const Atom& a : g.atoms) {
    const Rational& x = v[a.clock];
    bool ok;
    switch (a.rel) {
      case Rel::Lt: ok = x < a.bound; break;
      case Rel::Le: ok = x <= a.bound; break;
      case Rel::Ge: ok = x >= a.bound; break;
      default: ok = x > a.bound; break;
    }
    if (!ok) return false;
  }
  return true;
}

ConcreteState initial_state(const TimedAutomaton& ta) {
  return ConcreteState{ta.initial, Valuation(ta.clock_count(), Rational(0))};
}

Valuation delayed(const Valuation& v, const Rational& delay) {
  Valuation w = v;
  for (auto& x : w) x += delay;
  return w;
}

ConcreteState apply_move(const TimedAutomaton& ta, const ConcreteState& s, const Move& m) {
  if (m.delay < 0) throw DisabledMove("negative delay");
  const Location& here = ta.locations.at(s.location);
  if (!satisfies(s.valuation, here.invariant))
    throw DisabledMove("state violates invariant " + describe(here.invariant, ta));
  Valuation v = delayed(s.valuation, m.delay);
  if (!satisfies(v, here.invariant))
    throw DisabledMove("invariant " + describe(here.invariant, ta) + " violated during delay");
  if (m.action == kNoAction) return ConcreteState{s.location, std::move(v)};
  if (m.action < 0 || m.action >= static_cast<int>(ta.actions.size()))
    throw DisabledMove("unknown action");

  const Edge* chosen = nullptr;
  bool any = false;
  for (const Edge& e : ta.edges) {
    if (e.source != s.location || e.action != m.action) continue;
    any = true;
    if (!satisfies(v, e.guard)) continue;
    if (chosen) throw DisabledMove("action " + ta.actions[m.action] + " is nondeterministic here");
    chosen = &e;
  }
  if (!any)
    throw DisabledMove("action " + ta.actions[m.action] + " has no edge from " + here.name);
  if (!chosen) throw DisabledMove("guard of action " + ta.actions[m.action] + " not satisfied");
  for (int x = 0; x < ta.clock_count(); ++x)
    if (chosen->resets & (ClockSet{1} << x)) v[x] = 0;
  const Location& there = ta.locations[chosen->target];
  if (!satisfies(v, there.invariant))
    throw DisabledMove("invariant " + describe(there.invariant, ta) + " of " + there.name +
                       " violated after reset");
  return ConcreteState{chosen->target, std::move(v)};
}

namespace {

// Time until the first positive-fraction tracked clock reaches an integer; 1 if none.
Rational next_event(const Valuation& w, const ClockRegion& r) {
  Rational best = 1;
  for (std::size_t i = 1; i < r.blocks.size(); ++i)
    for (int x = 0; x < static_cast<int>(w.size()); ++x)
      if (r.blocks[i] & (ClockSet{1} << x)) best = std::min(best, Rational(1 - frac(w[x])));
  return best;
}

}  // namespace

Rational delay_to_position(const Valuation& v, const std::vector<ClockRegion>& chain,
                           std::size_t position) {
  if (position >= chain.size()) throw std::out_of_range("delay target beyond the chain");
  Rational total = 0;
  Valuation w = v;
  std::size_t k = 0;
  while (k < position) {
    const ClockRegion& cur = chain[k];
    const Rational d = next_event(w, cur);
    if (cur.blocks[0] != 0) {
      if (k + 1 == position) {
        Rational eps;
        if (gamma_integral(cur)) {
          Rational top = 0;
          for (const auto& x : w) top = std::max(top, Rational(frac(x)));
          eps = (1 - top) / 2;
        } else {
          // simplest absolute time keeps denominators from compounding
          const Rational now = v[kGamma] + total;
          eps = simplest_between(now, now + d) - now;
        }
        return total + eps;
      }
      total += d;
      for (auto& x : w) x += d;
      k += 2;
    } else {
      total += d;
      for (auto& x : w) x += d;
      k += 1;
    }
  }
  return total;
}

}  // namespace twin
