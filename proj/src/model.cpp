#include "twin/model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace twin {

namespace {

template <typename T, typename F>
std::optional<int> find_by(const std::vector<T>& items, F&& name_of, std::string_view name) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (name_of(items[i]) == name) return static_cast<int>(i);
  return std::nullopt;
}

struct Interval {
  std::int64_t lo = 0;
  bool lo_strict = false;
  std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  bool hi_strict = false;

  void add(const Atom& a) {
    switch (a.rel) {
      case Rel::Lt:
        if (a.bound < hi || (a.bound == hi && !hi_strict)) { hi = a.bound; hi_strict = true; }
        break;
      case Rel::Le:
        if (a.bound < hi) { hi = a.bound; hi_strict = false; }
        break;
      case Rel::Gt:
        if (a.bound > lo || (a.bound == lo && !lo_strict)) { lo = a.bound; lo_strict = true; }
        break;
      case Rel::Ge:
        if (a.bound > lo) { lo = a.bound; lo_strict = false; }
        break;
    }
  }
  bool empty() const { return lo > hi || (lo == hi && (lo_strict || hi_strict)); }
};

}  // namespace

std::optional<int> TimedAutomaton::find_clock(std::string_view name) const {
  return find_by(clocks, [](const std::string& c) -> const std::string& { return c; }, name);
}

std::optional<int> TimedAutomaton::find_location(std::string_view name) const {
  return find_by(locations, [](const Location& l) -> const std::string& { return l.name; }, name);
}

std::optional<int> TimedAutomaton::find_action(std::string_view name) const {
  return find_by(actions, [](const std::string& a) -> const std::string& { return a; }, name);
}

int TimedAutomaton::add_clock(std::string_view name) {
  if (auto i = find_clock(name)) return *i;
  if (clock_count() >= kMaxClocks) throw std::length_error("too many clocks");
  clocks.emplace_back(name);
  return clock_count() - 1;
}

int TimedAutomaton::add_location(std::string_view name, ClockConstraint invariant) {
  if (auto i = find_location(name)) {
    locations[*i].invariant = std::move(invariant);
    locations[*i].declared = true;
    return *i;
  }
  locations.push_back(Location{std::string(name), std::move(invariant), true});
  return location_count() - 1;
}

int TimedAutomaton::add_action(std::string_view name) {
  if (auto i = find_action(name)) return *i;
  actions.emplace_back(name);
  return static_cast<int>(actions.size()) - 1;
}

void TimedAutomaton::add_edge(int source, int target, ClockConstraint guard, int action,
                              ClockSet resets) {
  edges.push_back(Edge{source, target, std::move(guard), action, resets});
}

TimedGame make_game(const TimedAutomaton& automaton, const PlayerPartition& partition) {
  TimedGame g{automaton, std::vector<std::uint8_t>(automaton.actions.size(), 0)};
  for (int a : partition.p1_actions) g.owner.at(a) = 1;
  for (int a : partition.p2_actions) g.owner.at(a) = 2;
  for (auto o : g.owner)
    if (o == 0) throw std::invalid_argument("action partition does not cover every action");
  return g;
}

TimedGame make_game(const TimedAutomaton& automaton) {
  return TimedGame{automaton, std::vector<std::uint8_t>(automaton.actions.size(), 1)};
}

bool satisfiable(const ClockConstraint& a, const ClockConstraint& b) {
  std::map<int, Interval> box;
  for (const auto* g : {&a, &b})
    for (const Atom& atom : g->atoms) box[atom.clock].add(atom);
  return std::none_of(box.begin(), box.end(), [](const auto& kv) { return kv.second.empty(); });
}

const char* rel_symbol(Rel rel) {
  switch (rel) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
  }
  return "?";
}

std::string describe(const ClockConstraint& g, const TimedAutomaton& automaton) {
  if (g.is_true()) return "true";
  std::string out;
  for (const Atom& a : g.atoms) {
    if (!out.empty()) out += " && ";
    const std::string name = a.clock >= 0 && a.clock < automaton.clock_count()
                                 ? automaton.clocks[a.clock]
                                 : "clock#" + std::to_string(a.clock);
    out += name + " " + rel_symbol(a.rel) + " " + std::to_string(a.bound);
  }
  return out;
}

ValidationReport validate_model(const TimedAutomaton& ta, const PriorityFunction& priorities,
                                const std::optional<PlayerPartition>& partition) {
  ValidationReport report;
  auto add = [&](std::string subject, std::string message) {
    report.violations.push_back(Violation{std::move(subject), std::move(message)});
  };

  if (ta.clocks.empty() || ta.clocks[kGamma] != kGammaName)
    add("clocks", "clock 0 must be the global clock gamma");
  {
    std::set<std::string> seen;
    for (const auto& c : ta.clocks)
      if (!seen.insert(c).second) add("clock " + c, "duplicate clock " + c);
  }
  if (ta.clock_count() > kMaxClocks) add("clocks", "too many clocks");

  auto check_constraint = [&](const ClockConstraint& g, const std::string& subject) {
    for (const Atom& a : g.atoms) {
      if (a.clock < 0 || a.clock >= ta.clock_count()) add(subject, "unknown clock in constraint");
      if (a.bound < 0) add(subject, "negative bound in constraint");
    }
  };

  std::set<std::string> names;
  for (const auto& loc : ta.locations) {
    if (!loc.declared) add("location " + loc.name, "unknown location " + loc.name);
    if (!names.insert(loc.name).second) add("location " + loc.name, "duplicate location " + loc.name);
    check_constraint(loc.invariant, "location " + loc.name);
  }
  if (ta.locations.empty()) add("locations", "automaton has no locations");

  const int n = ta.location_count();
  auto loc_name = [&](int i) {
    return i >= 0 && i < n ? ta.locations[i].name : "#" + std::to_string(i);
  };
  auto act_name = [&](int a) {
    return a >= 0 && a < static_cast<int>(ta.actions.size()) ? ta.actions[a] : "#" + std::to_string(a);
  };

  for (std::size_t i = 0; i < ta.edges.size(); ++i) {
    const Edge& e = ta.edges[i];
    const std::string subject =
        "edge " + loc_name(e.source) + " -> " + loc_name(e.target) + " (" + act_name(e.action) + ")";
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
      add(subject, "edge references a missing location");
    if (e.action < 0 || e.action >= static_cast<int>(ta.actions.size()))
      add(subject, "unknown action");
    if (e.resets & (ClockSet{1} << kGamma)) add(subject, "global clock reset");
    if (ta.clock_count() < kMaxClocks && (e.resets >> ta.clock_count()) != 0)
      add(subject, "reset of an unknown clock");
    check_constraint(e.guard, subject);
  }

  for (std::size_t i = 0; i < ta.edges.size(); ++i)
    for (std::size_t j = i + 1; j < ta.edges.size(); ++j) {
      const Edge& a = ta.edges[i];
      const Edge& b = ta.edges[j];
      if (a.source == b.source && a.action == b.action && satisfiable(a.guard, b.guard))
        add("location " + loc_name(a.source), "nondeterministic action " + act_name(a.action));
    }

  if (ta.initial < 0 || ta.initial >= n) {
    add("init", "initial location is missing");
  } else {
    for (const Atom& a : ta.locations[ta.initial].invariant.atoms) {
      bool ok = true;
      switch (a.rel) {
        case Rel::Lt: ok = 0 < a.bound; break;
        case Rel::Le: ok = true; break;
        case Rel::Ge: ok = a.bound == 0; break;
        case Rel::Gt: ok = false; break;
      }
      if (!ok) {
        add("init", "initial state violates the invariant of " + ta.locations[ta.initial].name);
        break;
      }
    }
  }

  if (priorities.dimensions < 1) add("priorities", "at least one dimension is required");
  if (priorities.count < 1) add("priorities", "priority count must be positive");
  for (int l = 0; l < n; ++l) {
    if (l >= static_cast<int>(priorities.table.size()) || priorities.table[l].empty()) {
      add("location " + loc_name(l), "location " + loc_name(l) + " has no priority");
      continue;
    }
    const auto& row = priorities.table[l];
    if (static_cast<int>(row.size()) != priorities.dimensions)
      add("location " + loc_name(l), "priority vector has the wrong dimension");
    for (int p : row)
      if (p < 0 || p >= priorities.count)
        add("location " + loc_name(l), "priority " + std::to_string(p) + " out of range");
  }

  if (partition) {
    std::vector<int> seen(ta.actions.size(), 0);
    for (const auto* side : {&partition->p1_actions, &partition->p2_actions})
      for (int a : *side) {
        if (a < 0 || a >= static_cast<int>(ta.actions.size())) {
          add("partition", "partition names an unknown action");
          continue;
        }
        ++seen[a];
      }
    for (std::size_t a = 0; a < seen.size(); ++a) {
      if (seen[a] == 0) add("partition", "action " + ta.actions[a] + " is owned by no player");
      if (seen[a] > 1) add("partition", "action " + ta.actions[a] + " is owned by both players");
    }
  }
  return report;
}

std::int64_t max_constant(const TimedAutomaton& ta, int clock) {
  if (clock < 0 || clock >= ta.clock_count()) throw std::out_of_range("unknown clock");
  std::int64_t best = 0;
  auto scan = [&](const ClockConstraint& g) {
    for (const Atom& a : g.atoms)
      if (a.clock == clock) best = std::max(best, a.bound);
  };
  for (const auto& l : ta.locations) scan(l.invariant);
  for (const auto& e : ta.edges) scan(e.guard);
  return best;
}

std::int64_t max_constant(const TimedAutomaton& ta, std::string_view clock) {
  auto idx = ta.find_clock(clock);
  if (!idx) throw std::out_of_range("unknown clock " + std::string(clock));
  return max_constant(ta, *idx);
}

ClockBounds clock_bounds(const TimedAutomaton& ta) {
  ClockBounds c(ta.clock_count());
  for (int x = 0; x < ta.clock_count(); ++x) c[x] = static_cast<int>(max_constant(ta, x));
  return c;
}

}  // namespace twin
