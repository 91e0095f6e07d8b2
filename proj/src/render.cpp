#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "twin/format.hpp"

namespace twin {

namespace {

std::string render_constraint(const ClockConstraint& g, const TimedAutomaton& ta) {
  return describe(g, ta);
}

std::string reset_list(ClockSet resets, const TimedAutomaton& ta) {
  std::string out;
  for (int x = 0; x < ta.clock_count(); ++x) {
    if (!(resets & (ClockSet{1} << x))) continue;
    if (!out.empty()) out += ", ";
    out += ta.clocks[x];
  }
  return out;
}

using EdgeKey = std::tuple<std::string, std::string, std::string, std::string, std::string>;

std::multiset<EdgeKey> edge_keys(const TimedAutomaton& ta) {
  std::multiset<EdgeKey> keys;
  for (const Edge& e : ta.edges)
    keys.emplace(ta.locations[e.source].name, ta.actions[e.action], ta.locations[e.target].name,
                 render_constraint(e.guard, ta), reset_list(e.resets, ta));
  return keys;
}

std::set<std::string> action_names(const TimedAutomaton& ta, const std::vector<int>& ids) {
  std::set<std::string> out;
  for (int a : ids) out.insert(ta.actions[a]);
  return out;
}

}  // namespace

std::string render_model(const ModelBundle& b) {
  const TimedAutomaton& ta = b.automaton;
  std::string out;
  out += "clocks";
  for (int x = 1; x < ta.clock_count(); ++x) out += " " + ta.clocks[x];
  out += ";\n";

  int max_p = 0;
  for (const auto& row : b.priorities.table)
    for (int p : row) max_p = std::max(max_p, p);
  if (b.priorities.count != max_p + 1)
    out += "priority_count " + std::to_string(b.priorities.count) + ";\n";

  std::vector<int> order(ta.location_count());
  for (int i = 0; i < ta.location_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int c) { return ta.locations[a].name < ta.locations[c].name; });
  for (int l : order) {
    const Location& loc = ta.locations[l];
    out += "location " + loc.name + " { invariant: " + render_constraint(loc.invariant, ta) +
           "; priority: [";
    const auto& row = b.priorities.table.at(l);
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? ", " : "") + std::to_string(row[k]);
    out += "]; }\n";
  }

  std::vector<const Edge*> edges;
  for (const Edge& e : ta.edges) edges.push_back(&e);
  auto key = [&](const Edge* e) {
    return std::tie(ta.locations[e->source].name, ta.actions[e->action], ta.locations[e->target].name);
  };
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge* a, const Edge* c) { return key(a) < key(c); });
  for (const Edge* e : edges) {
    out += "edge " + ta.locations[e->source].name + " -> " + ta.locations[e->target].name +
           " { guard: " + render_constraint(e->guard, ta) + "; action: " + ta.actions[e->action] +
           "; reset: {" + reset_list(e->resets, ta) + "}; }\n";
  }
  out += "init " + ta.locations[ta.initial].name + ";\n";
  if (b.partition) {
    for (int side = 0; side < 2; ++side) {
      const auto names = action_names(ta, side == 0 ? b.partition->p1_actions : b.partition->p2_actions);
      out += side == 0 ? "player1:" : "player2:";
      for (const auto& n : names) out += " " + n;
      out += ";\n";
    }
  }
  return out;
}

bool structurally_equal(const ModelBundle& a, const ModelBundle& b) {
  const TimedAutomaton& x = a.automaton;
  const TimedAutomaton& y = b.automaton;
  if (x.clocks != y.clocks) return false;
  if (x.location_count() != y.location_count()) return false;
  if (a.priorities.count != b.priorities.count || a.priorities.dimensions != b.priorities.dimensions)
    return false;
  for (int l = 0; l < x.location_count(); ++l) {
    auto m = y.find_location(x.locations[l].name);
    if (!m) return false;
    if (render_constraint(x.locations[l].invariant, x) != render_constraint(y.locations[*m].invariant, y))
      return false;
    if (a.priorities.table.at(l) != b.priorities.table.at(*m)) return false;
  }
  if (x.locations[x.initial].name != y.locations[y.initial].name) return false;
  if (edge_keys(x) != edge_keys(y)) return false;
  if (a.partition.has_value() != b.partition.has_value()) return false;
  if (a.partition) {
    if (action_names(x, a.partition->p1_actions) != action_names(y, b.partition->p1_actions)) return false;
    if (action_names(x, a.partition->p2_actions) != action_names(y, b.partition->p2_actions)) return false;
  }
  return true;
}

std::string export_region_graph_dot(const RegionGraph& g, const TimedAutomaton& ta) {
  std::string out = "digraph regions {\n  node [shape=box, fontname=\"monospace\"];\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  for (int v = 0; v < g.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + quote(encode(g.vertices[v], ta));
    if (v == g.initial) out += ", peripheries=2";
    out += "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target);
    if (e.kind() == StepKind::Delay) {
      out += " [style=dashed, label=\"delay\"];\n";
    } else {
      out += " [style=solid, label=" + quote(ta.actions[ta.edges[e.edge].action]) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace twin
