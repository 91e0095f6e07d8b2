#include "twin/export.hpp"

#include <stdexcept>
#include <unordered_map>

namespace twin {

namespace {

Json path_json(const std::vector<int>& path, const RegionGraph& g, const TimedAutomaton& ta) {
  Json out = Json::array();
  for (int v : path) out.push_back(encode(g.vertices[v], ta));
  return out;
}

Json move_json(const AbstractMove& m) { return {{"target", m.target}, {"edge", m.edge}}; }

AbstractMove move_from(const Json& j) { return {j.at("target").get<int>(), j.at("edge").get<int>()}; }

Json mealy_json(const MealyStrategy& m) {
  Json table = Json::array();
  const int R = m.region_count();
  for (int mem = 0; mem < m.memory_count(); ++mem) {
    Json row = Json::object();
    for (int r = 0; r < R; ++r) {
      const std::size_t slot = static_cast<std::size_t>(mem) * R + r;
      row[m.regions[r]] = {{"next", m.next[slot]}, {"move", move_json(m.moves[slot])}, {"winning", bool(m.wins[slot])}};
    }
    table.push_back(std::move(row));
  }
  return {{"kind", "mealy"},
          {"q_count", m.q_count},
          {"priorities", m.priorities},
          {"initial_memory", m.initial_memory},
          {"regions", m.regions},
          {"table", std::move(table)}};
}

MealyStrategy mealy_from(const Json& j, const std::unordered_map<std::string, int>& ids,
                         const std::vector<std::string>& keys) {
  MealyStrategy m;
  m.q_count = j.at("q_count").get<int>();
  m.priorities = j.at("priorities").get<int>();
  m.initial_memory = j.at("initial_memory").get<int>();
  m.regions = keys;
  const int R = static_cast<int>(keys.size());
  const auto& table = j.at("table");
  if (static_cast<int>(table.size()) != m.memory_count()) throw std::runtime_error("strategy table has wrong size");
  const std::size_t slots = static_cast<std::size_t>(m.memory_count()) * R;
  m.next.assign(slots, m.initial_memory);
  m.moves.assign(slots, AbstractMove{});
  m.wins.assign(slots, false);
  std::vector<bool> seen(R, false);
  for (int mem = 0; mem < m.memory_count(); ++mem) {
    for (const auto& [key, row] : table[mem].items()) {
      auto it = ids.find(key);
      if (it == ids.end()) throw std::runtime_error("strategy region not in the model: " + key);
      const std::size_t slot = static_cast<std::size_t>(mem) * R + it->second;
      m.next[slot] = row.at("next").get<int>();
      m.moves[slot] = move_from(row.at("move"));
      m.wins[slot] = row.at("winning").get<bool>();
      seen[it->second] = true;
    }
  }
  for (int r = 0; r < R; ++r)
    if (!seen[r]) throw std::runtime_error("strategy lacks region " + keys[r]);
  return m;
}

}  // namespace

Json witness_to_json(const ViolationWitness& w, const RegionGraph& g, const TimedAutomaton& ta) {
  Json out{{"dimension", w.dimension},
           {"indirect", w.indirect},
           {"anchor", encode(g.vertices[w.anchor], ta)},
           {"anchor_index", w.anchor_index},
           {"prefix", path_json(w.prefix, g, ta)},
           {"cycle", path_json(w.cycle, g, ta)},
           {"integral_marker", w.integral_marker},
           {"fractional_marker", w.fractional_marker}};
  if (w.indirect) out["return_path"] = path_json(w.return_path, g, ta);
  return out;
}

Json verdict_to_json(const Verdict& v, Mode mode, const RegionGraph& g, const TimedAutomaton& ta) {
  Json dims = Json::array();
  for (std::size_t k = 0; k < v.dimensions.size(); ++k) {
    Json d{{"dimension", k}, {"holds", !v.dimensions[k].has_value()}};
    if (v.dimensions[k]) d["witness"] = witness_to_json(*v.dimensions[k], g, ta);
    dims.push_back(std::move(d));
  }
  return {{"mode", mode == Mode::Direct ? "direct" : "indirect"}, {"holds", v.holds()}, {"dimensions", dims}};
}

Json solution_to_json(const GameSolution& s, const RegionGraph& g, const TimedAutomaton& ta) {
  auto regions = [&](const std::vector<bool>& set) {
    Json out = Json::array();
    for (int r = 0; r < g.size(); ++r)
      if (set[r]) out.push_back(encode(g.vertices[r], ta));
    return out;
  };
  Json layers = Json::array();
  for (const auto& l : s.layers) layers.push_back(regions(l));
  return {{"mode", s.mode == Mode::Direct ? "direct" : "indirect"},
          {"initial_winning", bool(s.winning[g.initial])},
          {"lambda_bound", s.lambda},
          {"iterations", s.iterations},
          {"winning_regions", regions(s.winning)},
          {"layers", layers}};
}

Json strategy_to_json(const RegionStrategy& strategy) {
  if (const auto* m = dynamic_cast<const MealyStrategy*>(&strategy)) return mealy_json(*m);
  if (const auto* l = dynamic_cast<const LayeredMealy*>(&strategy)) {
    Json layers = Json::array();
    for (const auto& m : l->layers) layers.push_back(mealy_json(m));
    Json earliest = Json::object();
    const auto& keys = l->layers.front().regions;
    for (std::size_t r = 0; r < keys.size(); ++r) earliest[keys[r]] = l->earliest[r];
    return {{"kind", "layered"}, {"layers", layers}, {"earliest", earliest}};
  }
  throw std::invalid_argument("unknown strategy type");
}

std::shared_ptr<RegionStrategy> strategy_from_json(const Json& j, const RegionGraph& g, const TimedAutomaton& ta) {
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> ids;
  for (int r = 0; r < g.size(); ++r) {
    keys.push_back(encode(g.vertices[r], ta));
    ids.emplace(keys.back(), r);
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mealy") return std::make_shared<MealyStrategy>(mealy_from(j, ids, keys));
  if (kind != "layered") throw std::runtime_error("unknown strategy kind " + kind);
  auto out = std::make_shared<LayeredMealy>();
  for (const auto& layer : j.at("layers")) out->layers.push_back(mealy_from(layer, ids, keys));
  if (out->layers.empty()) throw std::runtime_error("layered strategy without layers");
  out->earliest.assign(keys.size(), -1);
  for (const auto& [key, e] : j.at("earliest").items()) {
    auto it = ids.find(key);
    if (it == ids.end()) throw std::runtime_error("strategy region not in the model: " + key);
    out->earliest[it->second] = e.get<int>();
  }
  return out;
}

Json run_to_json(const Run& run, const TimedAutomaton& ta) {
  Json states = Json::array();
  for (const auto& s : run.states) {
    Json val = Json::object();
    for (int x = 0; x < ta.clock_count(); ++x) val[ta.clocks[x]] = to_string(s.valuation[x]);
    states.push_back({{"location", ta.locations[s.location].name}, {"valuation", val}});
  }
  Json moves = Json::array();
  for (const auto& m : run.moves)
    moves.push_back({{"delay", to_string(m.delay)},
                     {"action", m.action == kNoAction ? Json(nullptr) : Json(ta.actions[m.action])}});
  Json out{{"states", states}, {"moves", moves}};
  if (!run.p1_blamed.empty()) out["p1_blamed"] = run.p1_blamed;
  return out;
}

Run run_from_json(const Json& j, const TimedAutomaton& ta) {
  Run run;
  for (const auto& s : j.at("states")) {
    ConcreteState st;
    const auto loc = ta.find_location(s.at("location").get<std::string>());
    if (!loc) throw std::runtime_error("unknown location in run");
    st.location = *loc;
    st.valuation.assign(ta.clock_count(), Rational(0));
    for (const auto& [name, value] : s.at("valuation").items()) {
      const auto x = ta.find_clock(name);
      if (!x) throw std::runtime_error("unknown clock in run: " + name);
      st.valuation[*x] = parse_rational(value.get<std::string>());
    }
    run.states.push_back(std::move(st));
  }
  for (const auto& m : j.at("moves")) {
    Move mv;
    mv.delay = parse_rational(m.at("delay").get<std::string>());
    if (!m.at("action").is_null()) {
      const auto a = ta.find_action(m.at("action").get<std::string>());
      if (!a) throw std::runtime_error("unknown action in run");
      mv.action = *a;
    }
    run.moves.push_back(mv);
  }
  if (j.contains("p1_blamed")) run.p1_blamed = j.at("p1_blamed").get<std::vector<bool>>();
  if (run.states.size() != run.moves.size() + 1) throw std::runtime_error("run has mismatched states and moves");
  return run;
}

Json dba_to_json(const Dba& machine, const RegionGraph& g, const TimedAutomaton& ta) {
  Json letters = Json::array();
  for (const auto& r : g.vertices) letters.push_back(encode(r, ta));
  Json delta = Json::array();
  for (int q = 0; q < machine.state_count(); ++q) {
    Json row = Json::array();
    for (const auto& r : g.vertices) row.push_back(machine.step(q, r));
    delta.push_back({{"state", q}, {"accepting", machine.accepting(q)}, {"next", row}});
  }
  return {{"states", machine.state_count()}, {"initial", machine.initial()}, {"letters", letters}, {"delta", delta}};
}

}  // namespace twin
