#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>

namespace twin::testing {

std::string data_path(const std::string& name) { return std::string(TWIN_TEST_DATA_DIR) + "/" + name; }

ModelBundle fixture(const std::string& name) { return load_model_file(data_path(name)); }

std::vector<std::string> game_fixtures() {
  return {"fig1.ta",          "fig1_p1.ta", "fig1_p2.ta",      "trivial_even.ta",
          "indirect_only.ta", "spoiler.ta", "alternate_k2.ta", "race.ta"};
}

std::vector<std::string> safety_fixtures() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("safety")))
    if (entry.path().extension() == ".ta") out.push_back("safety/" + entry.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Atom random_atom(std::mt19937_64& rng, int clocks, int max_constant, bool invariant) {
  Atom a;
  a.clock = uniform(rng, 1, clocks);
  if (invariant) {
    a.rel = uniform(rng, 0, 1) ? Rel::Le : Rel::Lt;
    a.bound = uniform(rng, 1, max_constant);
  } else {
    a.rel = static_cast<Rel>(uniform(rng, 0, 3));
    a.bound = uniform(rng, 0, max_constant);
    if (a.rel == Rel::Lt && a.bound == 0) a.bound = 1;
  }
  return a;
}

}  // namespace

ModelBundle random_bundle(std::mt19937_64& rng, const RandomTaOptions& opt) {
  for (;;) {
    ModelBundle b;
    TimedAutomaton& ta = b.automaton;
    for (int c = 0; c < opt.user_clocks; ++c) ta.add_clock("x" + std::to_string(c));
    const int n = uniform(rng, 1, opt.max_locations);
    for (int l = 0; l < n; ++l) {
      ClockConstraint inv;
      if (opt.user_clocks > 0 && uniform(rng, 0, 2) == 0) inv.atoms.push_back(random_atom(rng, opt.user_clocks, opt.max_constant, true));
      ta.add_location("l" + std::to_string(l), inv);
    }
    const int actions = uniform(rng, 1, 3);
    for (int a = 0; a < actions; ++a) ta.add_action(std::string(1, static_cast<char>('a' + a)));
    const int edges = uniform(rng, 0, opt.max_edges);
    for (int e = 0; e < edges; ++e) {
      ClockConstraint guard;
      if (opt.user_clocks > 0) {
        const int atoms = uniform(rng, 0, 2);
        for (int i = 0; i < atoms; ++i) guard.atoms.push_back(random_atom(rng, opt.user_clocks, opt.max_constant, false));
      }
      ClockSet resets = 0;
      for (int c = 1; c <= opt.user_clocks; ++c)
        if (uniform(rng, 0, 1)) resets |= ClockSet{1} << c;
      ta.add_edge(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1), guard, uniform(rng, 0, actions - 1), resets);
    }
    ta.initial = 0;
    b.priorities.dimensions = uniform(rng, 1, opt.max_dimensions);
    b.priorities.count = uniform(rng, 1, opt.max_priorities);
    for (int l = 0; l < n; ++l) {
      std::vector<int> row;
      for (int k = 0; k < b.priorities.dimensions; ++k) row.push_back(uniform(rng, 0, b.priorities.count - 1));
      b.priorities.table.push_back(row);
    }
    if (opt.with_partition) {
      PlayerPartition p;
      for (int a = 0; a < actions; ++a) (uniform(rng, 0, 1) ? p.p1_actions : p.p2_actions).push_back(a);
      b.partition = p;
    }
    if (validate_model(ta, b.priorities, b.partition).ok()) return b;
  }
}

Valuation random_valuation(std::mt19937_64& rng, const ClockBounds& bounds, int max_den) {
  Valuation v;
  for (int c : bounds) {
    const int den = uniform(rng, 1, max_den);
    v.push_back(Rational(uniform(rng, 0, 2 * c + 1)) + Rational(uniform(rng, 0, den - 1), den));
  }
  for (auto& x : v) x.canonicalize();
  return v;
}

bool clause_equivalent(const Valuation& a, const Valuation& b, const ClockBounds& bounds) {
  const std::size_t n = a.size();
  std::vector<std::size_t> tracked;
  for (std::size_t x = 0; x < n; ++x) {
    const bool above_a = a[x] > bounds[x], above_b = b[x] > bounds[x];
    if (above_a != above_b) return false;
    if (!above_a) {
      if (floor_int(a[x]) != floor_int(b[x])) return false;
      tracked.push_back(x);
    } else if (x == kGamma) {
      tracked.push_back(x);
    }
  }
  for (std::size_t x : tracked) {
    if (is_integer(a[x]) != is_integer(b[x])) return false;
    for (std::size_t y : tracked)
      if ((frac(a[x]) <= frac(a[y])) != (frac(b[x]) <= frac(b[y]))) return false;
  }
  return true;
}

bool rr_holds(const ChainFamily& family, const std::vector<StateRegion>& alphabet, const Lasso& w) {
  for (const auto& pair : family.pairs) {
    auto answered_in_loop = std::any_of(w.loop.begin(), w.loop.end(),
                                        [&](int l) { return pair.response.contains(alphabet[l]); });
    for (int l : w.loop)
      if (pair.request.contains(alphabet[l]) && !answered_in_loop) return false;
    for (std::size_t i = 0; i < w.prefix.size(); ++i) {
      if (!pair.request.contains(alphabet[w.prefix[i]])) continue;
      bool answered = answered_in_loop;
      for (std::size_t j = i + 1; j < w.prefix.size() && !answered; ++j)
        answered = pair.response.contains(alphabet[w.prefix[j]]);
      if (!answered) return false;
    }
  }
  return true;
}

bool dba_accepts(const Dba& m, const std::vector<StateRegion>& alphabet, const Lasso& w) {
  int q = m.initial();
  for (int l : w.prefix) q = m.step(q, alphabet[l]);
  std::map<int, std::size_t> seen;
  std::vector<bool> accepting_round;
  while (!seen.count(q)) {
    seen.emplace(q, accepting_round.size());
    bool acc = false;
    for (int l : w.loop) {
      q = m.step(q, alphabet[l]);
      acc = acc || m.accepting(q);
    }
    accepting_round.push_back(acc);
  }
  for (std::size_t i = seen.at(q); i < accepting_round.size(); ++i)
    if (accepting_round[i]) return true;
  return false;
}

Player brute_force_winner(const ParityGame& g, int start) {
  const int n = g.size();
  std::vector<int> p1, p2;
  for (int v = 0; v < n; ++v) (g.owner[v] == Player::P1 ? p1 : p2).push_back(v);
  auto profiles = [&](const std::vector<int>& vs) {
    std::size_t total = 1;
    for (int v : vs) total *= g.succ[v].size();
    return total;
  };
  auto choice = [&](const std::vector<int>& vs, std::size_t code, std::vector<int>& pick) {
    for (int v : vs) {
      pick[v] = static_cast<int>(code % g.succ[v].size());
      code /= g.succ[v].size();
    }
  };
  std::vector<int> pick(n, 0);
  for (std::size_t s1 = 0; s1 < profiles(p1); ++s1) {
    choice(p1, s1, pick);
    bool beats_all = true;
    for (std::size_t s2 = 0; s2 < profiles(p2) && beats_all; ++s2) {
      choice(p2, s2, pick);
      std::vector<int> when(n, -1);
      std::vector<int> path;
      int v = start;
      while (when[v] < 0) {
        when[v] = static_cast<int>(path.size());
        path.push_back(v);
        v = g.succ[v][pick[v]];
      }
      int low = g.priority[v];
      for (std::size_t i = when[v]; i < path.size(); ++i) low = std::min(low, g.priority[path[i]]);
      beats_all = low % 2 == 0;
    }
    if (beats_all) return Player::P1;
  }
  return Player::P2;
}

std::vector<bool> bad_locations(const ModelBundle& game) {
  std::vector<bool> bad;
  for (const auto& row : game.priorities.table) bad.push_back(row[0] % 2 == 1);
  return bad;
}

ModelBundle safety_reduction(const ModelBundle& game, const std::vector<bool>& bad) {
  const TimedAutomaton& src = game.automaton;
  ModelBundle out;
  TimedAutomaton& ta = out.automaton;
  for (int c = 1; c < src.clock_count(); ++c) ta.add_clock(src.clocks[c]);
  for (const auto& a : src.actions) ta.add_action(a);
  const int n = src.location_count();
  auto copy = [&](int l, int bit) { return l * 2 + bit; };
  for (int l = 0; l < n; ++l)
    for (int bit = 0; bit < 2; ++bit) ta.add_location(src.locations[l].name + (bit ? "'" : ""), src.locations[l].invariant);
  for (const Edge& e : src.edges)
    for (int bit = 0; bit < 2; ++bit) {
      const int to = bit || bad[e.target] ? 1 : 0;
      ta.add_edge(copy(e.source, bit), copy(e.target, to), e.guard, e.action, e.resets);
    }
  ta.initial = copy(src.initial, bad[src.initial] ? 1 : 0);
  out.priorities.dimensions = 1;
  out.priorities.count = 2;
  for (int l = 0; l < n; ++l) {
    out.priorities.table.push_back({0});
    out.priorities.table.push_back({1});
  }
  out.partition = game.partition;
  return out;
}

bool safety_oracle_wins(const ModelBundle& game, const std::vector<bool>& bad) {
  const TimedAutomaton& ta = game.automaton;
  const TimedGame tg = game_of(game);
  const RegionGraph g = build_region_graph(ta);
  const int R = g.size();

  struct Outcome {
    int region;
    bool tick, blame;
  };
  // moves[r][m] = all outcomes P2 can force against P1's m-th move
  std::vector<std::vector<std::vector<Outcome>>> moves(R);
  for (int r = 0; r < R; ++r) {
    const StateRegion& s = g.vertices[r];
    std::vector<ClockRegion> chain = delay_chain(s.clocks, ta.locations[s.location].invariant, g.bounds).regions;
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (gamma_integral(chain[i])) {
        chain.resize(i + 1);
        break;
      }
    auto enabled = [&](const Edge& e, const ClockRegion& at) {
      return satisfies(at, e.guard, g.bounds) &&
             satisfies(apply_reset(at, e.resets), ta.locations[e.target].invariant, g.bounds);
    };
    auto ticked = [&](int upto) {
      for (int j = 1; j <= upto; ++j)
        if (gamma_integral(chain[j])) return true;
      return false;
    };
    auto outcome = [&](int edge, int pos, bool blame) {
      StateRegion next{s.location, chain[pos]};
      if (edge >= 0) next = {ta.edges[edge].target, apply_reset(chain[pos], ta.edges[edge].resets)};
      return Outcome{*g.find(next), ticked(pos), blame};
    };
    const int E = static_cast<int>(ta.edges.size());
    for (int t = 0; t < static_cast<int>(chain.size()); ++t) {
      for (int a = -1; a < E; ++a) {
        if (a >= 0 && (ta.edges[a].source != s.location || !tg.p1_owns(ta.edges[a].action) || !enabled(ta.edges[a], chain[t])))
          continue;
        std::vector<Outcome> res{outcome(a, t, true)};
        for (int i = 0; i <= t; ++i) {
          if (i < t || a >= 0) res.push_back(outcome(-1, i, false));
          for (int e = 0; e < E; ++e)
            if (ta.edges[e].source == s.location && !tg.p1_owns(ta.edges[e].action) && enabled(ta.edges[e], chain[i]))
              res.push_back(outcome(e, i, false));
        }
        moves[r].push_back(std::move(res));
      }
    }
  }

  // state = ((r * 2 + bit) * 2 + tick) * 2 + blame
  const int N = R * 8;
  auto id = [](int r, bool bit, bool tick, bool blame) { return ((r * 2 + bit) * 2 + tick) * 2 + blame; };
  auto priority = [&](int s) {
    const bool blame = s & 1, tick = s >> 1 & 1, bit = s >> 2 & 1;
    if (!bit) return tick ? 0 : (blame ? 1 : 2);
    return tick || blame ? 1 : 2;
  };
  auto cpre = [&](const std::vector<bool>& Z, int s) {
    const int r = s / 8;
    const bool bit = s >> 2 & 1;
    for (const auto& res : moves[r]) {
      bool all = true;
      for (const auto& o : res) {
        const bool bit2 = bit || bad[g.vertices[o.region].location];
        if (!Z[id(o.region, bit2, o.tick, o.blame)]) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  };

  std::vector<bool> Z0(N, true);
  for (;;) {
    std::vector<bool> Z1(N, false);
    for (;;) {
      std::vector<bool> Z2(N, true);
      for (;;) {
        std::vector<bool> next(N);
        for (int s = 0; s < N; ++s) {
          const int p = priority(s);
          next[s] = cpre(p == 0 ? Z0 : p == 1 ? Z1 : Z2, s);
        }
        if (next == Z2) break;
        Z2 = std::move(next);
      }
      if (Z2 == Z1) break;
      Z1 = std::move(Z2);
    }
    if (Z1 == Z0) break;
    Z0 = std::move(Z1);
  }
  const bool init_bad = bad[ta.initial];
  return Z0[id(g.initial, init_bad, false, false)];
}

}  // namespace twin::testing
