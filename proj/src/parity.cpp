#include "twin/parity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace twin {

int ParityGame::add_vertex(Player o, int p) {
  owner.push_back(o);
  priority.push_back(p);
  succ.emplace_back();
  return size() - 1;
}

Attractor attractor(const ParityGame& g, Player player, const std::vector<bool>& targets,
                    const std::vector<bool>& within_mask) {
  const int n = g.size();
  const std::vector<bool> within = within_mask.empty() ? std::vector<bool>(n, true) : within_mask;
  std::vector<std::vector<int>> pred(n);
  std::vector<int> remaining(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!within[v]) continue;
    for (int w : g.succ[v]) {
      if (!within[w]) continue;
      pred[w].push_back(v);
      ++remaining[v];
    }
  }
  Attractor a{std::vector<bool>(n, false), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (within[v] && targets[v]) {
      a.members[v] = true;
      a.rank[v] = 0;
      layer.push_back(v);
    }
  for (int r = 0; !layer.empty(); ++r) {
    std::vector<int> next;
    std::vector<bool> queued(n, false);
    for (int w : layer)
      for (int v : pred[w]) {
        if (a.members[v] || queued[v]) continue;
        if (g.owner[v] == player || --remaining[v] == 0) {
          queued[v] = true;
          next.push_back(v);
        }
      }
    std::sort(next.begin(), next.end());
    for (int v : next) {
      a.members[v] = true;
      a.rank[v] = r + 1;
    }
    for (int v : next) {
      if (g.owner[v] != player) continue;
      const auto& s = g.succ[v];
      for (std::size_t j = 0; j < s.size(); ++j)
        if (within[s[j]] && a.members[s[j]] && a.rank[s[j]] <= r) {
          a.strategy[v] = static_cast<int>(j);
          break;
        }
    }
    layer = std::move(next);
  }
  return a;
}

namespace {

class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g) : g_(g) {
    sol_.winner.assign(g.size(), Player::P1);
    sol_.strategy.assign(g.size(), -1);
  }

  ParitySolution run() {
    solve(std::vector<bool>(g_.size(), true));
    for (int v = 0; v < g_.size(); ++v)
      if (g_.owner[v] != sol_.winner[v]) sol_.strategy[v] = -1;
    return std::move(sol_);
  }

 private:
  int first_edge_within(int v, const std::vector<bool>& mask) const {
    const auto& s = g_.succ[v];
    for (std::size_t j = 0; j < s.size(); ++j)
      if (mask[s[j]]) return static_cast<int>(j);
    throw std::logic_error("subgame is not a trap");
  }

  void solve(std::vector<bool> G) {
    const int n = g_.size();
    for (;;) {
      int d = std::numeric_limits<int>::max();
      bool empty = true;
      for (int v = 0; v < n; ++v)
        if (G[v]) {
          empty = false;
          d = std::min(d, g_.priority[v]);
        }
      if (empty) return;
      const Player p = parity_winner(d);
      const Player o = opponent(p);

      std::vector<bool> top(n, false);
      for (int v = 0; v < n; ++v) top[v] = G[v] && g_.priority[v] == d;
      const Attractor A = attractor(g_, p, top, G);
      std::vector<bool> rest(n, false);
      bool rest_empty = true;
      for (int v = 0; v < n; ++v) {
        rest[v] = G[v] && !A.members[v];
        if (rest[v]) rest_empty = false;
      }
      if (!rest_empty) solve(rest);

      std::vector<bool> lost(n, false);
      bool opponent_wins = false;
      for (int v = 0; v < n; ++v)
        if (rest[v] && sol_.winner[v] == o) {
          lost[v] = true;
          opponent_wins = true;
        }

      if (!opponent_wins) {
        for (int v = 0; v < n; ++v) {
          if (!G[v]) continue;
          sol_.winner[v] = p;
          if (!A.members[v] || g_.owner[v] != p) continue;
          sol_.strategy[v] = A.rank[v] == 0 ? first_edge_within(v, G) : A.strategy[v];
        }
        return;
      }

      const Attractor B = attractor(g_, o, lost, G);
      for (int v = 0; v < n; ++v) {
        if (!B.members[v]) continue;
        sol_.winner[v] = o;
        if (B.rank[v] > 0 && g_.owner[v] == o) sol_.strategy[v] = B.strategy[v];
        G[v] = false;
      }
    }
  }

  const ParityGame& g_;
  ParitySolution sol_;
};

}  // namespace

ParitySolution solve_parity(const ParityGame& game) {
  for (int v = 0; v < game.size(); ++v)
    if (game.succ[v].empty()) throw std::invalid_argument("vertex without successors");
  return Zielonka(game).run();
}

}  // namespace twin
