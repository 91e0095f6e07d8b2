#pragma once

#include <cstdint>
#include <vector>

namespace twin {

// Min-parity: P1 wins when the least priority seen infinitely often is even.
enum class Player : std::uint8_t { P1 = 0, P2 = 1 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline Player parity_winner(int priority) { return priority % 2 == 0 ? Player::P1 : Player::P2; }

struct ParityGame {
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  int initial = 0;

  int size() const { return static_cast<int>(owner.size()); }
  int add_vertex(Player owner, int priority);
};

struct Attractor {
  std::vector<bool> members;
  std::vector<int> rank;      // -1 outside
  std::vector<int> strategy;  // edge index for the player's vertices of positive rank, else -1
};

// Restricted to the vertices where `within` holds; an empty mask means all.
Attractor attractor(const ParityGame& game, Player player, const std::vector<bool>& targets,
                    const std::vector<bool>& within = {});

struct ParitySolution {
  std::vector<Player> winner;
  std::vector<int> strategy;  // edge index on vertices owned by their winner, else -1

  bool wins(Player p, int v) const { return winner[v] == p; }
};

ParitySolution solve_parity(const ParityGame& game);

}  // namespace twin
