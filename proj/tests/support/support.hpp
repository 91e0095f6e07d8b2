#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twin/format.hpp"
#include "twin/objective.hpp"
#include "twin/parity.hpp"
#include "twin/region.hpp"

namespace twin::testing {

std::string data_path(const std::string& name);
ModelBundle fixture(const std::string& name);
std::vector<std::string> game_fixtures();
std::vector<std::string> safety_fixtures();

struct RandomTaOptions {
  int max_locations = 4;
  int user_clocks = 1;
  int max_constant = 2;
  int max_priorities = 4;  // D
  int max_dimensions = 2;  // K
  int max_edges = 6;
  bool with_partition = false;
};

// Retries until the result validates.
ModelBundle random_bundle(std::mt19937_64& rng, const RandomTaOptions& options);

// Values k + i/den with den <= max_den, k <= 2 * bound + 1.
Valuation random_valuation(std::mt19937_64& rng, const ClockBounds& bounds, int max_den = 8);

// Regions by the clock-equivalence clauses, without the region encoding.
bool clause_equivalent(const Valuation& a, const Valuation& b, const ClockBounds& bounds);

// Lasso word u v^omega over letter indices.
struct Lasso {
  std::vector<int> prefix;
  std::vector<int> loop;
};

// Every request visited infinitely often is answered later, per pair.
bool rr_holds(const ChainFamily& family, const std::vector<StateRegion>& alphabet, const Lasso& word);
bool dba_accepts(const Dba& machine, const std::vector<StateRegion>& alphabet, const Lasso& word);

// Winner of the initial vertex by enumerating memoryless profiles of both players.
Player brute_force_winner(const ParityGame& game, int vertex);

// Location copies (l, visited-bad), priority 0 before and 1 after visiting a bad location.
ModelBundle safety_reduction(const ModelBundle& game, const std::vector<bool>& bad);
// Bad locations are those with odd priority on dimension 0.
std::vector<bool> bad_locations(const ModelBundle& game);
// Nested fixpoint over (region, visited, tick, blame) with its own move enumeration.
bool safety_oracle_wins(const ModelBundle& game, const std::vector<bool>& bad);

}  // namespace twin::testing
