#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "twin/model.hpp"
#include "twin/region.hpp"

namespace twin {

struct ModelBundle {
  TimedAutomaton automaton;
  PriorityFunction priorities;
  std::optional<PlayerPartition> partition;
};

struct ParseError {
  int line = 1;
  int column = 1;
  std::string expected;
  std::string found;

  std::string message() const;
};

using ParseResult = std::variant<ModelBundle, ParseError>;

ParseResult parse_model(std::string_view text);
std::string render_model(const ModelBundle& bundle);

// Name-based comparison; independent of declaration order.
bool structurally_equal(const ModelBundle& a, const ModelBundle& b);

// Parses, validates and returns the bundle; throws std::runtime_error with
// positions or violation messages otherwise.
ModelBundle load_model_text(std::string_view text);
ModelBundle load_model_file(const std::string& path);

TimedGame game_of(const ModelBundle& bundle);

std::string export_region_graph_dot(const RegionGraph& graph, const TimedAutomaton& automaton);

}  // namespace twin
