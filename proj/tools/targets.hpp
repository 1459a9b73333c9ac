#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "monideal/graph.hpp"
#include "monideal/ideal.hpp"

namespace monideal::cli {

/// A graph from family shorthand (`Kr,s`, `Cn`, `wheel:h,rim,[i,j,k]`) or a
/// graph JSON file.
struct GraphSource {
  SimpleGraph graph{1};
  std::string label;
  std::optional<HWheelSpec> wheel;
};

/// Family shorthand only; nullopt when the text is not family-shaped.
/// Throws on a family-shaped string with bad parameters.
std::optional<GraphSource> parse_family(std::string_view text);
GraphSource load_graph(std::string_view family_or_file);

struct Target {
  MonomialIdeal ideal;
  std::string label;
  /// "graph" or "file".
  std::string origin;
  std::optional<GraphSource> graph;
  /// ni, di or jtN for graph targets.
  std::string construction;
};

/// `<family|graph.json>-<ni|di|jtN>` or a path to an ideal file.
Target resolve_target(std::string_view text);

/// FNV-1a of the canonical text form.
std::string ideal_digest(const MonomialIdeal& I);

}  // namespace monideal::cli
