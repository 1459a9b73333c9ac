#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monideal/error.hpp"

namespace monideal {

/// Vertex subsets are 64-bit masks; vertex v is bit v (0-based).
using VertexSet = std::uint64_t;

/// A finite simple graph on vertices 0..n-1 (printed 1..n).
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Edgeless graph; 1 <= n <= 64.
  explicit SimpleGraph(std::size_t n);
  /// Rejects loops, repeated edges and vertices out of range.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (adj_[u] >> v) & 1U;
  }
  VertexSet neighbors(std::size_t v) const noexcept { return adj_[v]; }
  VertexSet closed_neighborhood(std::size_t v) const noexcept {
    return adj_[v] | (VertexSet{1} << v);
  }
  std::size_t degree(std::size_t v) const noexcept;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Parts 0..r-1 and r..r+s-1.
SimpleGraph complete_bipartite(std::size_t r, std::size_t s);
/// Vertices 0..n-1 in cyclic order, n >= 3.
SimpleGraph cycle(std::size_t n);

/// `{"n": 5, "edges": [[1,2], ...]}` with 1-based vertices.
SimpleGraph parse_graph_json(std::string_view text);
std::string graph_to_json(const SimpleGraph& G);

/// Odd simple cycles of the subgraph induced by `vertices`, each counted once.
std::size_t count_odd_cycles(const SimpleGraph& G, VertexSet vertices);

struct HWheelSpec {
  std::size_t h = 1;
  std::size_t rim_length = 5;
  /// 1-based rim indices, strictly increasing after normalization.
  std::vector<std::size_t> radial;
};

/// Rim path lengths between cyclically consecutive radial vertices.
std::vector<std::size_t> radial_lengths(const HWheelSpec& spec);
/// Some three cyclically consecutive rim indices are all radial.
bool has_three_consecutive_radial(const HWheelSpec& spec);

/// Numbering: rim vertices 0..rim-1, then the centers.
SimpleGraph build_h_wheel_unchecked(const HWheelSpec& spec);

/// Condition numbers (1..4) of the h-wheel definition that fail for G with
/// the given rim/center split. Condition 4 counts odd cycles in the subgraph
/// induced by a center and its rim neighbours.
std::vector<int> h_wheel_violations(const SimpleGraph& G, VertexSet rim, VertexSet centers);

class HWheelError : public InvalidArgument {
 public:
  HWheelError(std::vector<int> conditions, const std::string& what)
      : InvalidArgument(what), conditions_(std::move(conditions)) {}
  const std::vector<int>& conditions() const noexcept { return conditions_; }

 private:
  std::vector<int> conditions_;
};

/// Builds and validates; throws HWheelError listing every violated condition.
SimpleGraph build_h_wheel(const HWheelSpec& spec);

}  // namespace monideal
