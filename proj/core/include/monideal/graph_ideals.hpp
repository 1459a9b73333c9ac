#pragma once

#include <optional>
#include <set>
#include <vector>

#include "monideal/graph.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Product of the variables in a vertex set, in `n` variables.
Monomial vertex_monomial(std::size_t n, VertexSet s);

/// Closed neighborhood ideal: one generator ∏_{j ∈ N[i]} x_j per vertex.
MonomialIdeal ni_ideal(const SimpleGraph& G);

/// Inclusion-minimal dominating sets, found as minimal transversals of the
/// closed neighborhoods by incremental dualization. Sorted by size, then mask.
std::vector<VertexSet> minimal_dominating_sets(const SimpleGraph& G);

/// Generated by the minimal dominating sets. Throws InternalError unless it
/// equals alexander_dual(ni_ideal(G)).
MonomialIdeal di_ideal(const SimpleGraph& G);

/// J_t(G): the intersection of (x, x_{i_1}, ..., x_{i_t}) over vertices x and
/// t-subsets of N(x). Every vertex needs degree >= t.
MonomialIdeal partial_cover_ideal(const SimpleGraph& G, std::size_t t);

/// ⋂ (x_{j-1}, x_j, x_{j+1}) over rim indices j ∈ {1..n} not excluded,
/// cyclically. Excluding every index leaves the empty intersection, returned
/// as the unit ideal.
MonomialIdeal rim_intersection_ideal(std::size_t n, const std::set<std::size_t>& excluded);

struct LinearRelationGraph {
  /// Variables touching an edge.
  VertexSet vertices = 0;
  /// {x_i, x_j} (i < j, 0-based) with x_i u_k = x_j u_l for generators u_k, u_l.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t r = 0;
  std::size_t s = 0;
  bool single_degree = false;
  /// r - s when the ideal is generated in a single degree: the largest t of
  /// the depth bound depth(R/I^t) <= n - t - 1.
  std::optional<std::size_t> depth_bound_range;
};

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I);

}  // namespace monideal
