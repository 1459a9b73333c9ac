#include "monideal/graph_ideals.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "monideal/error.hpp"
#include "monideal/runtime.hpp"

namespace monideal {

namespace {

bool set_less(VertexSet a, VertexSet b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

// Drops every set that strictly contains another one.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (auto s : sets) {
    const bool covered = std::any_of(out.begin(), out.end(),
                                     [s](VertexSet t) { return (t & ~s) == 0; });
    if (!covered) out.push_back(s);
  }
  return out;
}

}  // namespace

Monomial vertex_monomial(std::size_t n, VertexSet s) {
  std::vector<Exponent> e(n, 0);
  for (; s != 0; s &= s - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    if (v >= n) throw InvalidArgument("vertex outside the ambient ring");
    e[v] = 1;
  }
  return Monomial(std::span<const Exponent>(e));
}

MonomialIdeal ni_ideal(const SimpleGraph& G) {
  const std::size_t n = G.vertex_count();
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < n; ++v) gens.push_back(vertex_monomial(n, G.closed_neighborhood(v)));
  return MonomialIdeal(n, std::move(gens));
}

std::vector<VertexSet> minimal_dominating_sets(const SimpleGraph& G) {
  std::vector<VertexSet> edges;
  for (std::size_t v = 0; v < G.vertex_count(); ++v) edges.push_back(G.closed_neighborhood(v));
  edges = minimal_sets(std::move(edges));

  std::vector<VertexSet> transversals{0};
  for (const VertexSet e : edges) {
    poll_deadline();
    std::vector<VertexSet> next;
    for (const VertexSet t : transversals) {
      if ((t & e) != 0) {
        next.push_back(t);
        continue;
      }
      for (VertexSet rest = e; rest != 0; rest &= rest - 1) {
        next.push_back(t | (rest & -rest));
      }
    }
    transversals = minimal_sets(std::move(next));
  }
  return transversals;
}

MonomialIdeal di_ideal(const SimpleGraph& G) {
  const std::size_t n = G.vertex_count();
  std::vector<Monomial> gens;
  for (auto s : minimal_dominating_sets(G)) gens.push_back(vertex_monomial(n, s));
  MonomialIdeal by_sets(n, std::move(gens));
  if (!(by_sets == alexander_dual(ni_ideal(G)))) {
    throw InternalError("dominating sets disagree with the Alexander dual of NI(G)");
  }
  return by_sets;
}

MonomialIdeal partial_cover_ideal(const SimpleGraph& G, std::size_t t) {
  if (t < 1) throw InvalidArgument("partial cover ideals need t >= 1");
  const std::size_t n = G.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (G.degree(v) < t) {
      throw InvalidArgument("vertex " + std::to_string(v + 1) + " has degree " +
                            std::to_string(G.degree(v)) + " < " + std::to_string(t));
    }
  }
  std::vector<MonomialIdeal> parts;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (VertexSet s = G.neighbors(v); s != 0; s &= s - 1) {
      nb.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    }
    // Walk the t-subsets of the neighborhood via a selection mask.
    std::vector<bool> pick(nb.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(t), true);
    do {
      VertexSet mask = VertexSet{1} << v;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (pick[i]) mask |= VertexSet{1} << nb[i];
      }
      parts.push_back(MonomialIdeal::prime(n, mask));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return intersect_all(parts);
}

MonomialIdeal rim_intersection_ideal(std::size_t n, const std::set<std::size_t>& excluded) {
  if (n < 3) throw InvalidArgument("a rim needs at least 3 vertices");
  for (auto j : excluded) {
    if (j < 1 || j > n) throw InvalidArgument("excluded index " + std::to_string(j) + " is not a rim index");
  }
  std::vector<MonomialIdeal> parts;
  for (std::size_t j = 1; j <= n; ++j) {
    if (excluded.contains(j)) continue;
    const std::size_t i = j - 1;
    const VertexSet mask = (VertexSet{1} << ((i + n - 1) % n)) | (VertexSet{1} << i) |
                           (VertexSet{1} << ((i + 1) % n));
    parts.push_back(MonomialIdeal::prime(n, mask));
  }
  if (parts.empty()) return MonomialIdeal::unit(n);
  return intersect_all(parts);
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I) {
  if (I.is_zero()) throw InvalidArgument("the zero ideal has no generators");
  const std::size_t n = I.dimension();
  const auto& gens = I.generators();
  LinearRelationGraph out;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t l = k + 1; l < gens.size(); ++l) {
      // x_i u_k = x_j u_l iff u_l / gcd = x_i and u_k / gcd = x_j.
      const Monomial a = gens[l].colon(gens[k]);
      const Monomial b = gens[k].colon(gens[l]);
      if (a.degree() != 1 || b.degree() != 1) continue;
      const auto i = static_cast<std::size_t>(std::countr_zero(a.support_mask()));
      const auto j = static_cast<std::size_t>(std::countr_zero(b.support_mask()));
      adj[i][j] = adj[j][i] = true;
    }
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      out.edges.emplace_back(i, j);
      out.vertices |= (VertexSet{1} << i) | (VertexSet{1} << j);
      parent[find(i)] = find(j);
    }
  }
  out.r = static_cast<std::size_t>(std::popcount(out.vertices));
  for (std::size_t i = 0; i < n; ++i) {
    if (((out.vertices >> i) & 1U) != 0 && find(i) == i) ++out.s;
  }
  out.single_degree = I.min_degree() == I.max_degree();
  if (out.single_degree) out.depth_bound_range = out.r - out.s;
  return out;
}

}  // namespace monideal
