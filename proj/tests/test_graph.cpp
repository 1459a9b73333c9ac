#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "helpers.hpp"
#include "monideal/error.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"
#include "oracles.hpp"

using namespace monideal;
using testing_helpers::ideal;

namespace {

VertexSet bits(std::initializer_list<std::size_t> one_based) {
  VertexSet s = 0;
  for (auto v : one_based) s |= VertexSet{1} << (v - 1);
  return s;
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : G.edges()) gens.push_back(vertex_monomial(G.vertex_count(), bits({u + 1, v + 1})));
  return MonomialIdeal(G.vertex_count(), gens);
}

// Every graph family the tools know, up to n vertices.
std::vector<SimpleGraph> family_graphs(std::size_t max_n) {
  std::vector<SimpleGraph> out;
  for (std::size_t r = 1; r < max_n; ++r)
    for (std::size_t s = r; r + s <= max_n; ++s) out.push_back(complete_bipartite(r, s));
  for (std::size_t n = 3; n <= max_n; ++n) out.push_back(cycle(n));
  for (std::size_t rim = 5; rim + 1 <= max_n; rim += 2)
    for (std::size_t h = 1; rim + h <= max_n; ++h)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rim); ++mask) {
        if (std::popcount(mask) < 3) continue;
        HWheelSpec spec{h, rim, {}};
        for (std::size_t i = 0; i < rim; ++i)
          if ((mask >> i) & 1U) spec.radial.push_back(i + 1);
        out.push_back(build_h_wheel_unchecked(spec));
      }
  return out;
}

}  // namespace

TEST(Families, Shapes) {
  EXPECT_EQ(complete_bipartite(1, 1).edge_count(), 1U);
  EXPECT_EQ(cycle(3).edge_count(), 3U);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(cycle(3).degree(v), 2U);
  const auto K = complete_bipartite(2, 3);
  EXPECT_EQ(K.edge_count(), 6U);
  EXPECT_TRUE(K.adjacent(0, 2));
  EXPECT_FALSE(K.adjacent(0, 1));
  EXPECT_FALSE(K.adjacent(2, 3));
  EXPECT_THROW(cycle(2), InvalidArgument);
  EXPECT_THROW(complete_bipartite(0, 2), InvalidArgument);
}

TEST(SimpleGraph, RejectsLoopsAndDuplicates) {
  SimpleGraph G(3);
  G.add_edge(0, 1);
  EXPECT_THROW(G.add_edge(1, 0), InvalidArgument);
  EXPECT_THROW(G.add_edge(2, 2), InvalidArgument);
  EXPECT_THROW(G.add_edge(0, 3), InvalidArgument);
}

TEST(GraphJson, RoundTrip) {
  const auto G = parse_graph_json(R"({"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]})");
  EXPECT_EQ(G, cycle(5));
  EXPECT_EQ(parse_graph_json(graph_to_json(complete_bipartite(2, 3))), complete_bipartite(2, 3));
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[1,1]]})"), InvalidArgument);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[1,3]]})"), InvalidArgument);
  EXPECT_THROW(parse_graph_json("not json"), Error);
}

TEST(HWheel, MinimalValidInstance) {
  const HWheelSpec spec{1, 5, {1, 2, 3}};
  EXPECT_TRUE(has_three_consecutive_radial(spec));
  EXPECT_EQ(radial_lengths(spec), (std::vector<std::size_t>{1, 1, 3}));
  const auto G = build_h_wheel(spec);
  EXPECT_EQ(G.vertex_count(), 6U);
  EXPECT_EQ(G.neighbors(5), bits({1, 2, 3}));
  EXPECT_EQ(count_odd_cycles(G, bits({6, 1, 2, 3})), 2U);
}

TEST(HWheel, ConditionFourFailsWithoutTriangles) {
  const HWheelSpec spec{1, 5, {1, 3, 5}};
  try {
    (void)build_h_wheel(spec);
    FAIL() << "expected HWheelError";
  } catch (const HWheelError& e) {
    EXPECT_EQ(e.conditions(), std::vector<int>{4});
    EXPECT_NE(std::string(e.what()).find("condition (4)"), std::string::npos);
  }
  EXPECT_FALSE(has_three_consecutive_radial(spec));
}

// The four-center example: shape checks hold; condition (4), read over the
// subgraph induced by one center and its rim neighbours, only finds the
// triangle through x1 x2.
TEST(HWheel, FourCenterExampleShape) {
  const HWheelSpec spec{4, 7, {1, 2, 5}};
  const auto G = build_h_wheel_unchecked(spec);
  EXPECT_EQ(G.vertex_count(), 11U);
  const VertexSet rim = (VertexSet{1} << 7) - 1;
  const VertexSet centers = ((VertexSet{1} << 11) - 1) & ~rim;
  for (std::size_t y = 7; y < 11; ++y) {
    EXPECT_EQ(G.neighbors(y) & rim, bits({1, 2, 5}));
    EXPECT_EQ(G.neighbors(y) & centers, centers & ~(VertexSet{1} << y));
  }
  EXPECT_EQ(radial_lengths(spec), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_FALSE(has_three_consecutive_radial(spec));
  EXPECT_EQ(h_wheel_violations(G, rim, centers), std::vector<int>{4});
  EXPECT_EQ(count_odd_cycles(G, bits({8, 1, 2, 5})), 1U);
}

TEST(HWheel, OtherConditionsReported) {
  // No centers at all breaks everything but the rim test; an even rim breaks
  // that too. Two centers with different rim neighbourhoods break (3).
  const auto C6 = cycle(6);
  EXPECT_EQ(h_wheel_violations(C6, (VertexSet{1} << 6) - 1, 0), std::vector<int>({1, 2, 3, 4}));
  const auto C5 = cycle(5);
  EXPECT_EQ(h_wheel_violations(C5, 0b11111, 0), std::vector<int>({1, 3, 4}));
  auto G = build_h_wheel_unchecked({2, 5, {1, 2, 3}});
  SimpleGraph H(7, {});
  for (const auto& [u, v] : G.edges())
    if (!(u == 2 && v == 6)) H.add_edge(u, v);
  const auto viol = h_wheel_violations(H, 0b11111, 0b1100000);
  EXPECT_NE(std::find(viol.begin(), viol.end(), 3), viol.end());
  EXPECT_THROW(build_h_wheel({1, 5, {1, 2}}), HWheelError);
}

TEST(CountOddCycles, SmallGraphs) {
  EXPECT_EQ(count_odd_cycles(cycle(3), 0b111), 1U);
  EXPECT_EQ(count_odd_cycles(cycle(4), 0b1111), 0U);
  SimpleGraph K4(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) K4.add_edge(u, v);
  EXPECT_EQ(count_odd_cycles(K4, 0b1111), 4U);  // four triangles, no odd 4-cycles
}

TEST(NiIdeal, Examples) {
  EXPECT_EQ(ni_ideal(cycle(3)), ideal("a b c", {"a*b*c"}));
  const auto L = ni_ideal(complete_bipartite(2, 3));
  EXPECT_EQ(L, ideal("a b c d e", {"a*c*d*e", "b*c*d*e", "a*b*c", "a*b*d", "a*b*e"}));
  EXPECT_EQ(ni_ideal(complete_bipartite(1, 3)), ideal("a b c d", {"a*b", "a*c", "a*d"}));
}

TEST(DominatingSets, Examples) {
  EXPECT_EQ(minimal_dominating_sets(cycle(3)), (std::vector<VertexSet>{0b001, 0b010, 0b100}));
  const auto k22 = minimal_dominating_sets(complete_bipartite(2, 2));
  EXPECT_EQ(k22.size(), 6U);
  for (auto s : k22) EXPECT_EQ(std::popcount(s), 2);
  EXPECT_EQ(minimal_dominating_sets(complete_bipartite(1, 1)), (std::vector<VertexSet>{0b01, 0b10}));
}

TEST(DominatingSets, MatchBruteForceOnFamiliesAndRandomGraphs) {
  for (const auto& G : family_graphs(9)) {
    const auto got = minimal_dominating_sets(G);
    EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), oracle::minimal_dominating_sets(G));
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 9;
    SimpleGraph G(n);
    std::bernoulli_distribution p(0.4);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (p(rng)) G.add_edge(u, v);
    const auto got = minimal_dominating_sets(G);
    EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), oracle::minimal_dominating_sets(G));
  }
}

TEST(DiIdeal, EnumerationMatchesDualOnAllFamilies) {
  std::size_t checked = 0;
  for (const auto& G : family_graphs(9)) {
    EXPECT_EQ(di_ideal(G), alexander_dual(ni_ideal(G)));
    EXPECT_TRUE(is_squarefree(ni_ideal(G)));
    EXPECT_TRUE(is_squarefree(di_ideal(G)));
    ++checked;
  }
  EXPECT_GT(checked, 100U);
}

TEST(DiIdeal, BipartiteFormula) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t s = 1; s <= 3; ++s) {
      const std::size_t n = r + s;
      const VertexSet left = (VertexSet{1} << r) - 1;
      const VertexSet right = ((VertexSet{1} << n) - 1) & ~left;
      const auto I = MonomialIdeal::prime(n, left), J = MonomialIdeal::prime(n, right);
      const auto g = MonomialIdeal::principal(vertex_monomial(n, left));
      const auto f = MonomialIdeal::principal(vertex_monomial(n, right));
      EXPECT_EQ(di_ideal(complete_bipartite(r, s)), sum(sum(product(J, I), g), f)) << r << "," << s;
    }
}

TEST(DiIdeal, CycleIsRimIntersection) {
  EXPECT_EQ(di_ideal(cycle(3)), MonomialIdeal::maximal(3));
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(di_ideal(cycle(n)), rim_intersection_ideal(n, {}));
}

TEST(RimIntersection, Examples) {
  EXPECT_EQ(rim_intersection_ideal(5, {1, 2, 3}),
            intersect(ideal("a b c d e", {"c", "d", "e"}), ideal("a b c d e", {"d", "e", "a"})));
  EXPECT_TRUE(rim_intersection_ideal(5, {1, 2, 3, 4, 5}).is_unit());
  EXPECT_THROW(rim_intersection_ideal(2, {}), InvalidArgument);
  EXPECT_THROW(rim_intersection_ideal(5, {6}), InvalidArgument);
}

TEST(HWheel, DominatingIdealSplitsAsRimPlusCenterTimesH) {
  for (const auto& radial : {std::vector<std::size_t>{1, 2, 3}, std::vector<std::size_t>{1, 2, 3, 4},
                             std::vector<std::size_t>{2, 3, 4}}) {
    for (std::size_t h = 1; h <= 2; ++h) {
      const HWheelSpec spec{h, 5, radial};
      const auto G = build_h_wheel(spec);
      const std::size_t n = G.vertex_count();
      const auto rim = embed(di_ideal(cycle(5)), n);
      const VertexSet centers = ((VertexSet{1} << n) - 1) & ~VertexSet{0b11111};
      const auto J = MonomialIdeal::prime(n, centers);
      std::set<std::size_t> excluded(radial.begin(), radial.end());
      const auto H = embed(rim_intersection_ideal(5, excluded), n);
      EXPECT_EQ(di_ideal(G), sum(rim, product(J, H))) << h;
    }
  }
}

TEST(PartialCover, Examples) {
  for (const auto& G : {cycle(5), complete_bipartite(2, 3), cycle(4)})
    EXPECT_EQ(partial_cover_ideal(G, 1), alexander_dual(edge_ideal(G)));
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(partial_cover_ideal(cycle(n), 2), di_ideal(cycle(n)));
  const auto J2 = intersect_all(std::vector<MonomialIdeal>{
      ideal("a b c d", {"a", "b", "c"}), ideal("a b c d", {"b", "c", "d"}),
      ideal("a b c d", {"c", "d", "a"}), ideal("a b c d", {"d", "a", "b"})});
  EXPECT_EQ(partial_cover_ideal(cycle(4), 2), J2);
  EXPECT_THROW(partial_cover_ideal(cycle(5), 3), InvalidArgument);
}

TEST(LinearRelationGraph, Examples) {
  auto g = linear_relation_graph(ideal("x y z", {"x*y", "y*z", "x*z"}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(g.r, 3U);
  EXPECT_EQ(g.s, 1U);
  EXPECT_TRUE(g.single_degree);
  EXPECT_EQ(g.depth_bound_range, 2U);

  g = linear_relation_graph(ideal("x y z", {"x*y", "y*z"}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}}));
  EXPECT_EQ(g.r, 2U);
  EXPECT_EQ(g.s, 1U);

  g = linear_relation_graph(ideal("x y", {"x^2", "y^2"}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.r, 0U);
}

TEST(LinearRelationGraph, MatchesDoubleLoop) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto gens = oracle::random_gens(rng, n, 2, 5);
    const auto I = oracle::ideal_of(n, gens);
    const auto g = linear_relation_graph(I);
    const auto expect = oracle::linear_relation_edges(oracle::gens_of(I), n);
    EXPECT_EQ((std::set<std::pair<std::size_t, std::size_t>>(g.edges.begin(), g.edges.end())), expect);
    VertexSet touched = 0;
    for (const auto& [a, b] : expect) touched |= (VertexSet{1} << a) | (VertexSet{1} << b);
    EXPECT_EQ(g.vertices, touched);
    EXPECT_EQ(g.r, static_cast<std::size_t>(std::popcount(touched)));
  }
}
