#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"
#include "oracles.hpp"

using namespace monideal;
using testing_helpers::ideal;

namespace {

std::vector<MonomialIdeal> component_ideals(const std::vector<IrreducibleComponent>& cs) {
  std::vector<MonomialIdeal> out;
  for (const auto& c : cs) out.push_back(c.to_ideal());
  return out;
}

std::set<std::uint64_t> masks(const std::vector<PrimeSupport>& ps) {
  std::set<std::uint64_t> out;
  for (const auto& p : ps) out.insert(p.mask());
  return out;
}

PrimeSupport P(std::initializer_list<std::size_t> vars) {
  std::vector<std::size_t> v(vars);
  return PrimeSupport::of_indices(v);
}

}  // namespace

TEST(Irreducible, Examples) {
  const auto I = ideal("x y", {"x^2", "x*y"});
  auto d = component_ideals(irreducible_decomposition(I));
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], ideal("x y", {"x"}));
  EXPECT_EQ(d[1], ideal("x y", {"x^2", "y"}));

  d = component_ideals(irreducible_decomposition(ideal("x y", {"x*y"})));
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], ideal("x y", {"x"}));
  EXPECT_EQ(d[1], ideal("x y", {"y"}));

  d = component_ideals(irreducible_decomposition(ideal("x y", {"x", "y"})));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0], ideal("x y", {"x", "y"}));

  EXPECT_THROW(irreducible_decomposition(MonomialIdeal::unit(2)), InvalidArgument);
  EXPECT_THROW(irreducible_decomposition(MonomialIdeal::zero(2)), InvalidArgument);
}

TEST(Irreducible, ComponentsArePurePowers) {
  const auto d = irreducible_decomposition(ideal("x y z", {"x^2*y", "y^3*z", "x*z^2"}));
  for (const auto& c : d) {
    const auto J = c.to_ideal();
    EXPECT_EQ(J.size(), c.prime().count());
    for (const auto& g : J.generators()) EXPECT_EQ(std::popcount(g.support_mask()), 1);
  }
}

TEST(Ass, Examples) {
  EXPECT_EQ(associated_primes(ideal("x y", {"x^2", "x*y"})),
            (std::vector<PrimeSupport>{P({0}), P({0, 1})}));
  EXPECT_EQ(minimal_primes(ideal("x y", {"x^2", "x*y"})), std::vector<PrimeSupport>{P({0})});
  const auto tri = ideal("x y z", {"x*y", "y*z", "x*z"});
  EXPECT_EQ(masks(minimal_primes(tri)), (std::set<std::uint64_t>{0b011, 0b110, 0b101}));
  const auto D = di_ideal(cycle(4));
  EXPECT_EQ(minimal_primes(D), associated_primes(D));
}

TEST(Ass, NeighborhoodCubeHasMaximalIdeal) {
  const auto L = ni_ideal(complete_bipartite(2, 3));
  const auto m = PrimeSupport::full(5);
  auto has_m = [&](const MonomialIdeal& J) {
    const auto a = associated_primes(J);
    return std::find(a.begin(), a.end(), m) != a.end();
  };
  EXPECT_FALSE(has_m(L));
  EXPECT_FALSE(has_m(power(L, 2)));
  EXPECT_TRUE(has_m(power(L, 3)));
  EXPECT_EQ(associated_primes(L), minimal_primes(L));
}

TEST(Ass, MatchesColonScanOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto g = oracle::random_gens(rng, n, 3, 4);
    const auto I = oracle::ideal_of(n, g);
    EXPECT_EQ(masks(associated_primes(I)), oracle::ass_by_colon_scan(g, n)) << format_ideal_inline(I);
  }
}

TEST(Ass, WitnessesAreExact) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto I = oracle::ideal_of(n, oracle::random_gens(rng, n, 3, 5));
    for (const auto& a : associated_primes_with_witnesses(I)) {
      EXPECT_EQ(colon(I, a.witness), a.prime.to_ideal(n));
    }
  }
  for (const auto& a : associated_primes_with_witnesses(power(di_ideal(cycle(5)), 3)))
    EXPECT_EQ(colon(power(di_ideal(cycle(5)), 3), a.witness), a.prime.to_ideal(5));
}

TEST(Decomposition, ReconstructsAndMethodsAgree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto I = oracle::ideal_of(n, oracle::random_gens(rng, n, 3, 5));
    const auto a = irreducible_decomposition(I, DecompositionMethod::splitting);
    const auto b = irreducible_decomposition(I, DecompositionMethod::corners);
    EXPECT_EQ(a, b);
    EXPECT_EQ(intersect_all(component_ideals(a)), I);
    // Irredundant: no component contains another.
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(is_subset(a[i].to_ideal(), a[j].to_ideal()));
        }
  }
}

TEST(Symbolic, Examples) {
  const auto tri = ideal("x y z", {"x*y", "y*z", "x*z"});
  EXPECT_EQ(symbolic_power(tri, 1), tri);
  const Monomial xyz{1, 1, 1};
  EXPECT_TRUE(contains(symbolic_power(tri, 2), xyz));
  EXPECT_FALSE(contains(power(tri, 2), xyz));
  const auto I = intersect(ideal("x y z", {"x", "y"}), ideal("x y z", {"y", "z"}));
  EXPECT_EQ(symbolic_power(I, 2),
            intersect(power(ideal("x y z", {"x", "y"}), 2), power(ideal("x y z", {"y", "z"}), 2)));
  EXPECT_THROW(symbolic_power(ideal("x y", {"x^2"}), 2), InvalidArgument);
}

TEST(Symbolic, ContainsOrdinaryPower) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto I = oracle::ideal_of(n, oracle::random_squarefree(rng, n, 4));
    if (!I.is_proper()) continue;
    EXPECT_EQ(symbolic_power(I, 1), I);
    EXPECT_EQ(associated_primes(I), minimal_primes(I));
    for (int k = 2; k <= 3; ++k) EXPECT_TRUE(is_subset(power(I, k), symbolic_power(I, k)));
  }
}

TEST(DepthZero, Examples) {
  const auto L = ni_ideal(complete_bipartite(2, 3));
  EXPECT_TRUE(depth_zero(power(L, 3)));
  EXPECT_FALSE(depth_zero(L));
  EXPECT_TRUE(depth_zero(power(ideal("x y z", {"x*y", "y*z", "x*z"}), 2)));
  EXPECT_THROW(depth_zero(MonomialIdeal::unit(3)), InvalidArgument);
}
