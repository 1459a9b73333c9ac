#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "helpers.hpp"
#include "monideal/closure.hpp"
#include "monideal/error.hpp"
#include "monideal/exact_lp.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"
#include "monideal/runtime.hpp"
#include "oracles.hpp"

using namespace monideal;
using testing_helpers::ideal;
using testing_helpers::mono;

namespace {

// w·v >= d on every generator and w·a < d.
bool separator_valid(const MonomialIdeal& I, const Monomial& a,
                     const NewtonMembershipCertificate& c) {
  auto dot = [&](const Monomial& m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += c.separator.at(i) * m[i];
    return s;
  };
  for (auto w : c.separator)
    if (w < 0) return false;
  for (const auto& g : I.generators())
    if (dot(g) < c.threshold) return false;
  return dot(a) < c.threshold;
}

}  // namespace

TEST(ExactLp, FeasibleAndInfeasibleSystems) {
  using lp::Matrix;
  using lp::Rational;
  // x + y = 1, x - y = 0  ->  x = y = 1/2.
  Matrix A(2, 2);
  A(0, 0) = 1;
  A(0, 1) = 1;
  A(1, 0) = 1;
  A(1, 1) = -1;
  std::vector<Rational> b{1, 0};
  auto r = lp::solve_feasibility(A, b);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.x[0], Rational(1, 2));
  EXPECT_EQ(r.x[1], Rational(1, 2));
  // x + y = 1, x + y = 2 has no solution; the Farkas vector proves it.
  A(1, 1) = 1;
  b = {1, 2};
  r = lp::solve_feasibility(A, b);
  ASSERT_FALSE(r.feasible);
  ASSERT_EQ(r.farkas.size(), 2U);
  for (std::size_t c = 0; c < 2; ++c) EXPECT_LE(r.farkas[0] * A(0, c) + r.farkas[1] * A(1, c), 0);
  EXPECT_GT(r.farkas[0] * b[0] + r.farkas[1] * b[1], 0);
}

TEST(NpContains, Examples) {
  const auto I = ideal("x y", {"x^2", "y^2"});
  auto c = np_contains(I, mono(I, "x*y"));
  ASSERT_TRUE(c.feasible);
  EXPECT_EQ(c.weights, (std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_EQ(c.power_witness, 2);
  EXPECT_TRUE(validate_certificate(I, mono(I, "x*y"), c));

  c = np_contains(I, mono(I, "x"));
  EXPECT_FALSE(c.feasible);
  EXPECT_TRUE(separator_valid(I, mono(I, "x"), c));
  EXPECT_TRUE(validate_certificate(I, mono(I, "x"), c));

  const auto P = ideal("x", {"x"});
  c = np_contains(P, mono(P, "x"));
  ASSERT_TRUE(c.feasible);
  EXPECT_EQ(c.weights, (std::vector<mpq_class>{1}));
  EXPECT_EQ(c.power_witness, 1);

  EXPECT_THROW(np_contains(MonomialIdeal::zero(2), Monomial(2)), InvalidArgument);
}

TEST(NpContains, AgreesWithBruteForcePowers) {
  std::mt19937_64 rng(7);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto g = oracle::random_gens(rng, n, 3, 4);
    const auto I = oracle::ideal_of(n, g);
    const auto a = oracle::random_vec(rng, n, 3);
    const auto c = np_contains(I, oracle::mono_of(a));
    ASSERT_TRUE(validate_certificate(I, oracle::mono_of(a), c));
    if (c.feasible) {
      ++feasible;
      const int k = static_cast<int>(c.power_witness);
      ASSERT_GE(k, 1);
      EXPECT_TRUE(oracle::power_contains(g, k, oracle::scale(a, k)));
    } else {
      EXPECT_TRUE(separator_valid(I, oracle::mono_of(a), c));
      for (int k = 1; k <= 6; ++k) EXPECT_FALSE(oracle::power_contains(g, k, oracle::scale(a, k)));
    }
  }
  EXPECT_GT(feasible, 50);
}

TEST(IntegralClosure, Examples) {
  EXPECT_EQ(integral_closure(ideal("x y", {"x^2", "y^2"})), ideal("x y", {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(integral_closure(ideal("x y", {"x", "y"})), ideal("x y", {"x", "y"}));
  EXPECT_EQ(integral_closure(ideal("x y", {"x^3", "y^3"})),
            ideal("x y", {"x^3", "x^2*y", "x*y^2", "y^3"}));
  EXPECT_THROW(integral_closure(MonomialIdeal::zero(2)), InvalidArgument);
  EXPECT_TRUE(integral_closure(MonomialIdeal::unit(2)).is_unit());
}

TEST(IntegralClosure, ClosednessExamples) {
  EXPECT_TRUE(is_integrally_closed(ideal("x y", {"x^2", "x*y", "y^2"})).integrally_closed);
  const auto I = ideal("x y", {"x^2", "y^2"});
  const auto r = is_integrally_closed(I);
  EXPECT_FALSE(r.integrally_closed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, mono(I, "x*y"));
  for (std::uint64_t mask = 1; mask < 16; ++mask)
    EXPECT_TRUE(is_integrally_closed(MonomialIdeal::prime(4, mask)).integrally_closed);
}

TEST(IntegralClosure, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto g = oracle::random_gens(rng, n, 3, 4);
    const auto I = oracle::ideal_of(n, g);
    const auto C = integral_closure(I);
    EXPECT_TRUE(is_subset(I, C));
    EXPECT_EQ(integral_closure(C), C);
    // Anything brute force puts in the closure must be there.
    oracle::for_box(oracle::max_exponents(g, n), [&](const oracle::Vec& a) {
      for (int k = 1; k <= 4; ++k)
        if (oracle::power_contains(g, k, oracle::scale(a, k))) {
          ASSERT_TRUE(contains(C, oracle::mono_of(a)));
          break;
        }
    });
    // Every closure generator has a validated power witness.
    for (const auto& u : C.generators()) {
      const auto c = np_contains(I, u);
      ASSERT_TRUE(c.feasible);
      EXPECT_TRUE(oracle::power_contains(g, static_cast<int>(c.power_witness),
                                         oracle::scale(oracle::vec_of(u), static_cast<int>(c.power_witness))));
    }
    // Monotone: I ⊆ I + J gives closure(I) ⊆ closure(I + J).
    const auto J = sum(I, oracle::ideal_of(n, oracle::random_gens(rng, n, 3, 2)));
    EXPECT_TRUE(is_subset(C, integral_closure(J)));
  }
}

TEST(Normality, Examples) {
  const auto ni = ni_ideal(complete_bipartite(2, 2));
  auto r = is_normal(ni);
  EXPECT_TRUE(r.normal);
  EXPECT_EQ(r.decision_bound, 3);
  EXPECT_EQ(r.bound_used, 3);
  EXPECT_EQ(r.verified_up_to(), 3);

  EXPECT_TRUE(is_normal(di_ideal(cycle(5))).normal);

  const auto I = ideal("x y", {"x^2", "y^2"});
  r = is_normal(I);
  EXPECT_FALSE(r.normal);
  ASSERT_TRUE(r.failure_witness);
  EXPECT_EQ(r.failure_witness->first, 1);
  EXPECT_EQ(r.failure_witness->second, mono(I, "x*y"));
  EXPECT_EQ(r.verified_up_to(), 0);
}

TEST(Normality, PrincipalAndPrimesAreNormal) {
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const auto r = is_normal(MonomialIdeal::prime(4, mask));
    EXPECT_TRUE(r.normal);
    for (const auto& p : r.powers_checked) EXPECT_TRUE(p.integrally_closed);
  }
  for (const auto& u : {Monomial{2, 1, 0}, Monomial{1, 1, 1}, Monomial{0, 0, 3}}) {
    EXPECT_TRUE(is_normal(MonomialIdeal::principal(u)).normal);
  }
  EXPECT_TRUE(is_normal(MonomialIdeal::unit(3)).normal);
  EXPECT_THROW(is_normal(MonomialIdeal::zero(3)), InvalidArgument);
}

TEST(Normality, LowerBoundIsNotAGlobalClaim) {
  const auto r = is_normal(di_ideal(cycle(5)), {.bound = 2});
  EXPECT_FALSE(r.normal);
  EXPECT_EQ(r.verified_up_to(), 2);
  EXPECT_EQ(r.decision_bound, 4);
  EXPECT_FALSE(r.failure_witness);
}

TEST(Normality, ExpiredDeadlineGivesPartialReport) {
  const auto I = di_ideal(cycle(6));
  const ScopedDeadline d(std::chrono::steady_clock::now() - std::chrono::seconds(1));
  const auto r = is_normal(I);
  EXPECT_TRUE(r.timed_out);
  EXPECT_FALSE(r.normal);
}

TEST(Normality, ThreadCountDoesNotChangeResults) {
  for (const auto& I : {di_ideal(cycle(6)), ni_ideal(complete_bipartite(3, 3)),
                        ideal("x y z", {"x^3", "y^3", "z^3"})}) {
    NormalityOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = is_normal(I, one);
    const auto b = is_normal(I, four);
    EXPECT_EQ(a.normal, b.normal);
    EXPECT_EQ(a.failure_witness, b.failure_witness);
    EXPECT_EQ(a.verified_up_to(), b.verified_up_to());
  }
}

TEST(Normality, WitnessIsInClosureButNotInPower) {
  const auto I = ni_ideal(complete_bipartite(3, 3));
  const auto r = is_normal(I);
  ASSERT_FALSE(r.normal);
  ASSERT_TRUE(r.failure_witness);
  const auto& [t, u] = *r.failure_witness;
  const auto g = oracle::gens_of(I);
  EXPECT_FALSE(oracle::power_contains(g, t, oracle::vec_of(u)));
  // u^2 ∈ (I^t)^2 = I^{2t}.
  EXPECT_TRUE(oracle::power_contains(g, 2 * t, oracle::scale(oracle::vec_of(u), 2)));
}
