#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "monideal/ideal.hpp"

namespace monideal {

/// Outcome of deciding a ∈ NP(I) = conv(G(I)) + R^n_{>=0}.
///
/// Feasible: weights λ (one per generator of I, canonical order) with λ >= 0,
/// Σλ = 1, Σ λ_i v_i <= a; power_witness is the lcm k of the λ denominators,
/// so a^k is divisible by ∏ g_i^{kλ_i} ∈ I^k.
///
/// Infeasible: an integral separating functional w >= 0 and threshold d with
/// w·v >= d for every generator exponent v but w·a < d.
struct NewtonMembershipCertificate {
  bool feasible = false;
  std::vector<mpq_class> weights;
  std::int64_t power_witness = 0;
  std::vector<std::int64_t> separator;
  std::int64_t threshold = 0;
};

/// Re-checks a certificate by direct monomial arithmetic.
bool validate_certificate(const MonomialIdeal& I, const Monomial& a,
                          const NewtonMembershipCertificate& cert);

/// a ∈ NP(I), decided with the exact rational simplex.
NewtonMembershipCertificate np_contains(const MonomialIdeal& I, const Monomial& a);

/// Membership oracle for t·NP(I) = NP(I^t) that remembers every separating
/// hyperplane it has produced; later queries try those first and only fall
/// back to the LP when none separates. Not thread-safe: use one per thread.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& I);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }

  /// a ∈ t·NP(I), i.e. a ∈ closure(I^t).
  bool contains_scaled(const Monomial& a, int t);
  /// The LP answer for a ∈ t·NP(I); weights are μ/t and sum to 1.
  NewtonMembershipCertificate certificate(const Monomial& a, int t);

  struct Cut {
    std::vector<std::int64_t> w;
    std::int64_t d;
  };
  /// Known valid inequalities w·x >= d for NP(I).
  const std::vector<Cut>& cuts() const noexcept { return cuts_; }
  std::size_t lp_calls() const noexcept { return lp_calls_; }

 private:
  MonomialIdeal ideal_;
  std::vector<Cut> cuts_;
  std::size_t lp_calls_ = 0;
};

/// Minimal generators of the integral closure of I (I nonzero).
MonomialIdeal integral_closure(const MonomialIdeal& I);

struct ClosednessResult {
  bool integrally_closed = true;
  /// A monomial in closure \ ideal, verified, when not closed.
  std::optional<Monomial> witness;
};

ClosednessResult is_integrally_closed(const MonomialIdeal& I);

/// Whether I^t is integrally closed. `It` may pass a precomputed I^t.
ClosednessResult is_power_integrally_closed(const MonomialIdeal& I, int t,
                                            const MonomialIdeal* It = nullptr);

struct NormalityOptions {
  /// Highest power to check; defaults to the decision bound n - 1.
  std::optional<int> bound;
  std::size_t threads = 0;  // 0: default_thread_count()
};

struct PowerCheck {
  int t = 0;
  bool integrally_closed = false;
};

struct NormalityReport {
  /// True only if every power up to the decision bound is integrally closed.
  bool normal = false;
  std::vector<PowerCheck> powers_checked;
  /// Some power t with a monomial in closure(I^t) \ I^t.
  std::optional<std::pair<int, Monomial>> failure_witness;
  int bound_used = 0;
  /// max(1, n - 1): integrally closed powers up to here imply normality.
  int decision_bound = 0;
  bool timed_out = false;

  /// Highest t such that I^1..I^t were all verified integrally closed.
  int verified_up_to() const;
};

/// Checks I^t for t = 1..bound. The unit ideal is normal by convention; the
/// zero ideal is rejected. A DeadlineExceeded during the scan yields a
/// partial report with timed_out set.
NormalityReport is_normal(const MonomialIdeal& I, const NormalityOptions& options = {});

}  // namespace monideal
