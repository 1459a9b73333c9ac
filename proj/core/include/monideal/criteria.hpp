#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/closure.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Normality-transfer constructions, each with its hypotheses.
enum class CriterionKind {
  /// L = I + x_d^c H; I, H, I + H normal; x_d divides no generator of I, H.
  add_variable_power,
  /// L = I + hH; I, H, I + H normal; h coprime to every generator of I, H.
  add_monomial,
  /// L = I + JH; I ⊆ H normal; G(J) pairwise coprime and coprime to G(I), G(H).
  add_ideal,
  /// L = IS ∩ (x_n, x_{n+1}^ℓ) in one more variable; I squarefree normal.
  meet_power,
  /// L = IS ∩ (x_n, ..., x_{n+m}) in m more variables; I squarefree normal.
  meet_variables,
  /// L = I ∩ (x_{n-1}, x_n) (the last two variables); I squarefree normal and
  /// I ∩ (x_{n-1}) + (I : x_n) normal.
  meet_last_pair,
};

std::string_view to_string(CriterionKind kind);
/// Inverse of to_string; nullopt for unknown names.
std::optional<CriterionKind> parse_criterion_kind(std::string_view name);
const std::vector<CriterionKind>& all_criterion_kinds();

struct CriterionInputs {
  MonomialIdeal I;
  std::optional<MonomialIdeal> H;
  std::optional<MonomialIdeal> J;
  std::optional<Monomial> h;
  /// 0-based variable d for add_variable_power.
  std::optional<std::size_t> var;
  int c = 1;
  int ell = 1;
  int m = 1;
};

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

enum class CriterionVerdict {
  /// Hypotheses hold and L was integrally closed through the bound.
  verified,
  /// Hypotheses hold but some power of L is not integrally closed.
  refuted,
  /// Some hypothesis failed; nothing is claimed about L.
  inapplicable,
  timed_out,
};

std::string_view to_string(CriterionVerdict v);

struct CriterionReport {
  CriterionKind kind = CriterionKind::add_variable_power;
  std::vector<HypothesisCheck> hypotheses;
  bool applicable = false;
  std::optional<MonomialIdeal> L;
  std::optional<NormalityReport> conclusion;
  CriterionVerdict verdict = CriterionVerdict::inapplicable;
};

struct CriterionOptions {
  /// Highest power of L to check; defaults to its decision bound.
  std::optional<int> bound;
  /// Highest power checked for each normality hypothesis; defaults to the
  /// decision bound of the ideal in question.
  std::optional<int> hypothesis_bound;
};

/// Builds L for the kind. Throws InvalidArgument when an input the kind
/// needs is missing or has the wrong shape.
MonomialIdeal construct_criterion_ideal(CriterionKind kind, const CriterionInputs& in);

CriterionReport verify_criterion(CriterionKind kind, const CriterionInputs& in,
                                 const CriterionOptions& options = {});

/// A random instance whose hypotheses hold, drawn from prime, principal and
/// disjoint-prime-product ideals over at most `max_vars` variables. Uses
/// rejection sampling on the normality hypotheses.
CriterionInputs random_criterion_instance(CriterionKind kind, std::mt19937_64& rng,
                                          std::size_t max_vars = 5);

}  // namespace monideal
