#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

enum class Property {
  persistence,
  strong_persistence,
  symbolic_strong_persistence,
  ntf,
  nntf,
};

std::string to_string(Property p);

/// The failing power and what went wrong there.
struct Counterexample {
  int k = 0;
  /// The ideal that should have matched (e.g. (I^{k+1} : I) when it differs
  /// from I^k).
  std::optional<MonomialIdeal> ideal;
  /// Offending primes (lost, or extra beyond what the property allows).
  std::vector<PrimeSupport> primes;
  std::string what;
};

/// A bounded verdict: `holds` means "holds for every k checked", never more.
struct PropertyVerdict {
  Property property = Property::persistence;
  bool holds = false;
  /// Largest k through which the property was verified.
  int holds_up_to = 0;
  int bound = 0;
  std::optional<Counterexample> counterexample;
  /// Ass(I^k) per power when the check computed them.
  std::vector<AssPower> evidence;
  /// nntf only: first power with an associated prime outside Min(I), and
  /// that single prime.
  std::optional<int> threshold;
  std::optional<PrimeSupport> extra_prime;
  /// nntf only: every I(m \ {x_i}) is normally torsion-free up to the bound.
  std::optional<bool> localizations_ntf;
  std::string notes;
};

/// (I^{k+1} : I) = I^k for k = 1..K.
PropertyVerdict strong_persistence(const MonomialIdeal& I, int K = 4);
/// Ass(I^k) ⊆ Ass(I^{k+1}) for consecutive powers among I^1..I^K.
PropertyVerdict persistence(const MonomialIdeal& I, int K = 4);
/// (I^{(k+1)} : I^{(1)}) = I^{(k)} for k = 1..K; squarefree I only.
PropertyVerdict symbolic_strong_persistence(const MonomialIdeal& I, int K = 4);
/// Ass(I^m) = Min(I) for m = 1..K; squarefree I only.
PropertyVerdict normally_torsion_free(const MonomialIdeal& I, int K = 4);
/// Ass(I^m) = Min(I) below some threshold and ⊆ Min(I) ∪ {p} from there on,
/// for one fixed prime p, over m = 1..K; squarefree I only. Also records
/// whether each localization I(m \ {x_i}) is normally torsion-free to K,
/// which is a sufficient condition.
PropertyVerdict nearly_ntf(const MonomialIdeal& I, int K = 4);

AssProfile ass_profile(const MonomialIdeal& I, int K = 4);
/// Least k <= K with the maximal ideal associated to I^k.
std::optional<int> depth_zero_onset(const MonomialIdeal& I, int K = 4);

}  // namespace monideal
