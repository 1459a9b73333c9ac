#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}): exponents[i] > 0 marks a pure power;
/// zero means the variable does not appear.
struct IrreducibleComponent {
  std::vector<Exponent> exponents;

  std::uint64_t support_mask() const noexcept;
  PrimeSupport prime() const { return PrimeSupport(support_mask()); }
  MonomialIdeal to_ideal() const;
  /// Every pure power of `other` lies in this component.
  bool contains(const IrreducibleComponent& other) const noexcept;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

enum class DecompositionMethod {
  /// Recursive splitting of mixed generators, memoized on sub-ideals.
  splitting,
  /// Maximal standard monomials of I + (x_i^{D_i + 1}), D = max exponents.
  corners,
};

/// Irredundant irreducible decomposition of a nonzero proper ideal, sorted by
/// (support, exponents). The intersection is re-checked against I.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I, DecompositionMethod method = DecompositionMethod::splitting);

enum class WitnessSource {
  /// Read off the matching irreducible component.
  component,
  /// Found by scanning the exponent box.
  box_search,
};

struct AssociatedPrime {
  PrimeSupport prime;
  /// colon(I, witness) == prime, checked.
  Monomial witness;
  WitnessSource source = WitnessSource::component;
};

/// Ass(R/I) with one verified witness per prime, sorted by prime.
std::vector<AssociatedPrime> associated_primes_with_witnesses(const MonomialIdeal& I);
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I);
/// Inclusion-minimal associated primes.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I);
std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes);

/// The intersection of p^k over p in Min(I), for squarefree proper I.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int k);

/// The maximal ideal of all variables is associated to I.
bool depth_zero(const MonomialIdeal& I);

struct AssPower {
  int k = 0;
  std::vector<PrimeSupport> ass;
};

struct AssProfile {
  std::vector<AssPower> per_power;
  std::vector<PrimeSupport> min_primes;
  int bound = 0;
};

}  // namespace monideal
