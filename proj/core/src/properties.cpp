#include "monideal/properties.hpp"

#include <algorithm>

#include "monideal/error.hpp"
#include "monideal/runtime.hpp"

namespace monideal {

namespace {

void require_bound(int K, int least = 1) {
  if (K < least) throw InvalidArgument("property bound must be >= " + std::to_string(least));
}

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw InvalidArgument("property checks need a nonzero proper ideal");
}

void require_squarefree(const MonomialIdeal& I) {
  if (!is_squarefree(I)) throw InvalidArgument("this property is only checked for squarefree ideals");
}

std::vector<PrimeSupport> difference(const std::vector<PrimeSupport>& a,
                                     const std::vector<PrimeSupport>& b) {
  std::vector<PrimeSupport> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<AssPower> ass_of_powers(const MonomialIdeal& I, int K) {
  std::vector<AssPower> out;
  MonomialIdeal P = I;
  for (int k = 1; k <= K; ++k) {
    if (k > 1) P = product(P, I);
    out.push_back({k, associated_primes(P)});
  }
  return out;
}

// Ass(I^m) = Min(I) for m = 1..K, as a verdict.
PropertyVerdict ntf_from(const std::vector<AssPower>& profile,
                         const std::vector<PrimeSupport>& min, int K) {
  PropertyVerdict v;
  v.property = Property::ntf;
  v.bound = K;
  v.evidence = profile;
  v.holds = true;
  for (const auto& [k, ass] : profile) {
    auto extra = difference(ass, min);
    if (!extra.empty()) {
      v.holds = false;
      v.counterexample = Counterexample{k, std::nullopt, std::move(extra),
                                        "Ass(I^k) has primes outside Min(I)"};
      break;
    }
    v.holds_up_to = k;
  }
  return v;
}

}  // namespace

std::string to_string(Property p) {
  switch (p) {
    case Property::persistence: return "persistence";
    case Property::strong_persistence: return "strong_persistence";
    case Property::symbolic_strong_persistence: return "symbolic_strong_persistence";
    case Property::ntf: return "ntf";
    case Property::nntf: return "nntf";
  }
  return "unknown";
}

PropertyVerdict strong_persistence(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_bound(K);
  PropertyVerdict v;
  v.property = Property::strong_persistence;
  v.bound = K;
  v.holds = true;
  MonomialIdeal Pk = I;
  for (int k = 1; k <= K; ++k) {
    MonomialIdeal next = product(Pk, I);
    MonomialIdeal quotient = colon_ideal(next, I);
    if (!(quotient == Pk)) {
      v.holds = false;
      v.counterexample = Counterexample{k, std::move(quotient), {}, "(I^{k+1} : I) != I^k"};
      break;
    }
    v.holds_up_to = k;
    Pk = std::move(next);
  }
  return v;
}

PropertyVerdict persistence(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_bound(K);
  PropertyVerdict v;
  v.property = Property::persistence;
  v.bound = K;
  v.evidence = ass_of_powers(I, K);
  v.holds = true;
  v.holds_up_to = 1;
  for (int k = 1; k < K; ++k) {
    auto lost = difference(v.evidence[k - 1].ass, v.evidence[k].ass);
    if (!lost.empty()) {
      v.holds = false;
      v.counterexample = Counterexample{k, std::nullopt, std::move(lost),
                                        "primes of Ass(I^k) missing from Ass(I^{k+1})"};
      break;
    }
    v.holds_up_to = k + 1;
  }
  return v;
}

PropertyVerdict symbolic_strong_persistence(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_squarefree(I);
  require_bound(K);
  PropertyVerdict v;
  v.property = Property::symbolic_strong_persistence;
  v.bound = K;
  v.holds = true;
  const MonomialIdeal first = symbolic_power(I, 1);
  MonomialIdeal Sk = first;
  for (int k = 1; k <= K; ++k) {
    MonomialIdeal next = symbolic_power(I, k + 1);
    MonomialIdeal quotient = colon_ideal(next, first);
    if (!(quotient == Sk)) {
      v.holds = false;
      v.counterexample = Counterexample{k, std::move(quotient), {},
                                        "(I^{(k+1)} : I^{(1)}) != I^{(k)}"};
      break;
    }
    v.holds_up_to = k;
    Sk = std::move(next);
  }
  return v;
}

PropertyVerdict normally_torsion_free(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_squarefree(I);
  require_bound(K);
  return ntf_from(ass_of_powers(I, K), minimal_primes(I), K);
}

PropertyVerdict nearly_ntf(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_squarefree(I);
  require_bound(K);
  const auto min = minimal_primes(I);
  PropertyVerdict v;
  v.property = Property::nntf;
  v.bound = K;
  v.evidence = ass_of_powers(I, K);
  v.holds = true;
  for (const auto& [k, ass] : v.evidence) {
    const auto extra = difference(ass, min);
    if (!extra.empty() && !v.threshold) {
      v.threshold = k;
    }
    for (const auto& p : extra) {
      if (!v.extra_prime) v.extra_prime = p;
      if (!(p == *v.extra_prime)) {
        v.holds = false;
        v.counterexample = Counterexample{k, std::nullopt, extra,
                                          "a second prime outside Min(I) appears"};
        break;
      }
    }
    if (!v.holds) break;
    v.holds_up_to = k;
  }
  if (v.holds && !v.threshold) v.notes = "normally torsion-free up to the bound";

  bool all_local = true;
  for (std::size_t i = 0; i < I.dimension() && all_local; ++i) {
    const MonomialIdeal local = set_variable_to_one(I, i);
    if (local.is_unit()) continue;
    all_local = ntf_from(ass_of_powers(local, K), minimal_primes(local), K).holds;
  }
  v.localizations_ntf = all_local;
  return v;
}

AssProfile ass_profile(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_bound(K);
  AssProfile profile;
  profile.bound = K;
  profile.per_power = ass_of_powers(I, K);
  profile.min_primes = minimal_elements(profile.per_power.front().ass);
  return profile;
}

std::optional<int> depth_zero_onset(const MonomialIdeal& I, int K) {
  require_proper_nonzero(I);
  require_bound(K);
  const auto full = PrimeSupport::full(I.dimension());
  MonomialIdeal P = I;
  for (int k = 1; k <= K; ++k) {
    if (k > 1) P = product(P, I);
    const auto ass = associated_primes(P);
    if (std::find(ass.begin(), ass.end(), full) != ass.end()) return k;
  }
  return std::nullopt;
}

}  // namespace monideal
