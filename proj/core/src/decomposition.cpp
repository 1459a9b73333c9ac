#include "monideal/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "monideal/error.hpp"
#include "monideal/runtime.hpp"

namespace monideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero()) throw InvalidArgument("the zero ideal has no decomposition here");
  if (I.is_unit()) throw InvalidArgument("the unit ideal has no associated primes");
}

bool component_less(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  const PrimeSupport pa = a.prime(), pb = b.prime();
  if (!(pa == pb)) return pa < pb;
  return a.exponents < b.exponents;
}

using Components = std::vector<IrreducibleComponent>;

// Keeps the inclusion-minimal components, canonically sorted.
Components irredundant(Components cs) {
  std::sort(cs.begin(), cs.end(), component_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  Components out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cs.size() && !redundant; ++j) {
      redundant = j != i && cs[i].contains(cs[j]);
    }
    if (!redundant) out.push_back(cs[i]);
  }
  return out;
}

class Splitter {
 public:
  const Components& run(const MonomialIdeal& J) {
    if (const auto it = memo_.find(J); it != memo_.end()) return it->second;
    poll_deadline();
    const std::size_t n = J.dimension();
    const Monomial* mixed = nullptr;
    for (const auto& g : J.generators()) {
      if (std::popcount(g.support_mask()) < 2) continue;
      if (mixed == nullptr ||
          std::lexicographical_compare(mixed->exponents().begin(), mixed->exponents().end(),
                                       g.exponents().begin(), g.exponents().end())) {
        mixed = &g;
      }
    }
    Components out;
    if (mixed == nullptr) {
      IrreducibleComponent leaf{std::vector<Exponent>(n, 0)};
      for (const auto& g : J.generators()) {
        const auto i = static_cast<std::size_t>(std::countr_zero(g.support_mask()));
        leaf.exponents[i] = g[i];
      }
      out.push_back(std::move(leaf));
    } else {
      const Monomial u = *mixed;
      std::size_t var = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (u[i] > u[var]) var = i;
      }
      const Monomial pure = Monomial::variable(n, var, u[var]);
      const Monomial rest = u.quotient(pure);
      Components left = run(sum(J, MonomialIdeal::principal(pure)));
      const Components& right = run(sum(J, MonomialIdeal::principal(rest)));
      left.insert(left.end(), right.begin(), right.end());
      out = irredundant(std::move(left));
    }
    return memo_.emplace(J, std::move(out)).first->second;
  }

 private:
  std::unordered_map<MonomialIdeal, Components, MonomialIdealHash> memo_;
};

// Maximal exponent vectors m in the box [0, D] outside I with m + e_i in I
// for every i with m_i < D_i. The last coordinate is handled in one sweep:
// along it the points outside I form an initial segment.
class CornerScanner {
 public:
  explicit CornerScanner(const MonomialIdeal& I)
      : I_(I),
        index_(I.generators(), I.dimension()),
        n_(I.dimension()),
        box_(I.max_exponents()),
        cur_(n_),
        bits_(n_ + 1) {}

  std::vector<Monomial> run() {
    bits_[0] = index_.all();
    if (n_ > 0) descend(0);
    return std::move(corners_);
  }

 private:
  void descend(std::size_t j) {
    if (j + 1 == n_) {
      last(j);
      return;
    }
    poll_deadline();
    for (Exponent v = 0; v <= box_[j]; ++v) {
      cur_[j] = v;
      bits_[j + 1] = bits_[j];
      index_.refine(bits_[j + 1], j, v);
      descend(j + 1);
    }
  }

  void last(std::size_t j) {
    Exponent top = -1;
    for (Exponent v = 0; v <= box_[j]; ++v) {
      auto bits = bits_[j];
      index_.refine(bits, j, v);
      if (DivisorIndex::any(bits)) break;
      top = v;
    }
    if (top < 0) return;
    cur_[j] = top;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (cur_[i] == box_[i]) continue;
      ++cur_[i];
      const bool in = index_.divisible(Monomial(std::span<const Exponent>(cur_)));
      --cur_[i];
      if (!in) return;
    }
    corners_.emplace_back(std::span<const Exponent>(cur_));
  }

  const MonomialIdeal& I_;
  DivisorIndex index_;
  std::size_t n_;
  std::vector<Exponent> box_;
  std::vector<Exponent> cur_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<Monomial> corners_;
};

IrreducibleComponent component_of_corner(const Monomial& m, std::span<const Exponent> box) {
  IrreducibleComponent c{std::vector<Exponent>(m.size(), 0)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < box[i]) c.exponents[i] = m[i] + 1;
  }
  return c;
}

Monomial corner_of_component(const IrreducibleComponent& c, std::span<const Exponent> box) {
  std::vector<Exponent> e(c.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = c.exponents[i] > 0 ? c.exponents[i] - 1 : box[i];
  }
  return Monomial(std::span<const Exponent>(e));
}

bool colon_is_prime(const MonomialIdeal& I, const Monomial& v, const PrimeSupport& p) {
  return colon(I, v) == p.to_ideal(I.dimension());
}

std::optional<Monomial> box_search(const MonomialIdeal& I, const PrimeSupport& p) {
  const auto box = I.max_exponents();
  const std::size_t n = I.dimension();
  std::vector<Exponent> e(n, 0);
  while (true) {
    poll_deadline();
    const Monomial v{std::span<const Exponent>(e)};
    if (colon_is_prime(I, v, p)) return v;
    std::size_t j = 0;
    while (j < n && e[j] == box[j]) e[j++] = 0;
    if (j == n) return std::nullopt;
    ++e[j];
  }
}

}  // namespace

std::uint64_t IrreducibleComponent::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  const std::size_t n = exponents.size();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (exponents[i] > 0) gens.push_back(Monomial::variable(n, i, exponents[i]));
  }
  return MonomialIdeal(n, std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const noexcept {
  for (std::size_t i = 0; i < other.exponents.size(); ++i) {
    const Exponent b = other.exponents[i];
    if (b == 0) continue;
    if (exponents[i] == 0 || exponents[i] > b) return false;
  }
  return true;
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I,
                                                            DecompositionMethod method) {
  require_proper_nonzero(I);
  Components out;
  if (method == DecompositionMethod::splitting) {
    Splitter splitter;
    out = splitter.run(I);
  } else {
    const auto box = I.max_exponents();
    for (const auto& m : CornerScanner(I).run()) out.push_back(component_of_corner(m, box));
    out = irredundant(std::move(out));
  }
  std::vector<MonomialIdeal> parts;
  parts.reserve(out.size());
  for (const auto& c : out) parts.push_back(c.to_ideal());
  if (!(intersect_all(parts) == I)) {
    throw InternalError("irreducible components do not intersect back to the ideal");
  }
  return out;
}

std::vector<AssociatedPrime> associated_primes_with_witnesses(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  const auto comps = irreducible_decomposition(I, DecompositionMethod::corners);
  const auto box = I.max_exponents();
  std::vector<AssociatedPrime> out;
  for (const auto& c : comps) {
    const PrimeSupport p = c.prime();
    if (!out.empty() && out.back().prime == p) continue;
    Monomial v = corner_of_component(c, box);
    WitnessSource source = WitnessSource::component;
    if (!colon_is_prime(I, v, p)) {
      auto found = box_search(I, p);
      if (!found) throw InternalError("no witness for an associated prime");
      v = std::move(*found);
      source = WitnessSource::box_search;
    }
    out.push_back({p, std::move(v), source});
  }
  return out;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I) {
  std::vector<PrimeSupport> out;
  for (const auto& a : associated_primes_with_witnesses(I)) out.push_back(a.prime);
  return out;
}

std::vector<PrimeSupport> minimal_elements(std::vector<PrimeSupport> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<PrimeSupport> out;
  for (const auto& p : primes) {
    const bool has_smaller = std::any_of(out.begin(), out.end(), [&](const PrimeSupport& q) {
      return q.is_subset_of(p);
    });
    if (!has_smaller) out.push_back(p);
  }
  return out;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
  return minimal_elements(associated_primes(I));
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int k) {
  require_proper_nonzero(I);
  if (!is_squarefree(I)) {
    throw InvalidArgument("symbolic powers are only provided for squarefree ideals");
  }
  if (k < 1) throw InvalidArgument("symbolic power exponent must be >= 1");
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(I)) parts.push_back(power(p.to_ideal(I.dimension()), k));
  return intersect_all(parts);
}

bool depth_zero(const MonomialIdeal& I) {
  const auto full = PrimeSupport::full(I.dimension());
  for (const auto& p : associated_primes(I)) {
    if (p == full) return true;
  }
  return false;
}

}  // namespace monideal
