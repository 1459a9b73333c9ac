#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "monideal/monomial.hpp"

namespace monideal {

/// A monomial ideal, held as its minimal generating set G(I) in canonical
/// (GrlexLess) order. Construction always minimalizes, so two ideals are equal
/// iff their generator lists are equal.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n);
  /// Minimalizes `gens`; every generator must have n variables.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  static MonomialIdeal principal(const Monomial& u);
  /// (x_i : bit i of mask set); the ideal has n variables.
  static MonomialIdeal prime(std::size_t n, std::uint64_t mask);
  /// x_1, ..., x_n.
  static MonomialIdeal maximal(std::size_t n);

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_constant();
  }
  bool is_proper() const noexcept { return !is_unit(); }

  /// Names used only for parsing and printing; defaults to x1..xn.
  const std::vector<std::string>& variable_names() const;
  MonomialIdeal with_names(std::vector<std::string> names) const;

  /// Largest exponent of each variable over the generators.
  std::vector<Exponent> max_exponents() const;
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

  std::size_t hash() const noexcept;

  /// Adopts `gens` without minimalizing; they must already be a canonical
  /// antichain. Used by algorithms that produce G(I) directly.
  static MonomialIdeal from_canonical(std::size_t n, std::vector<Monomial> gens);

 private:
  std::size_t dim_ = 0;
  std::vector<Monomial> gens_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const noexcept { return I.hash(); }
};

/// A monomial prime (x_i : i in vars), vars non-empty.
class PrimeSupport {
 public:
  PrimeSupport() = default;
  explicit PrimeSupport(std::uint64_t mask);
  static PrimeSupport of_indices(std::span<const std::size_t> vars);
  /// All n variables: the homogeneous maximal ideal.
  static PrimeSupport full(std::size_t n);

  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t count() const noexcept { return std::popcount(mask_); }
  bool contains(std::size_t var) const noexcept { return (mask_ >> var) & 1U; }
  bool is_subset_of(const PrimeSupport& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// 0-based variable indices in increasing order.
  std::vector<std::size_t> indices() const;

  MonomialIdeal to_ideal(std::size_t n) const;
  /// Inverse of to_ideal; throws unless `I` is generated by variables.
  static PrimeSupport from_ideal(const MonomialIdeal& I);

  friend bool operator==(PrimeSupport a, PrimeSupport b) noexcept {
    return a.mask_ == b.mask_;
  }
  /// Fewer variables first, then by mask.
  friend bool operator<(PrimeSupport a, PrimeSupport b) noexcept {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.mask_ < b.mask_;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Bitset index over a generator list answering "is m divisible by any (or
/// which) generator". Built once, queried many times; this carries the box
/// scans and bulk minimalization.
class DivisorIndex {
 public:
  DivisorIndex() = default;
  DivisorIndex(std::span<const Monomial> gens, std::size_t n);

  std::size_t words() const noexcept { return words_; }
  std::size_t dimension() const noexcept { return dim_; }
  /// A mask with one bit per indexed generator.
  std::vector<std::uint64_t> all() const;
  /// bits &= {g : g[var] <= value}.
  void refine(std::vector<std::uint64_t>& bits, std::size_t var,
              Exponent value) const;
  static bool any(const std::vector<std::uint64_t>& bits) noexcept;

  /// Some indexed generator divides m.
  bool divisible(const Monomial& m) const;

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::size_t words_ = 0;
  std::vector<Exponent> max_exp_;
  // table_[offset_[var] + value] is a bitset of words_ words.
  std::vector<std::size_t> offset_;
  std::vector<std::uint64_t> table_;
};

/// The divisibility-antichain of `gens`, canonically ordered.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

bool contains(const MonomialIdeal& I, const Monomial& m);
/// I ⊆ J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^t for t >= 1; t = 0 is rejected.
MonomialIdeal power(const MonomialIdeal& I, int t);
/// I^1, ..., I^K, computed incrementally.
std::vector<MonomialIdeal> powers(const MonomialIdeal& I, int K);
MonomialIdeal multiply(const MonomialIdeal& I, const Monomial& u);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// Intersection of a non-empty family; the empty family is rejected because
/// its dimension is unknown.
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals);

/// (I : u).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);
/// (I : J) for nonzero J.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

/// Squarefree Alexander dual: the intersection of the primes
/// (x_i : x_i in supp(u)) over u in G(I).
MonomialIdeal alexander_dual(const MonomialIdeal& I);

std::uint64_t support(const MonomialIdeal& I) noexcept;
bool is_squarefree(const MonomialIdeal& I) noexcept;
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

/// I extended by zero exponents to n >= dim(I) variables.
MonomialIdeal embed(const MonomialIdeal& I, std::size_t n);
/// I with x_var set to 1 (localization at the prime of the other variables).
MonomialIdeal set_variable_to_one(const MonomialIdeal& I, std::size_t var);

}  // namespace monideal
