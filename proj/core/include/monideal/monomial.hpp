#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace monideal {

using Exponent = std::int32_t;

/// Upper bound on the ambient dimension. Variable subsets are 64-bit masks.
inline constexpr std::size_t kMaxVariables = 64;

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
///
/// The constant monomial is the all-zero vector of the ambient length; a
/// Monomial always has a definite length, so "no monomial" is expressed with
/// std::optional by callers. All arithmetic is overflow-checked.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 10>;

  Monomial() = default;
  /// The constant monomial 1 in n variables.
  explicit Monomial(std::size_t n);
  Monomial(std::initializer_list<Exponent> exponents);
  explicit Monomial(std::span<const Exponent> exponents);

  static Monomial variable(std::size_t n, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }

  std::int64_t degree() const noexcept;
  bool is_constant() const noexcept;
  bool is_squarefree() const noexcept;
  /// Bit i is set iff x_i divides the monomial.
  std::uint64_t support_mask() const noexcept;

  /// Componentwise <=.
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// u^k.
  Monomial pow(std::int64_t k) const;
  /// Exponentwise max(a - b, 0), i.e. a / gcd(a, b).
  Monomial colon(const Monomial& b) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// a / b; requires b | a.
  Monomial quotient(const Monomial& b) const;

  /// Extended to `n` variables by zero exponents; n >= size().
  Monomial embedded(std::size_t n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  Storage exps_;
};

/// Canonical total order: ascending total degree, then lexicographically
/// larger exponent vectors first (x^2 < xy < y^2 for x > y).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Requires every monomial in `ms` to have `n` variables.
void require_dimension(std::span<const Monomial> ms, std::size_t n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace monideal
