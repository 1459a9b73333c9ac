#include "monideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include <boost/container_hash/hash.hpp>

#include "monideal/error.hpp"

namespace monideal {

namespace {

Exponent narrow(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<Exponent>::max()) {
    throw OverflowError("exponent " + std::to_string(v) +
                        " outside representable range");
  }
  return static_cast<Exponent>(v);
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

Monomial::Monomial(std::size_t n) : exps_(n, 0) {
  if (n > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const Exponent> exponents)
    : exps_(exponents.begin(), exponents.end()) {
  if (exps_.size() > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
  for (Exponent e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t index, Exponent power) {
  if (index >= n) throw InvalidArgument("variable index out of range");
  if (power < 0) throw InvalidArgument("negative exponent in monomial");
  Monomial m(n);
  m.exps_[index] = power;
  return m;
}

std::int64_t Monomial::degree() const noexcept {
  std::int64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_constant() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = narrow(std::int64_t{a.exps_[i]} + b.exps_[i]);
  }
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k < 0) throw InvalidArgument("negative power of a monomial");
  Monomial r = *this;
  for (auto& e : r.exps_) e = narrow(checked_mul(e, k));
  return r;
}

Monomial Monomial::colon(const Monomial& b) const {
  require_same_size(*this, b);
  Monomial r = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    r.exps_[i] = std::max<Exponent>(exps_[i] - b.exps_[i], 0);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& b) const {
  if (!b.divides(*this)) {
    throw InvalidArgument("quotient of monomials that do not divide");
  }
  return colon(b);
}

Monomial Monomial::embedded(std::size_t n) const {
  if (n < size()) throw InvalidArgument("cannot embed into fewer variables");
  Monomial r(n);
  std::copy(exps_.begin(), exps_.end(), r.exps_.begin());
  return r;
}

std::size_t Monomial::hash() const noexcept {
  return boost::hash_range(exps_.begin(), exps_.end());
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(),
                                      ea.end());
}

void require_dimension(std::span<const Monomial> ms, std::size_t n) {
  for (const auto& m : ms) {
    if (m.size() != n) throw DimensionMismatch(n, m.size());
  }
}

}  // namespace monideal
