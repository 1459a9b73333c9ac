#include "monideal/ideal.hpp"

#include <algorithm>
#include <map>

#include <boost/container_hash/hash.hpp>

#include "monideal/error.hpp"
#include "monideal/ideal_io.hpp"
#include "monideal/runtime.hpp"

namespace monideal {

namespace {

void require_same_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dimension() != J.dimension()) {
    throw DimensionMismatch(I.dimension(), J.dimension());
  }
}

void require_dim(const MonomialIdeal& I, const Monomial& m) {
  if (I.dimension() != m.size()) throw DimensionMismatch(I.dimension(), m.size());
}

// Below this many kept generators a linear scan beats building an index.
constexpr std::size_t kIndexThreshold = 48;

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n) : dim_(n) {
  if (n > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported");
  }
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(std::move(gens), n)) {}

MonomialIdeal MonomialIdeal::from_canonical(std::size_t n,
                                            std::vector<Monomial> gens) {
  MonomialIdeal I(n);
  I.gens_ = std::move(gens);
  return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return from_canonical(n, {Monomial(n)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& u) {
  return from_canonical(u.size(), {u});
}

MonomialIdeal MonomialIdeal::prime(std::size_t n, std::uint64_t mask) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) gens.push_back(Monomial::variable(n, i));
  }
  if (n < 64 && (mask >> n) != 0) {
    throw InvalidArgument("prime support exceeds the ambient dimension");
  }
  return from_canonical(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n) {
  return prime(n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

const std::vector<std::string>& MonomialIdeal::variable_names() const {
  if (!names_) {
    // Lazily materialized; ideals share one copy per dimension in practice.
    static thread_local std::map<std::size_t, std::vector<std::string>> defaults;
    auto [it, inserted] = defaults.try_emplace(dim_);
    if (inserted) it->second = default_variable_names(dim_);
    return it->second;
  }
  return *names_;
}

MonomialIdeal MonomialIdeal::with_names(std::vector<std::string> names) const {
  if (names.size() != dim_) throw DimensionMismatch(dim_, names.size());
  MonomialIdeal r = *this;
  r.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return r;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> mx(dim_, 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < dim_; ++i) mx[i] = std::max(mx[i], g[i]);
  }
  return mx;
}

std::int64_t MonomialIdeal::min_degree() const {
  if (gens_.empty()) throw InvalidArgument("zero ideal has no generators");
  return gens_.front().degree();
}

std::int64_t MonomialIdeal::max_degree() const {
  if (gens_.empty()) throw InvalidArgument("zero ideal has no generators");
  return gens_.back().degree();
}

std::size_t MonomialIdeal::hash() const noexcept {
  std::size_t h = dim_;
  for (const auto& g : gens_) boost::hash_combine(h, g.hash());
  return h;
}

PrimeSupport::PrimeSupport(std::uint64_t mask) : mask_(mask) {
  if (mask == 0) throw InvalidArgument("a prime support must be non-empty");
}

PrimeSupport PrimeSupport::of_indices(std::span<const std::size_t> vars) {
  std::uint64_t mask = 0;
  for (auto v : vars) {
    if (v >= kMaxVariables) throw InvalidArgument("variable index out of range");
    mask |= std::uint64_t{1} << v;
  }
  return PrimeSupport(mask);
}

PrimeSupport PrimeSupport::full(std::size_t n) {
  if (n == 0 || n > kMaxVariables) throw InvalidArgument("bad dimension");
  return PrimeSupport(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<std::size_t> PrimeSupport::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

MonomialIdeal PrimeSupport::to_ideal(std::size_t n) const {
  return MonomialIdeal::prime(n, mask_);
}

PrimeSupport PrimeSupport::from_ideal(const MonomialIdeal& I) {
  std::uint64_t mask = 0;
  for (const auto& g : I.generators()) {
    if (g.degree() != 1) {
      throw InvalidArgument("ideal is not generated by variables");
    }
    mask |= g.support_mask();
  }
  return PrimeSupport(mask);
}

DivisorIndex::DivisorIndex(std::span<const Monomial> gens, std::size_t n)
    : dim_(n), count_(gens.size()), words_((gens.size() + 63) / 64) {
  require_dimension(gens, n);
  max_exp_.assign(n, 0);
  for (const auto& g : gens) {
    for (std::size_t j = 0; j < n; ++j) max_exp_[j] = std::max(max_exp_[j], g[j]);
  }
  offset_.resize(n);
  std::size_t rows = 0;
  for (std::size_t j = 0; j < n; ++j) {
    offset_[j] = rows;
    rows += static_cast<std::size_t>(max_exp_[j]) + 1;
  }
  table_.assign(rows * words_, 0);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto word = gi / 64;
    const auto bit = std::uint64_t{1} << (gi % 64);
    for (std::size_t j = 0; j < n; ++j) {
      for (Exponent v = gens[gi][j]; v <= max_exp_[j]; ++v) {
        table_[(offset_[j] + v) * words_ + word] |= bit;
      }
    }
  }
}

std::vector<std::uint64_t> DivisorIndex::all() const {
  std::vector<std::uint64_t> bits(words_, ~std::uint64_t{0});
  if (count_ % 64 != 0 && words_ > 0) {
    bits.back() = (std::uint64_t{1} << (count_ % 64)) - 1;
  }
  return bits;
}

void DivisorIndex::refine(std::vector<std::uint64_t>& bits, std::size_t var,
                          Exponent value) const {
  if (value >= max_exp_[var]) return;
  const std::uint64_t* row = &table_[(offset_[var] + value) * words_];
  for (std::size_t w = 0; w < words_; ++w) bits[w] &= row[w];
}

bool DivisorIndex::any(const std::vector<std::uint64_t>& bits) noexcept {
  return std::any_of(bits.begin(), bits.end(),
                     [](std::uint64_t w) { return w != 0; });
}

bool DivisorIndex::divisible(const Monomial& m) const {
  if (m.size() != dim_) throw DimensionMismatch(dim_, m.size());
  if (count_ == 0) return false;
  auto bits = all();
  for (std::size_t j = 0; j < dim_; ++j) {
    refine(bits, j, m[j]);
    if (!any(bits)) return false;
  }
  return true;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  require_dimension(gens, n);
  if (n > kMaxVariables) throw InvalidArgument("too many variables");
  for (const auto& g : gens) {
    if (g.is_constant()) return MonomialIdeal::unit(n);
  }
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::size_t i = 0;
  while (i < gens.size()) {
    poll_deadline();
    // Distinct monomials of equal degree never divide each other, so each
    // degree level only needs to be checked against strictly lower levels.
    const auto degree = gens[i].degree();
    std::size_t end = i;
    while (end < gens.size() && gens[end].degree() == degree) ++end;
    const std::size_t lower = kept.size();
    if (lower >= kIndexThreshold) {
      DivisorIndex index(std::span<const Monomial>(kept.data(), lower), n);
      for (std::size_t k = i; k < end; ++k) {
        if (!index.divisible(gens[k])) kept.push_back(std::move(gens[k]));
      }
    } else {
      for (std::size_t k = i; k < end; ++k) {
        bool redundant = false;
        for (std::size_t q = 0; q < lower && !redundant; ++q) {
          redundant = kept[q].divides(gens[k]);
        }
        if (!redundant) kept.push_back(std::move(gens[k]));
      }
    }
    i = end;
  }
  return MonomialIdeal::from_canonical(n, std::move(kept));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  require_dim(I, m);
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  if (J.size() >= kIndexThreshold) {
    DivisorIndex index(J.generators(), J.dimension());
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return index.divisible(g); });
  }
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return contains(J, g); });
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(gens), I.dimension());
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) gens.push_back(a * b);
  }
  return minimalize(std::move(gens), I.dimension());
}

MonomialIdeal power(const MonomialIdeal& I, int t) {
  if (t < 1) {
    throw InvalidArgument("power exponent must be >= 1 (request the unit "
                          "ideal explicitly for t = 0)");
  }
  MonomialIdeal P = I;
  for (int k = 2; k <= t; ++k) P = product(P, I);
  return P;
}

std::vector<MonomialIdeal> powers(const MonomialIdeal& I, int K) {
  if (K < 1) throw InvalidArgument("power bound must be >= 1");
  std::vector<MonomialIdeal> out;
  out.reserve(K);
  out.push_back(I);
  for (int k = 2; k <= K; ++k) out.push_back(product(out.back(), I));
  return out;
}

MonomialIdeal multiply(const MonomialIdeal& I, const Monomial& u) {
  require_dim(I, u);
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g * u);
  // Multiplying by a monomial preserves the antichain but not always the
  // degree-then-lex order, so re-canonicalize.
  return minimalize(std::move(gens), I.dimension());
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  const std::size_t n = I.dimension();
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(n);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  // A generator of one side lying in the other side is itself in I ∩ J and
  // divides every lcm it takes part in, so only the non-members pair up.
  DivisorIndex in_i(I.generators(), n);
  DivisorIndex in_j(J.generators(), n);
  std::vector<Monomial> gens;
  std::vector<const Monomial*> outside_j;
  std::vector<const Monomial*> outside_i;
  for (const auto& a : I.generators()) {
    if (in_j.divisible(a)) {
      gens.push_back(a);
    } else {
      outside_j.push_back(&a);
    }
  }
  for (const auto& b : J.generators()) {
    if (in_i.divisible(b)) {
      gens.push_back(b);
    } else {
      outside_i.push_back(&b);
    }
  }
  gens.reserve(gens.size() + outside_j.size() * outside_i.size());
  for (const auto* a : outside_j) {
    poll_deadline();
    for (const auto* b : outside_i) gens.push_back(lcm(*a, *b));
  }
  return minimalize(std::move(gens), n);
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) {
    throw InvalidArgument("intersection of an empty family of ideals");
  }
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  require_dim(I, u);
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g.colon(u));
  return minimalize(std::move(gens), I.dimension());
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  if (J.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::vector<MonomialIdeal> parts;
  parts.reserve(J.size());
  for (const auto& v : J.generators()) parts.push_back(colon(I, v));
  // Fold smallest first to keep intermediate results small.
  std::sort(parts.begin(), parts.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.size() < b.size();
            });
  return intersect_all(parts);
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (I.is_zero()) throw InvalidArgument("Alexander dual of the zero ideal");
  for (const auto& g : I.generators()) {
    if (!g.is_squarefree()) {
      throw InvalidArgument("Alexander dual needs a squarefree ideal; "
                            "generator " +
                            format_monomial(g, I.variable_names()) +
                            " is not squarefree");
    }
  }
  const std::size_t n = I.dimension();
  std::vector<MonomialIdeal> primes;
  primes.reserve(I.size());
  for (const auto& g : I.generators()) {
    const auto mask = g.support_mask();
    // The constant generator has empty support: its prime is the zero ideal.
    primes.push_back(mask == 0 ? MonomialIdeal::zero(n)
                               : MonomialIdeal::prime(n, mask));
  }
  return intersect_all(primes);
}

std::uint64_t support(const MonomialIdeal& I) noexcept {
  std::uint64_t mask = 0;
  for (const auto& g : I.generators()) mask |= g.support_mask();
  return mask;
}

bool is_squarefree(const MonomialIdeal& I) noexcept {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  return I == J;
}

MonomialIdeal embed(const MonomialIdeal& I, std::size_t n) {
  if (n < I.dimension()) throw InvalidArgument("cannot embed into fewer variables");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g.embedded(n));
  // Appending zero exponents preserves both minimality and the order.
  return MonomialIdeal::from_canonical(n, std::move(gens));
}

MonomialIdeal set_variable_to_one(const MonomialIdeal& I, std::size_t var) {
  if (var >= I.dimension()) throw InvalidArgument("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e[var] = 0;
    gens.emplace_back(std::span<const Exponent>(e));
  }
  return minimalize(std::move(gens), I.dimension());
}

}  // namespace monideal
