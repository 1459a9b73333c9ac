#include "monideal/criteria.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "monideal/error.hpp"
#include "monideal/ideal_io.hpp"

namespace monideal {

namespace {

constexpr std::array kKindNames = {
    std::pair{CriterionKind::add_variable_power, std::string_view("add-variable-power")},
    std::pair{CriterionKind::add_monomial, std::string_view("add-monomial")},
    std::pair{CriterionKind::add_ideal, std::string_view("add-ideal")},
    std::pair{CriterionKind::meet_power, std::string_view("meet-power")},
    std::pair{CriterionKind::meet_variables, std::string_view("meet-variables")},
    std::pair{CriterionKind::meet_last_pair, std::string_view("meet-last-pair")},
};

const MonomialIdeal& need(const std::optional<MonomialIdeal>& x, const char* name,
                          std::size_t n) {
  if (!x) throw InvalidArgument(std::string("criterion input ") + name + " is missing");
  if (x->dimension() != n) throw DimensionMismatch(n, x->dimension());
  return *x;
}

void need_nonzero(const MonomialIdeal& X, const char* name) {
  if (X.is_zero()) throw InvalidArgument(std::string("criterion input ") + name + " is zero");
}

struct Checker {
  const CriterionOptions& options;
  std::vector<HypothesisCheck> out;
  bool timed_out = false;

  void normal(const std::string& name, const MonomialIdeal& X) {
    if (X.is_zero()) {
      out.push_back({name, false, "zero ideal"});
      return;
    }
    NormalityOptions o;
    o.bound = options.hypothesis_bound;
    const auto r = is_normal(X, o);
    HypothesisCheck c{name, false, ""};
    if (r.timed_out) {
      timed_out = true;
      c.detail = "timed out after t = " + std::to_string(r.verified_up_to());
    } else if (r.failure_witness) {
      c.detail = "power " + std::to_string(r.failure_witness->first) + " not integrally closed";
    } else {
      c.holds = true;
      c.detail = r.normal ? "normal" : "integrally closed through t = " + std::to_string(r.bound_used);
    }
    out.push_back(std::move(c));
  }

  void plain(const std::string& name, bool holds, std::string detail = {}) {
    out.push_back({name, holds, std::move(detail)});
  }
};

bool coprime_to_all(const Monomial& u, std::initializer_list<const MonomialIdeal*> ideals) {
  for (const auto* X : ideals) {
    for (const auto& g : X->generators()) {
      if ((g.support_mask() & u.support_mask()) != 0) return false;
    }
  }
  return true;
}

std::vector<HypothesisCheck> check_hypotheses(CriterionKind kind, const CriterionInputs& in,
                                              const CriterionOptions& options,
                                              bool& timed_out) {
  const std::size_t n = in.I.dimension();
  Checker ck{options, {}};
  switch (kind) {
    case CriterionKind::add_variable_power: {
      const auto& H = need(in.H, "H", n);
      const auto d = *in.var;
      ck.normal("I normal", in.I);
      ck.normal("H normal", H);
      ck.normal("I + H normal", sum(in.I, H));
      ck.plain("x_d divides no generator of I, H",
               coprime_to_all(Monomial::variable(n, d), {&in.I, &H}));
      break;
    }
    case CriterionKind::add_monomial: {
      const auto& H = need(in.H, "H", n);
      ck.normal("I normal", in.I);
      ck.normal("H normal", H);
      ck.normal("I + H normal", sum(in.I, H));
      ck.plain("h coprime to G(I) and G(H)", coprime_to_all(*in.h, {&in.I, &H}));
      break;
    }
    case CriterionKind::add_ideal: {
      const auto& H = need(in.H, "H", n);
      const auto& J = need(in.J, "J", n);
      ck.normal("I normal", in.I);
      ck.normal("H normal", H);
      ck.plain("I ⊆ H", is_subset(in.I, H));
      bool pairwise = true;
      const auto& gj = J.generators();
      for (std::size_t a = 0; a < gj.size(); ++a) {
        for (std::size_t b = a + 1; b < gj.size(); ++b) {
          pairwise = pairwise && (gj[a].support_mask() & gj[b].support_mask()) == 0;
        }
      }
      ck.plain("G(J) pairwise coprime", pairwise);
      bool cross = true;
      for (const auto& v : gj) cross = cross && coprime_to_all(v, {&in.I, &H});
      ck.plain("G(J) coprime to G(I) and G(H)", cross);
      break;
    }
    case CriterionKind::meet_power:
    case CriterionKind::meet_variables:
      ck.plain("I squarefree", is_squarefree(in.I));
      ck.normal("I normal", in.I);
      break;
    case CriterionKind::meet_last_pair: {
      ck.plain("I squarefree", is_squarefree(in.I));
      ck.normal("I normal", in.I);
      const MonomialIdeal side =
          sum(intersect(in.I, MonomialIdeal::principal(Monomial::variable(n, n - 2))),
              colon(in.I, Monomial::variable(n, n - 1)));
      ck.normal("I ∩ (x_{n-1}) + (I : x_n) normal", side);
      break;
    }
  }
  timed_out = ck.timed_out;
  return std::move(ck.out);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random non-empty subset of `pool`.
std::uint64_t random_subset(std::mt19937_64& rng, std::uint64_t pool) {
  while (true) {
    std::uint64_t s = 0;
    for (std::uint64_t rest = pool; rest != 0; rest &= rest - 1) {
      if (uniform(rng, 0, 1) == 1) s |= rest & -rest;
    }
    if (s != 0) return s;
  }
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint64_t support,
                         Exponent max_exp) {
  std::vector<Exponent> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if ((support >> i) & 1U) e[i] = static_cast<Exponent>(uniform(rng, 1, static_cast<std::size_t>(max_exp)));
  }
  return Monomial(std::span<const Exponent>(e));
}

// A prime, a principal ideal, or a product of two primes on disjoint
// supports, all inside `pool`.
MonomialIdeal random_family_ideal(std::mt19937_64& rng, std::size_t n, std::uint64_t pool,
                                  bool squarefree) {
  const std::size_t choice = std::popcount(pool) >= 2 ? uniform(rng, 0, 2) : uniform(rng, 0, 1);
  if (choice == 0) return MonomialIdeal::prime(n, random_subset(rng, pool));
  if (choice == 1) {
    return MonomialIdeal::principal(random_monomial(rng, n, random_subset(rng, pool), squarefree ? 1 : 2));
  }
  std::uint64_t a = 0, b = 0;
  while (a == 0 || b == 0) {
    a = b = 0;
    for (std::uint64_t rest = random_subset(rng, pool); rest != 0; rest &= rest - 1) {
      const std::size_t side = uniform(rng, 0, 2);
      if (side == 0) a |= rest & -rest;
      if (side == 1) b |= rest & -rest;
    }
  }
  return product(MonomialIdeal::prime(n, a), MonomialIdeal::prime(n, b));
}

std::uint64_t all_vars(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

CriterionInputs draw(CriterionKind kind, std::mt19937_64& rng, std::size_t max_vars) {
  CriterionInputs in;
  switch (kind) {
    case CriterionKind::add_variable_power: {
      const std::size_t n = uniform(rng, 2, max_vars);
      const std::size_t d = uniform(rng, 0, n - 1);
      const std::uint64_t pool = all_vars(n) & ~(std::uint64_t{1} << d);
      in.I = random_family_ideal(rng, n, pool, false);
      in.H = random_family_ideal(rng, n, pool, false);
      in.var = d;
      in.c = static_cast<int>(uniform(rng, 1, 3));
      break;
    }
    case CriterionKind::add_monomial: {
      const std::size_t n = uniform(rng, 2, max_vars);
      std::uint64_t hs = 0;
      while (hs == 0 || hs == all_vars(n)) hs = random_subset(rng, all_vars(n));
      const std::uint64_t pool = all_vars(n) & ~hs;
      in.I = random_family_ideal(rng, n, pool, false);
      in.H = random_family_ideal(rng, n, pool, false);
      in.h = random_monomial(rng, n, hs, 2);
      break;
    }
    case CriterionKind::add_ideal: {
      const std::size_t n = uniform(rng, 3, max_vars);
      std::uint64_t w = 0;
      while (w == 0 || w == all_vars(n)) w = random_subset(rng, all_vars(n));
      const std::uint64_t pool = all_vars(n) & ~w;
      const MonomialIdeal H = random_family_ideal(rng, n, pool, false);
      const MonomialIdeal other = random_family_ideal(rng, n, pool, false);
      switch (uniform(rng, 0, 2)) {
        case 0: in.I = H; break;
        case 1: in.I = product(H, other); break;
        default: in.I = intersect(H, other); break;
      }
      in.H = H;
      // J: one monomial per block of a random partition of part of w.
      std::vector<std::uint64_t> blocks;
      for (std::uint64_t rest = random_subset(rng, w); rest != 0; rest &= rest - 1) {
        const std::uint64_t v = rest & -rest;
        if (blocks.empty() || uniform(rng, 0, 1) == 0) {
          blocks.push_back(v);
        } else {
          blocks[uniform(rng, 0, blocks.size() - 1)] |= v;
        }
      }
      std::vector<Monomial> js;
      for (auto b : blocks) js.push_back(random_monomial(rng, n, b, 2));
      in.J = MonomialIdeal(n, std::move(js));
      break;
    }
    case CriterionKind::meet_power: {
      const std::size_t n = uniform(rng, 2, max_vars - 1);
      in.I = random_family_ideal(rng, n, all_vars(n), true);
      in.ell = static_cast<int>(uniform(rng, 1, 3));
      break;
    }
    case CriterionKind::meet_variables: {
      const std::size_t n = uniform(rng, 2, max_vars - 1);
      in.m = static_cast<int>(uniform(rng, 1, max_vars - n));
      in.I = random_family_ideal(rng, n, all_vars(n), true);
      break;
    }
    case CriterionKind::meet_last_pair: {
      const std::size_t n = uniform(rng, 3, max_vars);
      in.I = random_family_ideal(rng, n, all_vars(n), true);
      break;
    }
  }
  return in;
}

}  // namespace

std::string_view to_string(CriterionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CriterionKind> parse_criterion_kind(std::string_view name) {
  for (const auto& [k, s] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

const std::vector<CriterionKind>& all_criterion_kinds() {
  static const std::vector<CriterionKind> kinds = [] {
    std::vector<CriterionKind> v;
    for (const auto& [k, name] : kKindNames) v.push_back(k);
    return v;
  }();
  return kinds;
}

std::string_view to_string(CriterionVerdict v) {
  switch (v) {
    case CriterionVerdict::verified: return "verified";
    case CriterionVerdict::refuted: return "refuted";
    case CriterionVerdict::inapplicable: return "inapplicable";
    case CriterionVerdict::timed_out: return "timed_out";
  }
  return "unknown";
}

MonomialIdeal construct_criterion_ideal(CriterionKind kind, const CriterionInputs& in) {
  const std::size_t n = in.I.dimension();
  need_nonzero(in.I, "I");
  switch (kind) {
    case CriterionKind::add_variable_power: {
      const auto& H = need(in.H, "H", n);
      need_nonzero(H, "H");
      if (!in.var || *in.var >= n) throw InvalidArgument("variable d is missing or out of range");
      if (in.c < 1) throw InvalidArgument("exponent c must be >= 1");
      return sum(in.I, multiply(H, Monomial::variable(n, *in.var, in.c)));
    }
    case CriterionKind::add_monomial: {
      const auto& H = need(in.H, "H", n);
      need_nonzero(H, "H");
      if (!in.h) throw InvalidArgument("criterion input h is missing");
      if (in.h->size() != n) throw DimensionMismatch(n, in.h->size());
      return sum(in.I, multiply(H, *in.h));
    }
    case CriterionKind::add_ideal: {
      const auto& H = need(in.H, "H", n);
      const auto& J = need(in.J, "J", n);
      need_nonzero(H, "H");
      need_nonzero(J, "J");
      return sum(in.I, product(J, H));
    }
    case CriterionKind::meet_power: {
      if (n < 1) throw InvalidArgument("I needs at least one variable");
      if (in.ell < 1) throw InvalidArgument("exponent ell must be >= 1");
      const std::size_t s = n + 1;
      const MonomialIdeal Q(s, {Monomial::variable(s, n - 1), Monomial::variable(s, n, in.ell)});
      return intersect(embed(in.I, s), Q);
    }
    case CriterionKind::meet_variables: {
      if (n < 1) throw InvalidArgument("I needs at least one variable");
      if (in.m < 1) throw InvalidArgument("m must be >= 1");
      const std::size_t s = n + static_cast<std::size_t>(in.m);
      if (s > kMaxVariables) throw InvalidArgument("too many variables");
      const std::uint64_t mask = all_vars(s) & ~all_vars(n - 1);
      return intersect(embed(in.I, s), MonomialIdeal::prime(s, mask));
    }
    case CriterionKind::meet_last_pair: {
      if (n < 2) throw InvalidArgument("I needs at least two variables");
      const std::uint64_t mask = (std::uint64_t{1} << (n - 2)) | (std::uint64_t{1} << (n - 1));
      return intersect(in.I, MonomialIdeal::prime(n, mask));
    }
  }
  throw InvalidArgument("unknown criterion kind");
}

CriterionReport verify_criterion(CriterionKind kind, const CriterionInputs& in,
                                 const CriterionOptions& options) {
  CriterionReport report;
  report.kind = kind;
  report.L = construct_criterion_ideal(kind, in);
  bool timed_out = false;
  report.hypotheses = check_hypotheses(kind, in, options, timed_out);
  report.applicable = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                  [](const HypothesisCheck& h) { return h.holds; });
  if (!report.applicable) {
    report.verdict = timed_out ? CriterionVerdict::timed_out : CriterionVerdict::inapplicable;
    return report;
  }
  NormalityOptions o;
  o.bound = options.bound;
  report.conclusion = is_normal(*report.L, o);
  if (report.conclusion->timed_out) {
    report.verdict = CriterionVerdict::timed_out;
  } else if (report.conclusion->failure_witness) {
    report.verdict = CriterionVerdict::refuted;
  } else {
    report.verdict = CriterionVerdict::verified;
  }
  return report;
}

CriterionInputs random_criterion_instance(CriterionKind kind, std::mt19937_64& rng,
                                          std::size_t max_vars) {
  const std::size_t least = kind == CriterionKind::meet_power || kind == CriterionKind::meet_variables ||
                                    kind == CriterionKind::add_ideal || kind == CriterionKind::meet_last_pair
                                ? 3
                                : 2;
  if (max_vars < least) throw InvalidArgument("too few variables for this criterion");
  const CriterionOptions options;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CriterionInputs in = draw(kind, rng, max_vars);
    bool timed_out = false;
    const auto hyps = check_hypotheses(kind, in, options, timed_out);
    if (std::all_of(hyps.begin(), hyps.end(), [](const HypothesisCheck& h) { return h.holds; })) {
      return in;
    }
  }
  throw InternalError("no hypothesis-valid instance found");
}

}  // namespace monideal
