#include "monideal/closure.hpp"

#include <algorithm>
#include <numeric>

#include "monideal/error.hpp"
#include "monideal/exact_lp.hpp"
#include "monideal/runtime.hpp"

namespace monideal {

namespace {

__extension__ using Wide = __int128;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw OverflowError("separating hyperplane too large");
  return z.get_si();
}

Wide dot(const std::vector<std::int64_t>& w, const Monomial& a) {
  Wide s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) s += static_cast<Wide>(w[j]) * a[j];
  return s;
}

void require_nonzero(const MonomialIdeal& I) {
  if (I.is_zero()) throw InvalidArgument("integral closure of the zero ideal");
}

// Depth-first scan of the lattice box [0, D] skipping points of the target
// ideal (they are trivially in its closure) and points already separated
// from t·NP(base) by a known cut, including whole subtrees whose best
// completion is separated.
class BoxScanner {
 public:
  BoxScanner(NewtonPolyhedron& poly, const MonomialIdeal& target, int t,
             bool collect_all)
      : poly_(poly),
        target_(target),
        index_(target.generators(), target.dimension()),
        n_(target.dimension()),
        t_(t),
        collect_all_(collect_all),
        box_(target.max_exponents()),
        cur_(n_),
        bits_(n_ + 1) {}

  // Scans the slab with first coordinate fixed to `first` (or everything
  // when n == 0).
  std::vector<Monomial> run(Exponent first) {
    bits_[0] = index_.all();
    hits_.clear();
    if (n_ == 0) return hits_;
    visit_value(0, first);
    return std::move(hits_);
  }

  Exponent first_extent() const { return n_ == 0 ? 0 : box_[0]; }

 private:
  void sync_suffixes() {
    const auto& cuts = poly_.cuts();
    while (suffix_.size() < cuts.size()) {
      const auto& c = cuts[suffix_.size()];
      std::vector<Wide> s(n_ + 1, 0);
      for (std::size_t q = n_; q-- > 0;) {
        s[q] = s[q + 1] + static_cast<Wide>(c.w[q]) * box_[q];
      }
      suffix_.push_back(std::move(s));
    }
  }

  bool subtree_separated(std::size_t filled) {
    sync_suffixes();
    const auto& cuts = poly_.cuts();
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      Wide s = suffix_[c][filled];
      for (std::size_t q = 0; q < filled; ++q) {
        s += static_cast<Wide>(cuts[c].w[q]) * cur_[q];
      }
      if (s < static_cast<Wide>(t_) * cuts[c].d) return true;
    }
    return false;
  }

  bool done() const { return !collect_all_ && !hits_.empty(); }

  void visit_value(std::size_t j, Exponent v) {
    cur_[j] = v;
    bits_[j + 1] = bits_[j];
    index_.refine(bits_[j + 1], j, v);
    if (j + 1 == n_) {
      leaf();
      return;
    }
    if (subtree_separated(j + 1)) return;
    descend(j + 1);
  }

  void descend(std::size_t j) {
    poll_deadline();
    for (Exponent v = 0; v <= box_[j] && !done(); ++v) visit_value(j, v);
  }

  void leaf() {
    if (DivisorIndex::any(bits_[n_])) return;
    const Monomial a{std::span<const Exponent>(cur_)};
    if (collect_all_) {
      for (const auto& h : hits_) {
        if (h.divides(a)) return;
      }
    }
    if (poly_.contains_scaled(a, t_)) hits_.push_back(a);
  }

  NewtonPolyhedron& poly_;
  const MonomialIdeal& target_;
  DivisorIndex index_;
  std::size_t n_;
  int t_;
  bool collect_all_;
  std::vector<Exponent> box_;
  std::vector<Exponent> cur_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::vector<Wide>> suffix_;
  std::vector<Monomial> hits_;
};

// Runs the scan in slabs of the first coordinate, one polyhedron copy per
// slab so the per-slab answers do not depend on scheduling.
std::vector<Monomial> scan(const MonomialIdeal& base, const MonomialIdeal& target,
                           int t, bool collect_all, std::size_t threads) {
  const NewtonPolyhedron seed(base);
  const std::size_t n = target.dimension();
  if (n == 0) return {};
  const auto extent = static_cast<std::size_t>(target.max_exponents()[0]) + 1;
  std::vector<std::vector<Monomial>> per_slab(extent);
  if (threads == 0) threads = default_thread_count();
  if (threads <= 1) {
    // A single polyhedron shares its cuts across slabs.
    NewtonPolyhedron poly = seed;
    BoxScanner scanner(poly, target, t, collect_all);
    for (std::size_t v = 0; v < extent; ++v) {
      per_slab[v] = scanner.run(static_cast<Exponent>(v));
      if (!collect_all && !per_slab[v].empty()) break;
    }
  } else {
    parallel_for(extent, threads, [&](std::size_t v) {
      NewtonPolyhedron poly = seed;
      BoxScanner scanner(poly, target, t, collect_all);
      per_slab[v] = scanner.run(static_cast<Exponent>(v));
    });
  }
  std::vector<Monomial> out;
  for (auto& slab : per_slab) {
    if (!collect_all && !slab.empty()) return {slab.front()};
    out.insert(out.end(), slab.begin(), slab.end());
  }
  return out;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& I) : ideal_(I) {
  require_nonzero(I);
  const std::size_t n = I.dimension();
  // Cheap valid inequalities: total degree and each coordinate minimum.
  cuts_.push_back({std::vector<std::int64_t>(n, 1), I.min_degree()});
  for (std::size_t j = 0; j < n; ++j) {
    Exponent lo = I.generators().front()[j];
    for (const auto& g : I.generators()) lo = std::min(lo, g[j]);
    if (lo > 0) {
      std::vector<std::int64_t> w(n, 0);
      w[j] = 1;
      cuts_.push_back({std::move(w), lo});
    }
  }
}

NewtonMembershipCertificate NewtonPolyhedron::certificate(const Monomial& a, int t) {
  const std::size_t n = ideal_.dimension();
  if (a.size() != n) throw DimensionMismatch(n, a.size());
  if (t < 1) throw InvalidArgument("scale must be >= 1");
  const auto& gens = ideal_.generators();
  const std::size_t s = gens.size();

  // Columns: weights μ_i (Σ μ_i = t), then slacks σ_j.
  // Rows j < n: Σ_i μ_i v_ij + σ_j = a_j; row n: Σ μ_i = t.
  lp::Matrix A(n + 1, s + n);
  std::vector<lp::Rational> b(n + 1);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(j, i) = gens[i][j];
    A(n, i) = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    A(j, s + j) = 1;
    b[j] = a[j];
  }
  b[n] = t;
  ++lp_calls_;
  const auto res = lp::solve_feasibility(A, b);

  NewtonMembershipCertificate cert;
  cert.feasible = res.feasible;
  if (res.feasible) {
    cert.weights.resize(s);
    mpz_class k = 1;
    for (std::size_t i = 0; i < s; ++i) {
      cert.weights[i] = res.x[i] / t;
      cert.weights[i].canonicalize();
      mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), cert.weights[i].get_den_mpz_t());
    }
    cert.power_witness = to_int64(k);
    return cert;
  }

  // y = farkas; w_j = -y_j >= 0, d = y_n. Clear denominators and reduce.
  std::vector<mpq_class> raw(n + 1);
  for (std::size_t j = 0; j < n; ++j) raw[j] = -res.farkas[j];
  raw[n] = res.farkas[n];
  mpz_class den = 1;
  for (auto& q : raw) {
    q.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(n + 1);
  mpz_class g = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    mpq_class scaled = raw[j] * den;
    ints[j] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
  }
  if (g == 0) throw InternalError("degenerate Farkas certificate");
  cert.separator.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cert.separator[j] = to_int64(ints[j] / g);
    if (cert.separator[j] < 0) throw InternalError("Farkas certificate has negative weight");
  }
  cert.threshold = to_int64(ints[n] / g);
  cuts_.push_back({cert.separator, cert.threshold});
  return cert;
}

bool NewtonPolyhedron::contains_scaled(const Monomial& a, int t) {
  for (const auto& c : cuts_) {
    if (dot(c.w, a) < static_cast<Wide>(t) * c.d) return false;
  }
  return certificate(a, t).feasible;
}

bool validate_certificate(const MonomialIdeal& I, const Monomial& a,
                          const NewtonMembershipCertificate& cert) {
  const std::size_t n = I.dimension();
  if (a.size() != n) return false;
  const auto& gens = I.generators();
  if (!cert.feasible) {
    if (cert.separator.size() != n) return false;
    if (std::any_of(cert.separator.begin(), cert.separator.end(),
                    [](std::int64_t w) { return w < 0; })) {
      return false;
    }
    for (const auto& g : gens) {
      if (dot(cert.separator, g) < cert.threshold) return false;
    }
    return dot(cert.separator, a) < cert.threshold;
  }
  if (cert.weights.size() != gens.size() || cert.power_witness < 1) return false;
  mpq_class total = 0;
  for (const auto& w : cert.weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) s += cert.weights[i] * gens[i][j];
    if (s > a[j]) return false;
  }
  // a^k must be divisible by ∏ g_i^{k λ_i}, a product of exactly k generators.
  Monomial prod(n);
  std::int64_t factors = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    mpq_class m = cert.weights[i] * cert.power_witness;
    m.canonicalize();
    if (m.get_den() != 1) return false;
    const auto mult = to_int64(m.get_num());
    factors += mult;
    prod = prod * gens[i].pow(mult);
  }
  return factors == cert.power_witness && prod.divides(a.pow(cert.power_witness));
}

NewtonMembershipCertificate np_contains(const MonomialIdeal& I, const Monomial& a) {
  require_nonzero(I);
  if (a.size() != I.dimension()) throw DimensionMismatch(I.dimension(), a.size());
  NewtonPolyhedron poly(I);
  return poly.certificate(a, 1);
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  require_nonzero(I);
  if (I.is_unit()) return I;
  auto hits = scan(I, I, 1, /*collect_all=*/true, default_thread_count());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), hits.begin(), hits.end());
  return minimalize(std::move(gens), I.dimension());
}

ClosednessResult is_integrally_closed(const MonomialIdeal& I) {
  return is_power_integrally_closed(I, 1, &I);
}

ClosednessResult is_power_integrally_closed(const MonomialIdeal& I, int t,
                                            const MonomialIdeal* It) {
  require_nonzero(I);
  if (t < 1) throw InvalidArgument("power exponent must be >= 1");
  if (I.is_unit()) return {};
  MonomialIdeal owned;
  if (It == nullptr) {
    owned = power(I, t);
    It = &owned;
  }
  const auto hits = scan(I, *It, t, /*collect_all=*/false, default_thread_count());
  if (hits.empty()) return {};
  const Monomial& w = hits.front();
  if (contains(*It, w) || !NewtonPolyhedron(I).certificate(w, t).feasible) {
    throw InternalError("closure witness failed re-verification");
  }
  return {false, w};
}

int NormalityReport::verified_up_to() const {
  int up_to = 0;
  for (const auto& p : powers_checked) {
    if (!p.integrally_closed || p.t != up_to + 1) break;
    up_to = p.t;
  }
  return up_to;
}

NormalityReport is_normal(const MonomialIdeal& I, const NormalityOptions& options) {
  require_nonzero(I);
  NormalityReport report;
  const int n = static_cast<int>(I.dimension());
  report.decision_bound = std::max(1, n - 1);
  if (options.bound && *options.bound < 1) {
    throw InvalidArgument("normality bound must be >= 1");
  }
  report.bound_used = options.bound ? std::min(*options.bound, report.decision_bound)
                                    : report.decision_bound;
  if (I.is_unit()) {
    for (int t = 1; t <= report.bound_used; ++t) report.powers_checked.push_back({t, true});
    report.normal = report.bound_used >= report.decision_bound;
    return report;
  }
  try {
    MonomialIdeal It = I;
    for (int t = 1; t <= report.bound_used; ++t) {
      if (t > 1) It = product(It, I);
      const auto res = is_power_integrally_closed(I, t, &It);
      report.powers_checked.push_back({t, res.integrally_closed});
      if (!res.integrally_closed) {
        report.failure_witness = std::make_pair(t, *res.witness);
        break;
      }
    }
  } catch (const DeadlineExceeded&) {
    report.timed_out = true;
  }
  report.normal = !report.timed_out && !report.failure_witness &&
                  report.bound_used >= report.decision_bound;
  return report;
}

}  // namespace monideal
