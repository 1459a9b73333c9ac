#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monideal/closure.hpp"
#include "monideal/criteria.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/graph_ideals.hpp"
#include "monideal/ideal_io.hpp"
#include "monideal/properties.hpp"
#include "monideal/runtime.hpp"
#include "report.hpp"
#include "targets.hpp"

namespace monideal::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kFamilyHelp =
    "Graph families: Kr,s (complete bipartite, parts 1..r and r+1..r+s), "
    "Cn (cycle 1..n), wheel:h,rim,[i,j,...] (h-wheel: rim 1..rim, centers after), "
    "or a graph JSON file {\"n\":5,\"edges\":[[1,2],...]}.";

constexpr const char* kTargetHelp =
    "Check targets: <family|graph.json>-ni, -di or -jtN (e.g. K2,2-ni, C5-di, "
    "wheel:1,5,[1,2,3]-di, C5-jt2), or a path to an ideal file.";

std::string status_name(int code) {
  switch (code) {
    case verified: return "verified";
    case refuted: return "refuted";
    case inapplicable: return "inapplicable";
    case timeout: return "timeout";
    default: return "error";
  }
}

struct Options {
  bool json_out = false;
  std::string report_path;
  double timeout_sec = 0;

  std::string op;
  std::string in, in2, mono;
  int t = 0;

  std::string source;
  std::string graph_out;

  std::string property;
  std::string target;
  int bound = 0;
  std::string crit_I, crit_H, crit_J, crit_h, crit_var;
  int crit_c = 1, crit_ell = 1, crit_m = 1;
};

class Session {
 public:
  Session(const std::vector<std::string>& args, const Options& o, std::ostream& out)
      : opts_(o), out_(out) {
    report_["schema"] = kReportSchema;
    report_["command"] = args;
    report_["inputs"] = json::object();
    report_["timing_ms"] = json::object();
    report_["notes"] = json::array();
  }

  json& report() { return report_; }
  std::ostringstream& text() { return text_; }

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto start = Clock::now();
    struct Record {
      Session& s;
      std::string phase;
      Clock::time_point start;
      ~Record() {
        s.report_["timing_ms"][phase] =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      }
    } rec{*this, phase, start};
    return f();
  }

  void note(const std::string& n) { report_["notes"].push_back(n); }

  void input(const std::string& key, const std::string& label, const MonomialIdeal& I) {
    report_["inputs"][key] = {{"source", label}, {"digest", ideal_digest(I)}, {"ideal", ideal_json(I)}};
  }

  int finish(int code, const std::string& status) {
    report_["status"] = status;
    report_["exit_code"] = code;
    if (opts_.json_out) {
      out_ << report_.dump(2) << '\n';
    } else {
      out_ << text_.str();
    }
    if (!opts_.report_path.empty()) {
      std::ofstream f(opts_.report_path);
      if (!f) throw InvalidArgument("cannot write report to '" + opts_.report_path + "'");
      f << report_.dump(2) << '\n';
    }
    return code;
  }

  int finish(int code) { return finish(code, status_name(code)); }

 private:
  const Options& opts_;
  std::ostream& out_;
  json report_;
  std::ostringstream text_;
};

std::string inline_ideal(const MonomialIdeal& I) { return format_ideal_inline(I); }

std::string prime_text(const PrimeSupport& p, const std::vector<std::string>& names) {
  return format_prime(p, names);
}

std::string primes_text(const std::vector<PrimeSupport>& ps, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += prime_text(ps[i], names);
  }
  return out + "}";
}

// ---- ideal -----------------------------------------------------------------

int cmd_ideal(Session& s, const Options& o) {
  const MonomialIdeal I = read_ideal_file(o.in);
  s.input("in", o.in, I);
  const auto& names = I.variable_names();
  std::optional<MonomialIdeal> J;
  if (!o.in2.empty()) {
    J = read_ideal_file(o.in2);
    s.input("in2", o.in2, *J);
  }
  const auto need_second = [&]() -> const MonomialIdeal& {
    if (!J) throw InvalidArgument("'" + o.op + "' needs --in2");
    if (J->dimension() != I.dimension()) throw DimensionMismatch(I.dimension(), J->dimension());
    return *J;
  };
  MonomialIdeal result = s.timed("compute", [&]() -> MonomialIdeal {
    if (o.op == "sum") return sum(I, need_second());
    if (o.op == "product") return product(I, need_second());
    if (o.op == "intersect") return intersect(I, need_second());
    if (o.op == "power") {
      if (o.t < 1) throw InvalidArgument("power needs --t N with N >= 1");
      return power(I, o.t);
    }
    if (o.op == "colon") {
      if (!o.mono.empty()) return colon(I, parse_monomial(o.mono, names));
      return colon_ideal(I, need_second());
    }
    if (o.op == "dual") return alexander_dual(I);
    return integral_closure(I);
  });
  result = result.with_names(names);
  s.report()["result"] = ideal_json(result);
  s.text() << format_ideal(result);
  return s.finish(verified, "ok");
}

// ---- graph -----------------------------------------------------------------

int cmd_graph(Session& s, const Options& o) {
  const GraphSource src = s.timed("build", [&] { return load_graph(o.source); });
  const SimpleGraph& G = src.graph;
  s.report()["inputs"]["graph"] = {{"source", src.label}, {"graph", graph_json(G)}};
  if (src.wheel) {
    const auto& w = *src.wheel;
    s.report()["inputs"]["wheel"] = {{"h", w.h},
                                     {"rim_length", w.rim_length},
                                     {"radial", w.radial},
                                     {"radial_lengths", radial_lengths(w)},
                                     {"three_consecutive_radial", has_three_consecutive_radial(w)}};
  }
  if (o.graph_out == "domsets") {
    const auto sets = s.timed("compute", [&] { return minimal_dominating_sets(G); });
    s.report()["result"] = {{"dominating_sets", vertex_sets_json(sets)}};
    for (auto set : sets) {
      s.text() << "{";
      bool first = true;
      for (; set != 0; set &= set - 1) {
        s.text() << (first ? "" : ",") << std::countr_zero(set) + 1;
        first = false;
      }
      s.text() << "}\n";
    }
    return s.finish(verified, "ok");
  }
  MonomialIdeal I = s.timed("compute", [&] {
    if (o.graph_out == "ni") return ni_ideal(G);
    if (o.graph_out == "di") return di_ideal(G);
    if (o.t < 1) throw InvalidArgument("--out jt needs --t N with N >= 1");
    return partial_cover_ideal(G, static_cast<std::size_t>(o.t));
  });
  s.report()["result"] = ideal_json(I);
  if (o.graph_out == "di") {
    s.report()["result"]["dual_cross_check"] = "agree";
    s.note("dominating-set enumeration agrees with alexander_dual(NI(G))");
  }
  s.text() << format_ideal(I);
  if (o.graph_out == "di") s.text() << "# cross-check: enumeration agrees with the Alexander dual of NI\n";
  return s.finish(verified, "ok");
}

// ---- check -----------------------------------------------------------------

int verdict_code(const PropertyVerdict& v) { return v.holds ? verified : refuted; }

void verdict_text(std::ostream& t, const PropertyVerdict& v, const std::vector<std::string>& names) {
  if (v.holds) {
    t << to_string(v.property) << " holds for k = 1.." << v.holds_up_to << " (bounded check, K = " << v.bound << ")\n";
  } else {
    const auto& c = *v.counterexample;
    t << to_string(v.property) << " fails at k = " << c.k << ": " << c.what;
    if (!c.primes.empty()) t << " " << primes_text(c.primes, names);
    if (c.ideal) t << " " << inline_ideal(c.ideal->with_names(names));
    t << "\n";
  }
  for (const auto& [k, ass] : v.evidence) {
    t << "  Ass(I^" << k << ") = " << primes_text(ass, names) << "\n";
  }
  if (v.threshold) t << "  threshold: " << *v.threshold << "\n";
  if (v.extra_prime) t << "  extra prime: " << prime_text(*v.extra_prime, names) << "\n";
  if (v.localizations_ntf) {
    t << "  every I(m \\ {x_i}) normally torsion-free to K: " << (*v.localizations_ntf ? "yes" : "no") << "\n";
  }
  if (!v.notes.empty()) t << "  " << v.notes << "\n";
}

int check_normal(Session& s, const MonomialIdeal& I, std::optional<int> bound) {
  NormalityOptions no;
  no.bound = bound;
  const auto r = s.timed("check", [&] { return is_normal(I, no); });
  const auto& names = I.variable_names();
  s.report()["verdict"] = normality_json(r, names);
  s.note("normality checks use the n-1 decision bound from an external theorem");
  auto& t = s.text();
  for (const auto& p : r.powers_checked) {
    t << "  t=" << p.t << (p.integrally_closed ? " integrally closed\n" : " not integrally closed\n");
  }
  if (r.failure_witness) {
    t << "not normal: I^" << r.failure_witness->first << " misses "
      << format_monomial(r.failure_witness->second, names) << " from its integral closure\n";
    return s.finish(refuted);
  }
  if (r.timed_out) {
    t << "timeout: verified up to t=" << r.verified_up_to() << "\n";
    return s.finish(timeout);
  }
  if (r.normal) {
    t << "normal (bound n-1=" << r.decision_bound << " covered)\n";
  } else {
    t << "verified up to t=" << r.verified_up_to() << " (decision bound " << r.decision_bound
      << " not covered)\n";
  }
  return s.finish(verified);
}

int check_closed(Session& s, const MonomialIdeal& I) {
  const auto r = s.timed("check", [&] { return is_integrally_closed(I); });
  s.report()["verdict"] = closedness_json(r, I.variable_names());
  if (r.integrally_closed) {
    s.text() << "integrally closed\n";
    return s.finish(verified);
  }
  s.text() << "not integrally closed: " << format_monomial(*r.witness, I.variable_names())
           << " is in the closure\n";
  return s.finish(refuted);
}

int check_ass(Session& s, const MonomialIdeal& I, int K) {
  const auto p = s.timed("check", [&] { return ass_profile(I, K); });
  const auto& names = I.variable_names();
  json v = profile_json(p, names);
  std::optional<int> onset;
  const auto full = PrimeSupport::full(I.dimension());
  for (const auto& [k, ass] : p.per_power) {
    const bool has_m = std::find(ass.begin(), ass.end(), full) != ass.end();
    if (has_m && !onset) onset = k;
    s.text() << "Ass(I^" << k << ") = " << primes_text(ass, names) << "  m "
             << (has_m ? "present" : "absent") << "\n";
  }
  v["depth_zero_onset"] = onset ? json(*onset) : json(nullptr);
  s.report()["verdict"] = v;
  s.text() << "Min(I) = " << primes_text(p.min_primes, names) << "\n";
  s.text() << "depth-zero onset: " << (onset ? std::to_string(*onset) : "none up to " + std::to_string(K))
           << "\n";
  return s.finish(verified);
}

int check_property(Session& s, const MonomialIdeal& I, const std::string& prop, int K) {
  const bool needs_squarefree = prop == "ssp" || prop == "ntf" || prop == "nntf";
  if (needs_squarefree && !is_squarefree(I)) {
    s.report()["verdict"] = nullptr;
    s.note(prop + " is only defined here for squarefree ideals");
    s.text() << "inapplicable: " << prop << " needs a squarefree ideal\n";
    return s.finish(inapplicable);
  }
  if (I.is_unit()) {
    s.report()["verdict"] = nullptr;
    s.text() << "inapplicable: the unit ideal\n";
    return s.finish(inapplicable);
  }
  const PropertyVerdict v = s.timed("check", [&] {
    if (prop == "persistence") return persistence(I, K);
    if (prop == "strong-persistence") return strong_persistence(I, K);
    if (prop == "ssp") return symbolic_strong_persistence(I, K);
    if (prop == "ntf") return normally_torsion_free(I, K);
    return nearly_ntf(I, K);
  });
  s.report()["verdict"] = verdict_json(v, I.variable_names());
  verdict_text(s.text(), v, I.variable_names());
  return s.finish(verdict_code(v));
}

MonomialIdeal criterion_ideal(Session& s, const std::string& key, const std::string& spec) {
  const Target t = resolve_target(spec);
  s.input(key, t.label, t.ideal);
  return t.ideal;
}

int check_criterion(Session& s, const Options& o) {
  const auto kind = parse_criterion_kind(o.target);
  if (!kind) {
    std::string known;
    for (auto k : all_criterion_kinds()) known += std::string(known.empty() ? "" : ", ") + std::string(to_string(k));
    throw InvalidArgument("unknown criterion '" + o.target + "' (known: " + known + ")");
  }
  if (o.crit_I.empty()) throw InvalidArgument("criterion needs --I");
  CriterionInputs in;
  in.I = criterion_ideal(s, "I", o.crit_I);
  const auto& names = in.I.variable_names();
  if (!o.crit_H.empty()) in.H = criterion_ideal(s, "H", o.crit_H);
  if (!o.crit_J.empty()) in.J = criterion_ideal(s, "J", o.crit_J);
  if (!o.crit_h.empty()) in.h = parse_monomial(o.crit_h, names);
  if (!o.crit_var.empty()) {
    const auto it = std::find(names.begin(), names.end(), o.crit_var);
    if (it != names.end()) {
      in.var = static_cast<std::size_t>(it - names.begin());
    } else {
      const int idx = std::stoi(o.crit_var);
      if (idx < 1) throw InvalidArgument("--var must be a variable name or a 1-based index");
      in.var = static_cast<std::size_t>(idx - 1);
    }
  }
  in.c = o.crit_c;
  in.ell = o.crit_ell;
  in.m = o.crit_m;
  CriterionOptions co;
  if (o.bound > 0) co.bound = o.bound;
  const auto r = s.timed("check", [&] { return verify_criterion(*kind, in, co); });
  s.report()["verdict"] = criterion_json(r);
  auto& t = s.text();
  for (const auto& h : r.hypotheses) {
    t << "  hypothesis " << h.name << ": " << (h.holds ? "holds" : "FAILS");
    if (!h.detail.empty()) t << " (" << h.detail << ")";
    t << "\n";
  }
  if (r.L) t << "L = " << inline_ideal(*r.L) << "\n";
  t << "verdict: " << to_string(r.verdict);
  if (r.verdict == CriterionVerdict::inapplicable) t << " (a hypothesis failed; no claim about L)";
  if (r.conclusion && r.verdict == CriterionVerdict::verified) {
    t << (r.conclusion->normal ? " (L normal, bound n-1 covered)"
                               : " (L integrally closed through t=" + std::to_string(r.conclusion->verified_up_to()) + ")");
  }
  t << "\n";
  switch (r.verdict) {
    case CriterionVerdict::verified: return s.finish(verified);
    case CriterionVerdict::refuted: return s.finish(refuted);
    case CriterionVerdict::inapplicable: return s.finish(inapplicable);
    case CriterionVerdict::timed_out: return s.finish(timeout);
  }
  return s.finish(internal_error);
}

int cmd_check(Session& s, const Options& o) {
  if (o.property == "criterion") return check_criterion(s, o);
  const Target t = s.timed("build", [&] { return resolve_target(o.target); });
  s.input("target", t.label, t.ideal);
  if (t.graph) s.report()["inputs"]["graph"] = {{"source", t.graph->label}, {"graph", graph_json(t.graph->graph)}};
  const MonomialIdeal& I = t.ideal;
  if (I.is_zero()) {
    s.text() << "inapplicable: the zero ideal\n";
    s.report()["verdict"] = nullptr;
    return s.finish(inapplicable);
  }
  const std::optional<int> bound = o.bound > 0 ? std::optional<int>(o.bound) : std::nullopt;
  if (o.property == "normal") return check_normal(s, I, bound);
  if (o.property == "integrally-closed") return check_closed(s, I);
  const int K = bound.value_or(4);
  if (I.is_unit()) {
    s.text() << "inapplicable: the unit ideal\n";
    s.report()["verdict"] = nullptr;
    return s.finish(inapplicable);
  }
  if (o.property == "ass") return check_ass(s, I, K);
  return check_property(s, I, o.property, K);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact monomial-ideal toolkit: ideal arithmetic, graph ideals and bounded property checks."};
  app.footer(std::string(kFamilyHelp) + "\n" + kTargetHelp +
             "\nExit codes: 0 verified/ok, 1 refuted, 2 inapplicable, 3 timeout, 4 usage or input "
             "error, 5 internal cross-check failure.\nMONIDEAL_THREADS sets the worker count.");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "Print the JSON report instead of text");
  app.add_option("--report", o.report_path, "Also write the JSON report to this path");
  app.add_option("--timeout-sec", o.timeout_sec, "Abort with partial evidence after this many seconds")
      ->check(CLI::NonNegativeNumber);

  auto* ideal = app.add_subcommand("ideal", "Ideal arithmetic on ideal files");
  ideal->add_option("op", o.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"sum", "product", "power", "intersect", "colon", "dual", "closure"}));
  ideal->add_option("--in", o.in, "First ideal file")->required();
  ideal->add_option("--in2", o.in2, "Second ideal file (sum, product, intersect, colon)");
  ideal->add_option("--t", o.t, "Exponent for power");
  ideal->add_option("--mono", o.mono, "Monomial for colon, e.g. x1^2*x3");

  auto* graph = app.add_subcommand("graph", "Build ideals from graphs");
  graph->footer(kFamilyHelp);
  graph->add_option("source", o.source, "Family shorthand or graph JSON file")->required();
  graph->add_option("--out", o.graph_out, "What to emit")
      ->required()
      ->check(CLI::IsMember({"ni", "di", "jt", "domsets"}));
  graph->add_option("--t", o.t, "t for the partial t-cover ideal");

  auto* check = app.add_subcommand("check", "Bounded property checks");
  check->footer(std::string(kTargetHelp) +
                "\nFor 'criterion' the target is the kind: add-variable-power, add-monomial, "
                "add-ideal, meet-power, meet-variables, meet-last-pair.");
  check->add_option("property", o.property, "Property")
      ->required()
      ->check(CLI::IsMember({"normal", "integrally-closed", "ass", "persistence", "strong-persistence",
                             "ssp", "ntf", "nntf", "criterion"}));
  check->add_option("target", o.target, "Target ideal, or the criterion kind")->required();
  check->add_option("--bound", o.bound, "Bound K (normality: highest power; default n-1, others 4)")
      ->check(CLI::PositiveNumber);
  check->add_option("--I", o.crit_I, "criterion: ideal I (target syntax)");
  check->add_option("--H", o.crit_H, "criterion: ideal H");
  check->add_option("--J", o.crit_J, "criterion: ideal J");
  check->add_option("--monomial", o.crit_h, "criterion: the monomial h");
  check->add_option("--var", o.crit_var, "criterion: variable x_d (name or 1-based index)");
  check->add_option("--c", o.crit_c, "criterion: exponent c");
  check->add_option("--ell", o.crit_ell, "criterion: exponent ell");
  check->add_option("--m", o.crit_m, "criterion: number of extra variables m");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : usage_error;
  }

  Session session(args, o, out);
  std::optional<ScopedDeadline> deadline;
  if (o.timeout_sec > 0) {
    deadline.emplace(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(o.timeout_sec)));
  }
  try {
    if (ideal->parsed()) return cmd_ideal(session, o);
    if (graph->parsed()) return cmd_graph(session, o);
    return cmd_check(session, o);
  } catch (const DeadlineExceeded&) {
    session.note("deadline exceeded before the check finished");
    session.text() << "timeout: no complete verdict within " << o.timeout_sec << " s\n";
    if (!session.report().contains("verdict")) session.report()["verdict"] = nullptr;
    return session.finish(timeout);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: value out of range: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace monideal::cli
