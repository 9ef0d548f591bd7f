#include "fsig/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsig/ar_quiver.hpp"
#include "fsig/dual_fsignature.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/group.hpp"
#include "fsig/hj_series.hpp"
#include "fsig/monomial_module.hpp"
#include "fsig/surjectivity_oracle.hpp"

namespace fsig {

namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { table, json, dot };

struct RunConfig {
  Int n = 0;
  Int a = 0;
  std::optional<Int> p;
  std::optional<Int> e;
  std::optional<Int> t;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
  Int trials = 16;
  bool unsafe_large = false;
  bool enumerate = false;
  bool witnesses = false;
};

// Desk-scale caps on q^2, lifted by --unsafe-large.
constexpr Int kCertifyMaxQ2 = 1'000'000;
constexpr Int kFrobeniusEnumerateMaxQ2 = 1'000'000;
constexpr Int kOracleMaxQ2 = 10'000;

OutputFormat parse_format(const std::string& name, bool allow_dot) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "dot" && allow_dot) return OutputFormat::dot;
  throw ValidationError("unsupported output format '" + name + "'");
}

std::string module_name(Int label) { return label == 0 ? "R" : "M_" + std::to_string(label); }

std::string group_name(const GroupParams& g) {
  return "1/" + std::to_string(g.n) + "(1," + std::to_string(g.a) + ")";
}

std::string approx(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(6) << approximate(r);
  return "≈ " + os.str();
}

std::string join(const std::vector<Int>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

std::string generator_list(const MonomialModule& m) {
  std::string s;
  for (std::size_t k = 0; k < m.mingens.size(); ++k) {
    if (k > 0) s += ", ";
    s += monomial_string(m.mingens[k]);
  }
  return s;
}

Json generator_json(const MonomialModule& m) {
  Json arr = Json::array();
  for (const Exponent& x : m.mingens) arr.push_back(monomial_string(x));
  return arr;
}

Json group_json(const GroupParams& g) { return {{"n", g.n}, {"a", g.a}}; }

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

struct Context {
  GroupParams g;
  std::optional<CharacteristicParams> ch;
  std::uint64_t seed = 0;
};

Context make_context(const RunConfig& cfg, bool need_characteristic) {
  Context ctx;
  ctx.g = validate_group(cfg.n, cfg.a);
  if (need_characteristic) {
    if (!cfg.p || !cfg.e) throw ValidationError("--p and --e are required");
    ctx.ch = validate_characteristic(*cfg.p, *cfg.e, ctx.g);
  }
  ctx.seed = cfg.seed.value_or(0);
  if (const char* env = std::getenv("FSIG_SEED"); env != nullptr && *env != '\0') {
    try {
      ctx.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("FSIG_SEED must be an unsigned integer");
    }
  }
  return ctx;
}

void check_cap(const RunConfig& cfg, const CharacteristicParams& ch, Int cap, const char* what) {
  if (!cfg.unsafe_large && ch.q * ch.q > cap) {
    throw ValidationError(std::string(what) + ": q^2 = " + std::to_string(ch.q * ch.q) +
                          " exceeds the desk-scale cap " + std::to_string(cap) +
                          " (pass --unsafe-large to override)");
  }
}

Int require_series_index(const RunConfig& cfg, const SeriesData& s) {
  if (!cfg.t) throw ValidationError("--t (series index) is required");
  const Int t = *cfg.t;
  if (t < 0 || t > s.length()) {
    throw ValidationError("series index t=" + std::to_string(t) +
                          " does not name a special module (valid: 0.." +
                          std::to_string(s.length()) + ")");
  }
  return t;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format, false);
  const Context ctx = make_context(cfg, false);
  const GroupParams& g = ctx.g;
  const HJExpansion hj = hj_expand(g);
  const SeriesData s = compute_series(hj, g);
  const Int canonical = canonical_label(g);

  if (fmt == OutputFormat::json) {
    Json doc;
    doc["group"] = group_json(g);
    doc["hj_expansion"] = hj.alphas;
    doc["i_series"] = s.i_series;
    doc["j_series"] = s.j_series;
    doc["gorenstein"] = is_gorenstein(g);
    doc["canonical_label"] = canonical;
    doc["special_modules"] = Json::array();
    for (Int t = 0; t <= s.length(); ++t) {
      const Int label = mod(s.i(t), g.n);
      const MonomialModule m = minimal_generators(label, g);
      doc["special_modules"].push_back({{"index", t},
                                        {"label", label},
                                        {"generators", generator_json(m)},
                                        {"dual_fsignature", to_string(dual_fsig_special(t, s, g))}});
    }
    emit_json(out, doc);
    return kExitOk;
  }

  out << "group: " << group_name(g) << "\n";
  out << "HJ expansion: " << g.n << "/" << g.a << " = [" << join(hj.alphas, ",") << "]\n";
  out << "i-series: " << join(s.i_series, " ") << "\n";
  out << "j-series: " << join(s.j_series, " ") << "\n";
  out << "Gorenstein: " << (is_gorenstein(g) ? "yes" : "no") << "\n";
  out << "canonical module: " << module_name(canonical) << "\n";
  out << "special modules:\n";
  for (Int t = 0; t <= s.length(); ++t) {
    const Int label = mod(s.i(t), g.n);
    const Rational value = dual_fsig_special(t, s, g);
    out << "  " << module_name(label) << ": gens "
        << generator_list(minimal_generators(label, g)) << "; s = " << to_string(value) << "  ("
        << approx(value) << ")\n";
  }
  return kExitOk;
}

int cmd_frobenius(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format, false);
  const Context ctx = make_context(cfg, true);
  const GroupParams& g = ctx.g;
  const CharacteristicParams& ch = *ctx.ch;
  if (cfg.enumerate) check_cap(cfg, ch, kFrobeniusEnumerateMaxQ2, "enumeration");

  std::vector<Int> labels;
  if (cfg.t) {
    if (*cfg.t < 0 || *cfg.t >= g.n) throw ValidationError("--t must be a label in [0, n)");
    labels.push_back(*cfg.t);
  } else {
    for (Int t = 0; t < g.n; ++t) labels.push_back(t);
  }
  const Int q2 = ch.q * ch.q;

  Json doc;
  doc["group"] = group_json(g);
  doc["p"] = ch.p;
  doc["e"] = ch.e;
  doc["q"] = ch.q;
  doc["decompositions"] = Json::array();
  if (fmt == OutputFormat::table) {
    out << "group: " << group_name(g) << ", p=" << ch.p << ", e=" << ch.e << ", q=" << ch.q
        << "\n";
  }

  for (Int t : labels) {
    const DecompositionVector dec = decompose(t, g, ch);
    std::optional<bool> agrees;
    if (cfg.enumerate) {
      OracleLimits limits;
      limits.enumeration_max_q2 = cfg.unsafe_large ? q2 : kFrobeniusEnumerateMaxQ2;
      agrees = enumerate_decomposition(t, g, ch, limits).counts == dec.counts;
      if (!*agrees) {
        throw InvariantError("closed-form decomposition of ^eM_" + std::to_string(t) +
                             " disagrees with monomial enumeration");
      }
    }
    if (fmt == OutputFormat::json) {
      Json entry;
      entry["label"] = t;
      entry["counts"] = dec.counts;
      Json ratios = Json::array();
      for (Int c : dec.counts) ratios.push_back(to_string(Rational(c, q2)));
      entry["ratios"] = ratios;
      if (t == 0) entry["f_splitting_number"] = dec.count(0);
      if (agrees) entry["enumeration_agrees"] = *agrees;
      doc["decompositions"].push_back(entry);
      continue;
    }
    out << "\n^" << ch.e << module_name(t) << ": counts (" << join(dec.counts, ",") << ")\n";
    out << "  s    c_s    c_s/q^2\n";
    for (Int s = 0; s < g.n; ++s) {
      const Rational r(dec.count(s), q2);
      out << "  " << std::setw(3) << s << "  " << std::setw(5) << dec.count(s) << "  "
          << to_string(r) << "  (" << approx(r) << ")\n";
    }
    if (t == 0) out << "  F-splitting number a_e = " << dec.count(0) << "\n";
    if (agrees) out << "  enumeration check: agrees\n";
  }
  if (fmt == OutputFormat::json) emit_json(out, doc);
  return kExitOk;
}

int cmd_quiver(const RunConfig& cfg, std::ostream& out) {
  const Context ctx = make_context(cfg, false);
  const std::string name = cfg.format == "table" ? "dot" : cfg.format;
  out << export_quiver(ctx.g, parse_quiver_format(name));
  return kExitOk;
}

Json certificate_json(const SurjectionCertificate& cert) {
  Json doc;
  doc["target_label"] = cert.target_label;
  doc["copies"] = cert.copies;
  doc["source_counts"] = cert.source_counts;
  doc["witnesses"] = Json::array();
  for (const Witness& w : cert.witnesses) {
    Json maps = Json::array();
    for (const HomApplication& h : w.maps) {
      maps.push_back({{"source_label", h.source_label},
                      {"source_copy", h.source_copy},
                      {"target_copy", h.target_copy},
                      {"hom", monomial_string(h.hom)}});
    }
    doc["witnesses"].push_back({{"kind", std::string(to_string(w.kind))}, {"maps", maps}});
  }
  return doc;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format, false);
  const Context ctx = make_context(cfg, true);
  const GroupParams& g = ctx.g;
  const CharacteristicParams& ch = *ctx.ch;
  check_cap(cfg, ch, kCertifyMaxQ2, "certify");
  const SeriesData s = series_for(g);
  const Int t = require_series_index(cfg, s);
  const Int label = mod(s.i(t), g.n);

  const DecompositionVector dec = decompose(label, g, ch);
  const Schedule sched = schedule_surjections(dec, t, s, g);
  const bool pass = verify_certificate(sched.certificate, g, ch);
  const Int q2 = ch.q * ch.q;
  const Rational ratio(sched.b, q2);
  const Rational formula = dual_fsig_special(t, s, g);
  const Rational tolerance(2 * g.n, ch.q);
  Rational gap = ratio - formula;
  if (gap < 0) gap = -gap;

  Int trivial = 0, pair = 0, r_pair = 0;
  for (const Witness& w : sched.certificate.witnesses) {
    if (w.kind == WitnessKind::trivial) ++trivial;
    if (w.kind == WitnessKind::pair) ++pair;
    if (w.kind == WitnessKind::r_pair) ++r_pair;
  }

  if (fmt == OutputFormat::json) {
    Json doc;
    doc["group"] = group_json(g);
    doc["p"] = ch.p;
    doc["e"] = ch.e;
    doc["q"] = ch.q;
    doc["index"] = t;
    doc["label"] = label;
    doc["b"] = sched.b;
    doc["ratio"] = to_string(ratio);
    doc["formula"] = to_string(formula);
    doc["gap"] = to_string(gap);
    doc["tolerance"] = to_string(tolerance);
    doc["witness_counts"] = {{"trivial", trivial}, {"pair", pair}, {"r_pair", r_pair}};
    if (t == 0) doc["f_splitting_number"] = dec.count(0);
    doc["verified"] = pass;
    if (cfg.witnesses) doc["certificate"] = certificate_json(sched.certificate);
    emit_json(out, doc);
  } else {
    out << "target: " << module_name(label) << " (series index " << t << ") over "
        << group_name(g) << ", p=" << ch.p << ", e=" << ch.e << ", q=" << ch.q << "\n";
    out << "pushforward counts: (" << join(dec.counts, ",") << ")\n";
    if (t == 0) out << "F-splitting number a_e = " << dec.count(0) << "\n";
    out << "scheduled copies b = " << sched.b << "\n";
    out << "b/q^2 = " << to_string(ratio) << "  (" << approx(ratio) << ")\n";
    out << "formula s = " << to_string(formula) << "  (" << approx(formula) << ")\n";
    out << "|b/q^2 - s| = " << to_string(gap) << " (bound 2n/q = " << to_string(tolerance)
        << ")\n";
    out << "witnesses: trivial=" << trivial << " pair=" << pair << " r_pair=" << r_pair << "\n";
    out << "certificate: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitInternal;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format, false);
  const Context ctx = make_context(cfg, true);
  const GroupParams& g = ctx.g;
  const CharacteristicParams& ch = *ctx.ch;
  check_cap(cfg, ch, kOracleMaxQ2, "estimate");
  if (!cfg.t || *cfg.t < 0 || *cfg.t >= g.n) throw ValidationError("--t must be a label in [0, n)");
  if (cfg.trials < 1) throw ValidationError("--trials must be at least 1");
  OracleLimits limits;
  if (cfg.unsafe_large) limits.estimate_max_q2 = limits.enumeration_max_q2 = ch.q * ch.q;
  const OracleEstimate est = estimate_b_e_report(*cfg.t, g, ch, cfg.trials, ctx.seed, limits);

  if (fmt == OutputFormat::json) {
    Json doc;
    doc["group"] = group_json(g);
    doc["p"] = ch.p;
    doc["e"] = ch.e;
    doc["q"] = ch.q;
    doc["label"] = est.target;
    doc["seed"] = ctx.seed;
    doc["trials"] = cfg.trials;
    doc["trials_used"] = est.trials_used;
    doc["field_size"] = est.field_size;
    doc["b_lower"] = est.b;
    doc["generator_bound"] = est.generator_bound;
    doc["rank_bound"] = est.rank_bound;
    doc["coverage_bound"] = est.coverage_bound;
    doc["exact"] = est.exact;
    emit_json(out, doc);
    return kExitOk;
  }
  out << "b_e(" << module_name(est.target) << ") over " << group_name(g) << ", p=" << ch.p
      << ", e=" << ch.e << ", q=" << ch.q << "\n";
  out << "lower bound (randomized, GF(" << est.field_size << "), " << est.trials_used << "/"
      << cfg.trials << " trials, seed " << ctx.seed << "): " << est.b << "\n";
  out << "upper bounds: generators " << est.generator_bound << ", rank " << est.rank_bound
      << ", coverage " << est.coverage_bound << "\n";
  out << "status: " << (est.exact ? "exact" : "lower bound only") << "\n";
  return kExitOk;
}

int cmd_compare_tau(const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format, false);
  const Context ctx = make_context(cfg, true);
  const GroupParams& g = ctx.g;
  const CharacteristicParams& ch = *ctx.ch;
  const SeriesData s = series_for(g);
  const Int t = require_series_index(cfg, s);
  if (!is_gorenstein(g)) check_cap(cfg, ch, kOracleMaxQ2, "compare-tau");
  if (cfg.trials < 1) throw ValidationError("--trials must be at least 1");

  OracleBudget budget;
  budget.trials = cfg.trials;
  budget.seed = ctx.seed;
  if (cfg.unsafe_large) budget.limits.estimate_max_q2 = budget.limits.enumeration_max_q2 = ch.q * ch.q;
  const TauComparison cmp = compare_with_tau(t, s, g, ch, budget);
  const bool holds = cmp.b_self <= cmp.b_tau;

  if (fmt == OutputFormat::json) {
    Json doc;
    doc["group"] = group_json(g);
    doc["p"] = ch.p;
    doc["e"] = ch.e;
    doc["q"] = ch.q;
    doc["index"] = t;
    doc["label"] = cmp.label;
    doc["tau_label"] = cmp.tau_label;
    doc["s_formula"] = to_string(cmp.s_formula);
    doc["b_self"] = cmp.b_self;
    doc["b_tau"] = cmp.b_tau;
    doc["gorenstein"] = cmp.gorenstein;
    doc["seed"] = ctx.seed;
    doc["trials"] = cfg.trials;
    doc["b_self_le_b_tau"] = holds;
    emit_json(out, doc);
    return kExitOk;
  }
  out << module_name(cmp.label) << " (series index " << t << ") over " << group_name(g)
      << ", p=" << ch.p << ", e=" << ch.e << ", q=" << ch.q << "\n";
  out << "s(" << module_name(cmp.label) << ") = " << to_string(cmp.s_formula) << "\n";
  if (cmp.gorenstein) {
    out << "tau = self; equality (Gorenstein)\n";
    out << "b_self = b_tau = " << cmp.b_self << "\n";
    return kExitOk;
  }
  out << "tau(" << module_name(cmp.label) << ") = " << module_name(cmp.tau_label) << "\n";
  out << "b_self (scheduler) = " << cmp.b_self << "\n";
  out << "b_tau (oracle, " << cfg.trials << " trials, seed " << ctx.seed << ") = " << cmp.b_tau
      << "\n";
  out << "b_self <= b_tau: " << (holds ? "yes" : "NO") << "\n";
  return kExitOk;
}

void add_group_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "group order n")->required();
  sub->add_option("--a", cfg.a, "weight a of the second coordinate")->required();
}

void add_char_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "characteristic (prime, coprime to n)")->required();
  sub->add_option("--e", cfg.e, "Frobenius iteration count")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"F-signature invariants of cyclic quotient surface singularities 1/n(1,a)"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "HJ expansion, special modules and their dual F-signatures");
  add_group_options(analyze, cfg);
  analyze->add_option("--format", cfg.format, "table or json");

  auto* frob = app.add_subcommand("frobenius", "Frobenius pushforward decompositions");
  add_group_options(frob, cfg);
  add_char_options(frob, cfg);
  frob->add_option("--t", cfg.t, "label of M_t (all labels if omitted)");
  frob->add_option("--format", cfg.format, "table or json");
  frob->add_flag("--enumerate", cfg.enumerate, "cross-check against monomial enumeration");
  frob->add_flag("--unsafe-large", cfg.unsafe_large, "lift the q^2 cap");

  auto* quiver = app.add_subcommand("quiver", "Auslander-Reiten quiver as DOT or JSON");
  add_group_options(quiver, cfg);
  quiver->add_option("--format", cfg.format, "dot or json");

  auto* certify = app.add_subcommand("certify", "schedule and verify surjections onto a special module");
  add_group_options(certify, cfg);
  add_char_options(certify, cfg);
  certify->add_option("--t", cfg.t, "series index of the special module")->required();
  certify->add_option("--format", cfg.format, "table or json");
  certify->add_flag("--witnesses", cfg.witnesses, "include the full witness list (json)");
  certify->add_flag("--unsafe-large", cfg.unsafe_large, "lift the q^2 cap");

  auto* estimate = app.add_subcommand("estimate", "randomized lower bound for b_e(M_t)");
  add_group_options(estimate, cfg);
  add_char_options(estimate, cfg);
  estimate->add_option("--t", cfg.t, "label of M_t")->required();
  estimate->add_option("--trials", cfg.trials, "random samples (default 16)");
  estimate->add_option("--seed", cfg.seed, "RNG seed (FSIG_SEED overrides)");
  estimate->add_option("--format", cfg.format, "table or json");
  estimate->add_flag("--unsafe-large", cfg.unsafe_large, "lift the q^2 cap");

  auto* compare = app.add_subcommand("compare-tau", "compare a special module with its AR translate");
  add_group_options(compare, cfg);
  add_char_options(compare, cfg);
  compare->add_option("--t", cfg.t, "series index of the special module")->required();
  compare->add_option("--trials", cfg.trials, "random samples (default 16)");
  compare->add_option("--seed", cfg.seed, "RNG seed (FSIG_SEED overrides)");
  compare->add_option("--format", cfg.format, "table or json");
  compare->add_flag("--unsafe-large", cfg.unsafe_large, "lift the q^2 cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (frob->parsed()) return cmd_frobenius(cfg, out);
    if (quiver->parsed()) return cmd_quiver(cfg, out);
    if (certify->parsed()) return cmd_certify(cfg, out);
    if (estimate->parsed()) return cmd_estimate(cfg, out);
    if (compare->parsed()) return cmd_compare_tau(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace fsig
