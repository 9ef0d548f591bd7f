#include "fsig/dual_fsignature.hpp"

#include <algorithm>

#include "fsig/ar_quiver.hpp"
#include "fsig/surjectivity_oracle.hpp"

namespace fsig {

namespace {

void check_index(Int t, const SeriesData& s) {
  if (t < 0 || t > s.length()) {
    throw ValidationError("series index t must lie in [0, r] (got " + std::to_string(t) +
                          ", r=" + std::to_string(s.length()) + ")");
  }
}

Int special_label(Int t, const SeriesData& s, const GroupParams& g) {
  return mod(s.i(t), g.n);
}

void check_source(const DecompositionVector& dec, Int t, const SeriesData& s,
                  const GroupParams& g) {
  check_index(t, s);
  if (static_cast<Int>(dec.counts.size()) != g.n) {
    throw ValidationError("decomposition vector must have n entries");
  }
  if (dec.source_label != special_label(t, s, g)) {
    throw ValidationError("decomposition is of ^eM_" + std::to_string(dec.source_label) +
                          ", expected ^eM_" + std::to_string(special_label(t, s, g)));
  }
}

struct SideEntry {
  Int label = 0;
  Exponent hom;
};

}  // namespace

Rational dual_fsig_special(Int t, const SeriesData& s, const GroupParams& g) {
  check_index(t, s);
  if (t == 0) return Rational(1, g.n);
  const Int i = s.i(t), j = s.j(t);
  if (i != j) return Rational(std::min(i, j) + 1, g.n);
  return Rational(2 * i + 1, 2 * g.n);
}

Int scheduled_copies(const DecompositionVector& dec, Int t, const SeriesData& s,
                     const GroupParams& g) {
  check_source(dec, t, s, g);
  if (t == 0) return dec.count(0);
  const FGSets sets = fg_sets(t, s, g);
  Int x = 0, y = 0;
  for (Int f : sets.f) x += f == 0 ? 0 : dec.count(f);
  for (Int l : sets.g) y += l == 0 ? 0 : dec.count(l);
  const Int c0 = dec.count(0);
  return dec.count(special_label(t, s, g)) + std::min({(x + y + c0) / 2, x + c0, y + c0});
}

Schedule schedule_surjections(const DecompositionVector& dec, Int t, const SeriesData& s,
                              const GroupParams& g) {
  check_source(dec, t, s, g);
  const Int label = special_label(t, s, g);

  Schedule out;
  SurjectionCertificate& cert = out.certificate;
  cert.target_label = label;
  cert.source_counts = dec.counts;

  std::vector<Int> next_copy(static_cast<std::size_t>(g.n), 0);
  auto take = [&next_copy](Int l) { return next_copy[static_cast<std::size_t>(l)]++; };

  Int target_copy = 0;
  for (Int k = 0; k < dec.count(label); ++k) {
    cert.witnesses.push_back(
        {WitnessKind::trivial, {{label, take(label), target_copy++, Exponent{0, 0}}}});
  }

  if (t > 0) {
    const Int it = s.i(t), jt = s.j(t);
    const FGSets sets = fg_sets(t, s, g);

    // Larger labels first on both sides.
    std::vector<SideEntry> x_side, y_side;
    std::vector<Int> f_labels(sets.f.begin(), sets.f.end());
    std::sort(f_labels.rbegin(), f_labels.rend());
    for (Int f : f_labels) {
      if (f == 0) continue;
      for (Int k = 0; k < dec.count(f); ++k) x_side.push_back({f, {it - f, 0}});
    }
    std::vector<std::pair<Int, Int>> g_labels;  // (label, y-exponent m)
    for (Int m = 1; m <= jt; ++m) g_labels.emplace_back(sets.g[static_cast<std::size_t>(m - 1)], m);
    std::sort(g_labels.rbegin(), g_labels.rend());
    for (const auto& [l, m] : g_labels) {
      if (l == 0) continue;
      for (Int k = 0; k < dec.count(l); ++k) y_side.push_back({l, {0, m}});
    }

    const Int x = static_cast<Int>(x_side.size()), y = static_cast<Int>(y_side.size());
    const Int c0 = dec.count(0);
    const Int pairs = std::min({(x + y + c0) / 2, x + c0, y + c0});
    x_side.resize(static_cast<std::size_t>(std::min(x, pairs)));
    y_side.resize(static_cast<std::size_t>(std::min(y, pairs)));
    x_side.resize(static_cast<std::size_t>(pairs), SideEntry{0, {it, 0}});
    y_side.resize(static_cast<std::size_t>(pairs), SideEntry{0, {0, jt}});

    for (Int k = 0; k < pairs; ++k) {
      const SideEntry& xs = x_side[static_cast<std::size_t>(k)];
      const SideEntry& ys = y_side[static_cast<std::size_t>(k)];
      const WitnessKind kind =
          xs.label == 0 && ys.label == 0 ? WitnessKind::r_pair : WitnessKind::pair;
      Witness w{kind, {}};
      w.maps.push_back({xs.label, take(xs.label), target_copy, xs.hom});
      w.maps.push_back({ys.label, take(ys.label), target_copy, ys.hom});
      cert.witnesses.push_back(std::move(w));
      ++target_copy;
    }
  }

  for (Int l = 0; l < g.n; ++l) {
    if (next_copy[static_cast<std::size_t>(l)] > dec.count(l)) {
      throw InvariantError("scheduler overdrew summand M_" + std::to_string(l));
    }
  }
  cert.copies = target_copy;
  out.b = target_copy;
  if (out.b != scheduled_copies(dec, t, s, g)) {
    throw InvariantError("certificate size disagrees with the closed form");
  }
  return out;
}

SignatureReport signature_report(Int t, const SeriesData& s, const GroupParams& g, Int p,
                                 Int max_e) {
  SignatureReport rep;
  rep.label = special_label(t, s, g);
  rep.formula_value = dual_fsig_special(t, s, g);
  for (Int e = 0; e <= max_e; ++e) {
    const CharacteristicParams ch = validate_characteristic(p, e, g);
    const Int b = scheduled_copies(decompose(rep.label, g, ch), t, s, g);
    rep.finite_level.push_back({e, b, Rational(b, ch.q * ch.q)});
  }
  return rep;
}

TauComparison compare_with_tau(Int t, const SeriesData& s, const GroupParams& g,
                               const CharacteristicParams& ch, const OracleBudget& budget) {
  check_index(t, s);
  TauComparison out;
  out.label = special_label(t, s, g);
  out.tau_label = tau(out.label, g);
  out.s_formula = dual_fsig_special(t, s, g);
  out.gorenstein = is_gorenstein(g);
  out.b_self = scheduled_copies(decompose(out.label, g, ch), t, s, g);
  // tau(M) = M for Gorenstein R: both sides are the same module.
  out.b_tau = out.gorenstein ? out.b_self
                             : estimate_b_e(out.tau_label, g, ch, budget.trials, budget.seed,
                                                            budget.limits);
  return out;
}

}  // namespace fsig
