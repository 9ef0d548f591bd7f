#pragma once

// Dual F-signature of the special modules M_{i_t} of 1/n(1,a):
//
//   s(M_{i_t}) = (min(i_t, j_t) + 1) / n      if i_t != j_t
//              = (2 i_t + 1) / (2n)           if i_t == j_t
//
// together with the finite-level construction behind it. Modulo the maximal
// ideal only the summands labelled by F_t (reaching x^{i_t} through x-powers)
// and G_t (reaching y^{j_t} through y-powers) can contribute. One copy of
// M_{i_t} is covered by
//   - a copy of M_{i_t} itself,
//   - one x-side and one y-side summand, or
//   - two copies of R (through x^{i_t} and y^{j_t}).
// With X, Y the F_t\{0}, G_t\{0} multiplicities and c_0 copies of R free to
// join either side, the number of covered copies is
//
//   b = c_{i_t} + max_r min(X + r, Y + c_0 - r)
//     = c_{i_t} + min(floor((X + Y + c_0) / 2), X + c_0, Y + c_0).

#include <cstdint>
#include <vector>

#include "fsig/certificate.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/group.hpp"
#include "fsig/hj_series.hpp"
#include "fsig/surjectivity_oracle.hpp"

namespace fsig {

/// Closed-form value for series index t in [0, r]; t = 0 gives s(R) = 1/n.
Rational dual_fsig_special(Int t, const SeriesData& s, const GroupParams& g);

struct Schedule {
  Int b = 0;
  SurjectionCertificate certificate;
};

/// `dec` must be the pushforward of M_{i_t}. Throws ValidationError if t is
/// not a series index in [0, r] or dec has the wrong source label.
Schedule schedule_surjections(const DecompositionVector& dec, Int t, const SeriesData& s,
                              const GroupParams& g);

/// The closed form for b without building a certificate.
Int scheduled_copies(const DecompositionVector& dec, Int t, const SeriesData& s,
                     const GroupParams& g);

struct FiniteLevel {
  Int e = 0;
  Int b = 0;
  Rational ratio;  // b / q^2
};

struct SignatureReport {
  Int label = 0;
  Rational formula_value;
  std::vector<FiniteLevel> finite_level;
};

/// Scheduler values for e = 0..max_e at characteristic p.
SignatureReport signature_report(Int t, const SeriesData& s, const GroupParams& g, Int p,
                                 Int max_e);

struct TauComparison {
  Int label = 0;
  Int tau_label = 0;
  Rational s_formula;
  Int b_self = 0;
  Int b_tau = 0;
  bool gorenstein = false;
};

struct OracleBudget {
  Int trials = 16;
  std::uint64_t seed = 0;
  OracleLimits limits;
};

/// Scheduler b for M_{i_t} against the randomized estimate of b_e(tau(M_{i_t})).
TauComparison compare_with_tau(Int t, const SeriesData& s, const GroupParams& g,
                               const CharacteristicParams& ch, const OracleBudget& budget);

}  // namespace fsig
