#pragma once

// First-principles checks that do not share code paths with the closed forms:
//
//  * enumerate_decomposition rebuilds ^eM_t from its monomials;
//  * verify_certificate reduces a witness list modulo the maximal ideal and
//    checks the rank of the resulting incidence matrix (Nakayama);
//  * estimate_b_e searches for surjections ^eM_t ->> M_t^b with random
//    monomial-hom coefficients in an extension of GF(p).

#include <cstdint>

#include "fsig/certificate.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/group.hpp"

namespace fsig {

struct OracleLimits {
  Int enumeration_max_q2 = 1'000'000;
  Int estimate_max_q2 = 10'000;
  Int min_field_size = 64;
};

DecompositionVector enumerate_decomposition(Int t, const GroupParams& g,
                                            const CharacteristicParams& ch,
                                            const OracleLimits& limits = {});

/// True iff the certificate's homs jointly surject onto M_t^copies. Returns
/// false when the witnesses overdraw or reuse a source summand; throws
/// ValidationError on a hom of the wrong weight.
bool verify_certificate(const SurjectionCertificate& cert, const GroupParams& g,
                        const CharacteristicParams& ch);

/// One randomized max-rank instance: find b copies of M_target inside the
/// image of `sources`, sampling coefficients from GF(field_size).
struct RankProblem {
  Int target = 0;
  Int copies = 0;
  DecompositionVector sources;
  Int field_size = 0;
  std::uint64_t seed = 0;
};

struct OracleEstimate {
  Int target = 0;
  /// Largest b for which a full-rank sample was found: a certified lower bound.
  Int b = 0;
  /// floor(mu(^eM_t) / mu(M_t)).
  Int generator_bound = 0;
  /// rank(^eM_t) / rank(M_t) = q^2.
  Int rank_bound = 0;
  /// min over sets S of target generators of #(source generators reaching
  /// S on the nose) / |S|.
  Int coverage_bound = 0;
  Int field_size = 0;
  Int trials_used = 0;
  bool exact = false;
};

OracleEstimate estimate_b_e_report(Int t, const GroupParams& g, const CharacteristicParams& ch,
                                   Int trials, std::uint64_t seed,
                                   const OracleLimits& limits = {});

Int estimate_b_e(Int t, const GroupParams& g, const CharacteristicParams& ch, Int trials,
                 std::uint64_t seed, const OracleLimits& limits = {});

/// Counter-mode stream: a well-mixed 64-bit word for (seed, trial, source
/// copy, target copy, hom index).
std::uint64_t coefficient_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t source,
                               std::uint64_t target, std::uint64_t hom);

}  // namespace fsig
