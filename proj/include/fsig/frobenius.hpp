#pragma once

// Frobenius pushforwards ^eM_t = (+)_s M_s^{c_s}.
//
// Splitting S over S^q by the basis x^u y^v, (u, v) in [0,q)^2, the summand
// through x^u y^v is isomorphic to M_s with q s = t - u - v a (mod n). Hence
//
//   c_s = #{ (u, v) in [0,q)^2 : u + v a = t - q s (mod n) }.
//
// This closed form is cross-checked against the monomial enumeration in
// surjectivity_oracle.hpp; it is not taken on faith.

#include <vector>

#include "fsig/group.hpp"

namespace fsig {

struct DecompositionVector {
  Int source_label = 0;
  CharacteristicParams ch;
  /// counts[s] = multiplicity of M_s; size n.
  std::vector<Int> counts;

  Int count(Int s) const { return counts.at(static_cast<std::size_t>(s)); }
  Int total() const;
};

DecompositionVector decompose(Int t, const GroupParams& g, const CharacteristicParams& ch);

/// a_e: the multiplicity of R in ^eR.
Int f_splitting_number(const GroupParams& g, const CharacteristicParams& ch);

/// s(M_t, M_s) = rank(M_t) rank(M_s) / n.
Rational generalized_fsignature(Int t, Int s, const GroupParams& g);

/// max_s |c^t_s - c^{tau(t)}_s|.
Int tau_stability_check(Int t, const GroupParams& g, const CharacteristicParams& ch);

/// Number of minimal generators of ^eM_t, i.e. sum_s c_s mu(M_s).
Int pushforward_generators(const DecompositionVector& dec, const GroupParams& g);

}  // namespace fsig
