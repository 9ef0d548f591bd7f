#pragma once

// Hirzebruch-Jung continued fractions and the i-/j-series attached to them.
//
//   n/a = [a_1, ..., a_r] = a_1 - 1/(a_2 - 1/(... - 1/a_r)),  every a_t >= 2
//
//   i_0 = n, i_1 = a, i_t = a_{t-1} i_{t-1} - i_{t-2}
//   j_0 = 0, j_1 = 1, j_t = a_{t-1} j_{t-1} - j_{t-2}      (t = 2..r+1)
//
// The special Cohen-Macaulay modules of 1/n(1,a) are M_{i_t}, t = 0..r, and
// the non-free ones are minimally generated by x^{i_t} and y^{j_t}.

#include <vector>

#include "fsig/group.hpp"

namespace fsig {

struct HJExpansion {
  std::vector<Int> alphas;

  Int length() const { return static_cast<Int>(alphas.size()); }
};

/// i_0..i_{r+1} and j_0..j_{r+1}; both vectors have r + 2 entries.
struct SeriesData {
  std::vector<Int> i_series;
  std::vector<Int> j_series;

  /// r, the length of the continued fraction.
  Int length() const { return static_cast<Int>(i_series.size()) - 2; }
  Int i(Int t) const { return i_series.at(static_cast<std::size_t>(t)); }
  Int j(Int t) const { return j_series.at(static_cast<std::size_t>(t)); }
};

/// Greedy expansion beta = sum_t d_t i_t (t = 1..r). d[0] holds d_1.
struct DigitVector {
  std::vector<Int> d;
  Int beta = 0;
};

/// Index sets F_t = {0, ..., i_t - 1} and G_t = {i_t - m a mod n : m = 1..j_t}.
/// `g` keeps the order m = 1..j_t, so its last entry is always 0.
struct FGSets {
  std::vector<Int> f;
  std::vector<Int> g;
};

HJExpansion hj_expand(const GroupParams& g);

/// Evaluates [a_1, ..., a_r] exactly. Throws ValidationError on an empty list.
Rational evaluate(const std::vector<Int>& alphas);

SeriesData compute_series(const HJExpansion& exp, const GroupParams& g);

/// Convenience: compute_series(hj_expand(g), g).
SeriesData series_for(const GroupParams& g);

/// Labels i_t mod n for t = 0..r (so R comes first as label 0).
std::vector<Int> special_labels(const SeriesData& s);

/// Series index t with i_t = label, or -1 if the label is not special.
Int special_index(Int label, const SeriesData& s, const GroupParams& g);

DigitVector digit_expansion(Int beta, const SeriesData& s);

/// beta~ = sum_t d_t j_t; satisfies a * beta~ = beta (mod n).
Int tilde(Int beta, const SeriesData& s, const GroupParams& g);

/// Requires 1 <= t <= r.
FGSets fg_sets(Int t, const SeriesData& s, const GroupParams& g);

}  // namespace fsig
