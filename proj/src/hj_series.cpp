#include "fsig/hj_series.hpp"

namespace fsig {

HJExpansion hj_expand(const GroupParams& g) {
  HJExpansion out;
  Int num = g.n, den = g.a;
  while (true) {
    const Int alpha = (num + den - 1) / den;
    out.alphas.push_back(alpha);
    const Int rem = alpha * den - num;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

Rational evaluate(const std::vector<Int>& alphas) {
  if (alphas.empty()) throw ValidationError("empty continued fraction");
  Rational value(alphas.back());
  for (auto it = alphas.rbegin() + 1; it != alphas.rend(); ++it) {
    value = Rational(*it) - Rational(1) / value;
  }
  return value;
}

SeriesData compute_series(const HJExpansion& exp, const GroupParams& g) {
  const std::size_t r = exp.alphas.size();
  SeriesData s;
  s.i_series.resize(r + 2);
  s.j_series.resize(r + 2);
  s.i_series[0] = g.n;
  s.i_series[1] = g.a;
  s.j_series[0] = 0;
  s.j_series[1] = 1;
  for (std::size_t t = 2; t <= r + 1; ++t) {
    const Int alpha = exp.alphas[t - 2];
    s.i_series[t] = alpha * s.i_series[t - 1] - s.i_series[t - 2];
    s.j_series[t] = alpha * s.j_series[t - 1] - s.j_series[t - 2];
  }
  if (s.i_series[r] != 1 || s.i_series[r + 1] != 0 || s.j_series[r + 1] != g.n) {
    throw InvariantError("i/j-series endpoints do not match the expansion of n/a");
  }
  return s;
}

SeriesData series_for(const GroupParams& g) {
  return compute_series(hj_expand(g), g);
}

std::vector<Int> special_labels(const SeriesData& s) {
  const Int n = s.i(0);
  std::vector<Int> labels;
  for (Int t = 0; t <= s.length(); ++t) labels.push_back(mod(s.i(t), n));
  return labels;
}

Int special_index(Int label, const SeriesData& s, const GroupParams& g) {
  const Int want = mod(label, g.n);
  for (Int t = 0; t <= s.length(); ++t) {
    if (mod(s.i(t), g.n) == want) return t;
  }
  return -1;
}

DigitVector digit_expansion(Int beta, const SeriesData& s) {
  const Int n = s.i(0);
  if (beta < 0 || beta >= n) {
    throw ValidationError("digit expansion needs 0 <= beta < n (got " +
                          std::to_string(beta) + ")");
  }
  DigitVector out;
  out.beta = beta;
  Int h = beta;
  for (Int t = 1; t <= s.length(); ++t) {
    out.d.push_back(h / s.i(t));
    h %= s.i(t);
  }
  if (h != 0) throw InvariantError("digit expansion left a non-zero remainder");
  return out;
}

Int tilde(Int beta, const SeriesData& s, const GroupParams&) {
  const DigitVector dv = digit_expansion(beta, s);
  Int sum = 0;
  for (std::size_t k = 0; k < dv.d.size(); ++k) {
    sum += dv.d[k] * s.j(static_cast<Int>(k) + 1);
  }
  return sum;
}

FGSets fg_sets(Int t, const SeriesData& s, const GroupParams& g) {
  if (t < 1 || t > s.length()) {
    throw ValidationError("series index t must lie in [1, r] (got " +
                          std::to_string(t) + ", r=" +
                          std::to_string(s.length()) + ")");
  }
  FGSets out;
  const Int it = s.i(t), jt = s.j(t);
  out.f.reserve(static_cast<std::size_t>(it));
  for (Int f = 0; f < it; ++f) out.f.push_back(f);
  out.g.reserve(static_cast<std::size_t>(jt));
  for (Int m = 1; m <= jt; ++m) out.g.push_back(mod(it - m * g.a, g.n));
  return out;
}

}  // namespace fsig
