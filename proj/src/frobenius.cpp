#include "fsig/frobenius.hpp"

#include <algorithm>
#include <numeric>

#include "fsig/ar_quiver.hpp"
#include "fsig/monomial_module.hpp"

namespace fsig {

namespace {

// #{ x in [0, q) : x = r (mod n) } for r in [0, n).
Int residue_count(Int r, Int q, Int n) { return q / n + (r < q % n ? 1 : 0); }

}  // namespace

Int DecompositionVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), Int{0});
}

DecompositionVector decompose(Int t, const GroupParams& g, const CharacteristicParams& ch) {
  if (t < 0 || t >= g.n) {
    throw ValidationError("label must lie in [0, n) (got " + std::to_string(t) + ")");
  }
  if (g.n % ch.p == 0) {
    throw ValidationError("p divides n (p=" + std::to_string(ch.p) +
                          ", n=" + std::to_string(g.n) + ")");
  }
  const Int n = g.n, q = ch.q;
  const Int a_inv = mod_inverse(g.a, n);

  // rows[rho] = #{ v in [0,q) : v a = rho (mod n) }.
  std::vector<Int> rows(static_cast<std::size_t>(n));
  for (Int rho = 0; rho < n; ++rho) {
    rows[static_cast<std::size_t>(rho)] = residue_count(mod(rho * a_inv, n), q, n);
  }

  DecompositionVector dec;
  dec.source_label = t;
  dec.ch = ch;
  dec.counts.assign(static_cast<std::size_t>(n), 0);
  const Int qn = mod(q, n);
  for (Int s = 0; s < n; ++s) {
    const Int shift = mod(t - qn * s, n);
    Int c = 0;
    for (Int rho = 0; rho < n; ++rho) {
      c += rows[static_cast<std::size_t>(rho)] * residue_count(mod(shift - rho, n), q, n);
    }
    dec.counts[static_cast<std::size_t>(s)] = c;
  }
  if (dec.total() != q * q) {
    throw InvariantError("decomposition multiplicities do not sum to q^2");
  }
  return dec;
}

Int f_splitting_number(const GroupParams& g, const CharacteristicParams& ch) {
  return decompose(0, g, ch).count(0);
}

Rational generalized_fsignature(Int t, Int s, const GroupParams& g) {
  if (t < 0 || t >= g.n || s < 0 || s >= g.n) {
    throw ValidationError("labels must lie in [0, n)");
  }
  return Rational(module_rank(t) * module_rank(s), g.n);
}

Int tau_stability_check(Int t, const GroupParams& g, const CharacteristicParams& ch) {
  const DecompositionVector self = decompose(t, g, ch);
  const DecompositionVector translated = decompose(tau(t, g), g, ch);
  Int worst = 0;
  for (Int s = 0; s < g.n; ++s) {
    worst = std::max(worst, std::abs(self.count(s) - translated.count(s)));
  }
  return worst;
}

Int pushforward_generators(const DecompositionVector& dec, const GroupParams& g) {
  Int mu = 0;
  for (Int s = 0; s < g.n; ++s) {
    if (dec.count(s) != 0) mu += dec.count(s) * num_generators(s, g);
  }
  return mu;
}

}  // namespace fsig
