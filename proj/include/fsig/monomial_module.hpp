#pragma once

// The rank-one MCM modules M_t = span{ x^i y^j : i + j a = t (mod n) } over
// R = k[[x,y]]^G, described by their minimal monomial generators, and the
// monomial hom calculus modulo the maximal ideal.

#include <cstdint>
#include <string>
#include <vector>

#include "fsig/group.hpp"

namespace fsig {

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
  Int i = 0;
  Int j = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const { return {i + o.i, j + o.j}; }
};

/// Weight i + j a mod n, i.e. the label of the module containing x^i y^j.
Int weight(const Exponent& m, const GroupParams& g);

/// "1", "x", "y^5", "x^4y", ...
std::string monomial_string(const Exponent& m);

struct MonomialModule {
  Int label = 0;
  /// Sorted by increasing j (hence decreasing i).
  std::vector<Exponent> mingens;

  Int num_generators() const { return static_cast<Int>(mingens.size()); }
  /// Position of `m` among the minimal generators, or -1.
  Int generator_index(const Exponent& m) const;
};

/// Incidence matrix of a monomial hom reduced modulo m: rows are target
/// generators, columns are source generators, entries 0 or 1.
struct InducedMatrix {
  Int rows = 0;
  Int cols = 0;
  std::vector<std::uint8_t> entries;  // row-major

  std::uint8_t at(Int r, Int c) const {
    return entries[static_cast<std::size_t>(r * cols + c)];
  }
};

MonomialModule minimal_generators(Int label, const GroupParams& g);

Int num_generators(Int label, const GroupParams& g);

/// Every M_t has rank one in the cyclic case.
constexpr Int module_rank(Int /*label*/) { return 1; }

/// Hom(M_s, M_t) = M_{t-s} acting by multiplication; its minimal generators
/// span the hom space modulo radical-squared contributions.
MonomialModule hom_monomials(Int source, Int target, const GroupParams& g);

/// Throws ValidationError unless weight(f) = target - source (mod n).
InducedMatrix induced_matrix(const Exponent& f, Int source, Int target,
                             const GroupParams& g);

/// Same as above with generator lists already at hand (hot path).
InducedMatrix induced_matrix(const Exponent& f, const MonomialModule& source,
                             const MonomialModule& target, const GroupParams& g);

/// Minimal generators of every label 0..n-1, indexed by label.
std::vector<MonomialModule> all_modules(const GroupParams& g);

}  // namespace fsig
