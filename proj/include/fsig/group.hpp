#pragma once

// Group datum 1/n(1,a), Frobenius datum (p, e) and the modular arithmetic
// shared by every other component.
//
// The generator diag(zeta, zeta^a) is never materialized: every quantity used
// downstream depends only on residues mod n.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace fsig {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Rejected input: bad group datum, bad characteristic, out-of-range label.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal structural check failed. Should never fire.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The cyclic group 1/n(1,a): n >= 2, 1 <= a <= n-1, gcd(a, n) = 1.
struct GroupParams {
  Int n = 0;
  Int a = 0;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Characteristic p, iteration count e and q = p^e.
struct CharacteristicParams {
  Int p = 0;
  Int e = 0;
  Int q = 1;

  friend bool operator==(const CharacteristicParams&,
                         const CharacteristicParams&) = default;
};

GroupParams validate_group(Int n, Int a);

/// Validates p prime, e >= 0, gcd(p, n) = 1 and that q^2 fits in 64 bits.
CharacteristicParams validate_characteristic(Int p, Int e, const GroupParams& g);

bool is_prime(Int p);

/// Inverse of x modulo n, in [0, n). Throws ValidationError when gcd(x, n) != 1.
Int mod_inverse(Int x, Int n);

/// Canonical residue in [0, n).
constexpr Int mod(Int x, Int n) {
  const Int r = x % n;
  return r < 0 ? r + n : r;
}

/// R = k[[x,y]]^G is Gorenstein exactly when G lies in SL(2), i.e. a = n-1.
bool is_gorenstein(const GroupParams& g);

/// "num/den" in lowest terms, also for integers ("3/1").
std::string to_string(const Rational& r);

double approximate(const Rational& r);

}  // namespace fsig
