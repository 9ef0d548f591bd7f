#include "fsig/group.hpp"

#include <limits>
#include <numeric>

namespace fsig {

GroupParams validate_group(Int n, Int a) {
  if (n < 2) {
    throw ValidationError("group order n must be at least 2 (got " +
                          std::to_string(n) + ")");
  }
  if (a < 1 || a > n - 1) {
    throw ValidationError("weight a must lie in [1, n-1] (got a=" +
                          std::to_string(a) + ", n=" + std::to_string(n) + ")");
  }
  if (std::gcd(a, n) != 1) {
    throw ValidationError("gcd(a, n) = " + std::to_string(std::gcd(a, n)) +
                          " != 1: the action contains a pseudo-reflection");
  }
  return GroupParams{n, a};
}

bool is_prime(Int p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

CharacteristicParams validate_characteristic(Int p, Int e, const GroupParams& g) {
  if (!is_prime(p)) {
    throw ValidationError("characteristic p=" + std::to_string(p) +
                          " is not prime");
  }
  if (e < 0) {
    throw ValidationError("Frobenius exponent e must be non-negative");
  }
  if (g.n % p == 0) {
    throw ValidationError("p divides n (p=" + std::to_string(p) +
                          ", n=" + std::to_string(g.n) + ")");
  }
  // q^2 must stay representable: q <= 3037000499.
  constexpr Int kMaxQ = 3037000499;
  Int q = 1;
  for (Int i = 0; i < e; ++i) {
    if (q > kMaxQ / p) {
      throw ValidationError("q = p^e is too large for exact 64-bit counting");
    }
    q *= p;
  }
  return CharacteristicParams{p, e, q};
}

Int mod_inverse(Int x, Int n) {
  if (n < 1) throw ValidationError("modulus must be positive");
  // Extended Euclid on (x mod n, n).
  Int old_r = mod(x, n), r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw ValidationError(std::to_string(x) + " is not invertible modulo " +
                          std::to_string(n));
  }
  return mod(old_s, n);
}

bool is_gorenstein(const GroupParams& g) { return mod(g.a + 1, g.n) == 0; }

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double approximate(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace fsig
