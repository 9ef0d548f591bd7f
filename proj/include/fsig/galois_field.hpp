#pragma once

// Finite fields GF(p^k) for the randomized rank estimator.
//
// Small fields are stored in Zech-logarithm form: a non-zero element is its
// discrete log with respect to a primitive element, so multiplication is an
// addition of exponents and addition goes through the Zech table
// g^a + g^b = g^(a + Z(b - a)). Prime fields too large for tables use plain
// residues.

#include <cstdint>
#include <vector>

#include "fsig/group.hpp"

namespace fsig {

class GaloisField {
 public:
  using Element = std::uint32_t;

  /// Largest field kept in table form.
  static constexpr Int kMaxTableSize = Int{1} << 22;

  /// GF(p^degree). Throws ValidationError if p is not prime or the field is
  /// too large for tables (degree > 1 only).
  GaloisField(Int p, Int degree);

  /// Smallest GF(p^k) with at least `min_size` elements.
  static GaloisField with_min_size(Int p, Int min_size);

  /// The prime field GF(p) in residue form, for any prime p < 2^31.
  static GaloisField prime(Int p);

  Int characteristic() const { return p_; }
  Int degree() const { return degree_; }
  Int size() const { return size_; }

  Element zero() const { return table_mode_ ? kZeroLog : 0; }
  Element one() const { return table_mode_ ? 0 : 1; }
  bool is_zero(Element x) const { return x == zero(); }

  /// Maps [0, size) bijectively onto the field (0 -> zero).
  Element from_index(std::uint64_t k) const;
  /// Image of an integer under Z -> GF(p).
  Element from_int(Int v) const;

  Element add(Element x, Element y) const {
    if (!table_mode_) return static_cast<Element>((std::uint64_t{x} + y) % static_cast<std::uint64_t>(p_));
    if (x == kZeroLog) return y;
    if (y == kZeroLog) return x;
    std::uint32_t d = y >= x ? y - x : y + order_ - x;
    const Element z = zech_[d];
    if (z == kZeroLog) return kZeroLog;
    std::uint32_t s = x + z;
    return s >= order_ ? s - order_ : s;
  }

  Element neg(Element x) const {
    if (!table_mode_) return x == 0 ? 0 : static_cast<Element>(p_ - x);
    if (x == kZeroLog || p_ == 2) return x;
    std::uint32_t s = x + order_ / 2;
    return s >= order_ ? s - order_ : s;
  }

  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    if (!table_mode_) return static_cast<Element>((std::uint64_t{x} * y) % static_cast<std::uint64_t>(p_));
    if (x == kZeroLog || y == kZeroLog) return kZeroLog;
    std::uint32_t s = x + y;
    return s >= order_ ? s - order_ : s;
  }

  /// Throws InvariantError on zero.
  Element inv(Element x) const;

 private:
  GaloisField() = default;
  void build_tables();

  static constexpr Element kZeroLog = 0xFFFFFFFFu;

  Int p_ = 2;
  Int degree_ = 1;
  Int size_ = 2;
  bool table_mode_ = true;
  std::uint32_t order_ = 1;          // size - 1
  std::vector<Element> zech_;        // zech_[l] = log(1 + g^l)
  std::vector<Element> prime_logs_;  // log of c in GF(p), c = 1..p-1
};

}  // namespace fsig
