#include "fsig/galois_field.hpp"

#include <algorithm>

namespace fsig {

GaloisField::GaloisField(Int p, Int degree) : p_(p), degree_(degree) {
  if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
  if (degree < 1) throw ValidationError("field degree must be positive");
  Int size = 1;
  for (Int i = 0; i < degree; ++i) {
    if (size > kMaxTableSize / p) {
      if (degree == 1) break;
      throw ValidationError("GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                            ") is too large for table arithmetic");
    }
    size *= p;
  }
  if (degree == 1 && p > kMaxTableSize) {
    if (p >= (Int{1} << 31)) throw ValidationError("prime field too large");
    size_ = p;
    table_mode_ = false;
    return;
  }
  size_ = size;
  build_tables();
}

GaloisField GaloisField::with_min_size(Int p, Int min_size) {
  if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
  Int degree = 1, size = p;
  while (size < min_size) {
    if (size > kMaxTableSize / p) {
      throw ValidationError("no table-sized field of characteristic " +
                            std::to_string(p) + " has " + std::to_string(min_size) +
                            " elements");
    }
    size *= p;
    ++degree;
  }
  return GaloisField(p, degree);
}

GaloisField GaloisField::prime(Int p) {
  if (!is_prime(p) || p >= (Int{1} << 31)) {
    throw ValidationError("prime field needs a prime below 2^31");
  }
  GaloisField f;
  f.p_ = p;
  f.degree_ = 1;
  f.size_ = p;
  f.table_mode_ = false;
  return f;
}

void GaloisField::build_tables() {
  const auto p = static_cast<std::uint32_t>(p_);
  const auto k = static_cast<std::size_t>(degree_);
  const auto q = static_cast<std::uint32_t>(size_);
  order_ = q - 1;

  std::vector<std::uint32_t> pow_p(k, 1);
  for (std::size_t i = 1; i < k; ++i) pow_p[i] = pow_p[i - 1] * p;

  std::vector<std::uint32_t> exp_table(order_);
  std::vector<std::uint32_t> log_table(q, kZeroLog);
  std::vector<std::uint32_t> coeffs(k), digits(k);

  // Enumerate monic f = X^k + c_{k-1} X^{k-1} + ... + c_0 with c_0 != 0 until
  // X generates the multiplicative group of GF(p)[X]/f.
  bool found = false;
  for (std::uint32_t code = 1; code < q && !found; ++code) {
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = (code / pow_p[i]) % p;
    if (coeffs[0] == 0) continue;
    std::fill(digits.begin(), digits.end(), 0u);
    digits[0] = 1;
    std::uint32_t step = 0;
    bool primitive = true;
    while (step < order_) {
      std::uint32_t enc = 0;
      for (std::size_t i = 0; i < k; ++i) enc += digits[i] * pow_p[i];
      if (step > 0 && enc == 1) {
        primitive = false;
        break;
      }
      exp_table[step++] = enc;
      // multiply by X and reduce X^k = -(c_{k-1} X^{k-1} + ... + c_0)
      const std::uint32_t top = digits[k - 1];
      for (std::size_t i = k - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      for (std::size_t i = 0; i < k; ++i) {
        digits[i] = (digits[i] + (p - (top * coeffs[i]) % p)) % p;
      }
    }
    if (!primitive) continue;
    std::uint32_t enc = 0;
    for (std::size_t i = 0; i < k; ++i) enc += digits[i] * pow_p[i];
    if (enc != 1) continue;
    found = true;
  }
  if (!found) throw InvariantError("no primitive polynomial found");

  for (std::uint32_t l = 0; l < order_; ++l) log_table[exp_table[l]] = l;
  zech_.assign(order_, kZeroLog);
  for (std::uint32_t l = 0; l < order_; ++l) {
    const std::uint32_t v = exp_table[l];
    const std::uint32_t d0 = v % p;
    const std::uint32_t w = v - d0 + (d0 + 1) % p;
    zech_[l] = w == 0 ? kZeroLog : log_table[w];
  }
  prime_logs_.assign(p, kZeroLog);
  for (std::uint32_t c = 1; c < p; ++c) prime_logs_[c] = log_table[c];
}

GaloisField::Element GaloisField::from_index(std::uint64_t k) const {
  k %= static_cast<std::uint64_t>(size_);
  if (!table_mode_) return static_cast<Element>(k);
  return k == 0 ? kZeroLog : static_cast<Element>(k - 1);
}

GaloisField::Element GaloisField::from_int(Int v) const {
  const Int r = mod(v, p_);
  if (!table_mode_) return static_cast<Element>(r);
  return r == 0 ? kZeroLog : prime_logs_[static_cast<std::size_t>(r)];
}

GaloisField::Element GaloisField::inv(Element x) const {
  if (is_zero(x)) throw InvariantError("division by zero in GF(" + std::to_string(size_) + ")");
  if (table_mode_) return x == 0 ? 0 : order_ - x;
  // Fermat: x^(p-2).
  std::uint64_t result = 1, base = x, e = static_cast<std::uint64_t>(p_ - 2);
  const auto p = static_cast<std::uint64_t>(p_);
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

}  // namespace fsig
