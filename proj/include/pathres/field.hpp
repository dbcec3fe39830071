#pragma once

#include <cstdint>

namespace pathres {

// Arithmetic in Z/p for a prime p.  Primality is validated on construction.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  // Errors on 0.
  uint32_t inv(uint32_t a) const;

  uint32_t from_int(long long v) const;

 private:
  uint32_t p_ = 0;
};

}  // namespace pathres
