#include "pathres/field.hpp"

#include <string>
#include <utility>

#include "pathres/errors.hpp"

namespace pathres {

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p < 2) throw InputError("field characteristic must be a prime");
  for (uint32_t q = 2; (uint64_t)q * q <= p; ++q)
    if (p % q == 0)
      throw InputError("field characteristic must be a prime, got " +
                       std::to_string(p));
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw InputError("division by zero in the prime field");
  // Extended Euclid on (a, p).
  int64_t t = 0, newt = 1, r = p_, newr = a % p_;
  while (newr != 0) {
    int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += p_;
  return (uint32_t)t;
}

uint32_t PrimeField::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  return (uint32_t)r;
}

}  // namespace pathres
