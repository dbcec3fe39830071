#include "pathres/counting.hpp"

#include <limits>

#include "pathres/errors.hpp"

namespace pathres {

namespace {

using Big = boost::multiprecision::cpp_int;

long long to_int64(const Big& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw GuardError(std::string(what) + " exceeds the 64-bit range");
  return (long long)v;
}

void check_params(int n, int d) {
  if (n < 2) throw InputError("n must be at least 2");
  if (d < 1) throw InputError("d must be at least 1");
}

}  // namespace

Big binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Big r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

long long count_strings(int n, int d, long long N, long long B, long long C) {
  check_params(n, d);
  Big r = binomial(N, 3 * B - C) * binomial(N - 1, d - 1) *
          binomial(n + 3LL * d - C - 2, N) * binomial(B - 1, N - 1);
  return to_int64(r, "string count");
}

long long count_by_BC(int n, int d, long long B, long long C) {
  check_params(n, d);
  Big r = binomial(n + 3LL * d - C - 2, 3 * B - C) *
          binomial(n + 2LL * d - 2 * B - 2, C - 2 * B) * binomial(B - 1, d - 1);
  return to_int64(r, "string count");
}

long long closed_form_betti(int n, int d, long long i, long long j) {
  check_params(n, d);
  Big r = binomial(n + 3LL * d - j - 2, 2 * j - 3 * i - 3 * d + 3) *
          binomial(n + 4LL * d + 2 * i - 2 * j - 4, 2 * d + 2 * i - j - 2) *
          binomial(j - i - d, d - 1);
  return to_int64(r, "betti number");
}

}  // namespace pathres
