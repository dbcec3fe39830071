#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pathres {

// Binomial coefficient with the zero convention: binom(a, b) = 0 unless
// 0 <= b <= a.  All counting formulas below rely on this convention.
boost::multiprecision::cpp_int binomial(long long a, long long b);

// Number of valid 01-strings for Y^d_n with N within-row runs, total run
// statistic B and degree C:
//   binom(N, 3B-C) * binom(N-1, d-1) * binom(n+3d-C-2, N) * binom(B-1, N-1).
long long count_strings(int n, int d, long long N, long long B, long long C);

// Sum of count_strings over N in closed form:
//   binom(n+3d-C-2, 3B-C) * binom(n+2d-2B-2, C-2B) * binom(B-1, d-1).
long long count_by_BC(int n, int d, long long B, long long C);

// Graded Betti number beta_{i,j}(S/I(P_n)^d):
//   binom(n+3d-j-2, 2j-3i-3d+3) * binom(n+4d+2i-2j-4, 2d+2i-j-2)
//     * binom(j-i-d, d-1).
// Equals count_by_BC(n, d, j-i-d+1, j).
long long closed_form_betti(int n, int d, long long i, long long j);

}  // namespace pathres
