#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathres/staircase.hpp"

namespace pathres {

// Ids of the cells that are the unique maximal member of their fiber group.
std::vector<int> label_maximal_cells(const ComplexYdn& X);

// Run statistics of a label-maximal cell's box diagram.  A is the total
// number of boxes, N the number of within-row runs, N2 the number of runs
// of length 1 mod 3.  The cell is critical-inducing when no run has length
// 0 mod 3; then C = A+N is the label degree, B = (N+N2+A)/3, and
// D = (A+N2-2N-3)/3, and the induced critical cell contributes to
// beta_{i,j} with i = C-B-d+1 and j = C.  B and D are reported as 0 for
// cells that are not critical-inducing.
struct CellStats {
  long long A = 0;
  long long N = 0;
  long long N2 = 0;
  bool critical_inducing = false;
  long long B = 0;
  long long C = 0;
  long long D = 0;
};

// Errors on non-label-maximal input (a within-row gap of exactly one).
CellStats cell_stats(const Cell& c);

enum class BettiMethod { ClosedForm, Strings, Morse, Oracle };

// Accepts "closed-form", "strings", "morse", "oracle".
BettiMethod parse_method(const std::string& name);
std::string method_name(BettiMethod m);

// Graded Betti table of S/I(P_n)^d, homological degrees i >= 1 (beta_0 = 1
// is implicit).  Entries map (i, j) to beta_{i,j}.
struct BettiTable {
  int n = 0;
  int d = 0;
  std::string method;
  std::map<std::pair<int, int>, long long> entries;
};

// The four routes: ClosedForm evaluates closed_form_betti over the feasible
// window, Strings enumerates valid critical-inducing 01-strings, Morse
// buckets the critical cells of the assembled matching by
// (dim+1, label degree), Oracle aggregates taylor_betti over the prime
// field with the given characteristic.
BettiTable betti_table(int n, int d, BettiMethod method,
                       uint32_t prime = 32003);

// "text": lines "beta(i,j) = v"; "csv": header "i,j,beta" plus one row per
// entry; "json": the "betti-v1" document.  Output is byte-deterministic.
std::string format_table(const BettiTable& t, const std::string& format);

}  // namespace pathres
