#pragma once

#include <string>

#include "pathres/staircase.hpp"

namespace pathres {

// 01-string of a label-maximal cell: the d x (n-1) incidence matrix with
// M[i][a-i+1] = 1 for each box a of row i, flattened row-major.  Valid
// strings have nonempty rows, within-row gaps of at least two zeros
// (label-maximality), and first column of row i+1 >= last column of row i
// (the staircase condition); for n >= 3 this is the same as having exactly
// d-1 interior maximal zero-runs, each of length >= n-2.
struct StringCode {
  int n = 0;
  int d = 0;
  std::string bits;
};

// True iff no row of c has a gap of exactly one box.
bool is_label_maximal(const Cell& c);

// Errors on cells that are not label-maximal.
StringCode encode_string(const Cell& c, int n);

// Errors name the violated invariant.
Cell decode_string(const StringCode& s);

}  // namespace pathres
