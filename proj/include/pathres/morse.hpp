#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathres/covering.hpp"
#include "pathres/homology.hpp"
#include "pathres/staircase.hpp"

namespace pathres {

// Cells of Y^d_n grouped by their tuple of covered vertex sets
// (V_1, ..., V_d).  All members of a group share one coordinate label, and
// the group is the face set of its unique label-maximal member max_cell.
struct FiberGroup {
  std::vector<std::vector<int>> key;
  std::vector<int> members;
  int max_cell = -1;
};

// Groups sorted by key.  Verifies the unique-maximal-member property and
// throws CheckError if it fails.
std::vector<FiberGroup> fiber_decompose(const ComplexYdn& X);

// A partial matching on cell ids.  Pairs are (face, coface); critical holds
// the unmatched ids in increasing order.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> critical;
};

// Matching of one fiber group: the group factors as a product of covering
// complexes Cov(P_v), one per connected component of each V_i, and the
// product rule matches on the first factor (rows first, then components
// left to right) whose face is not critical.  At most one member, the one
// with every factor critical, is left critical.
Matching fiber_matching(const ComplexYdn& X, const FiberGroup& g);

// Union of the fiber matchings over all groups, audited before returning.
Matching assemble_matching(const ComplexYdn& X);

// Validates pair incidence, equality of labels within pairs, coverage, and
// acyclicity of the directed cell graph (boundary down, matched pairs up).
// Throws CheckError naming an offending cycle otherwise.
void audit_matching(const ComplexYdn& X, const Matching& m);

// Integer Morse differential between critical cells, computed by the
// memoized gradient flow recursion.  Every critical cell appears as a key.
// Guard: at most 10^4 cells in X.
std::map<int, std::vector<std::pair<int, long long>>> morse_boundary(
    const ComplexYdn& X, const Matching& m);

// Chain complex of the Morse differential reduced mod f.p().
ChainComplex morse_chain_complex(const ComplexYdn& X, const Matching& m,
                                 const PrimeField& f);

// Serialized "morse-v1" document.
std::string matching_to_json(const Matching& m);

}  // namespace pathres
