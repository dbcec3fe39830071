#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pathres/field.hpp"
#include "pathres/ideals.hpp"
#include "pathres/linalg.hpp"
#include "pathres/staircase.hpp"

namespace pathres {

// Chain complex over a prime field.  ranks[k] is the number of basis
// elements in degree k; d[k] maps degree k to degree k-1 (d[0] is an
// unused placeholder, the augmentation is handled by homology_ranks).
struct ChainComplex {
  PrimeField field;
  std::vector<long long> ranks;
  std::vector<SparseMatrix> d;
};

// Homology ranks in degrees 0..top.  Checks d[k] o d[k+1] = 0 and errors
// with "not a complex" otherwise.  With reduced=true an all-ones
// augmentation row is used as d[0] (and d[1]'s columns must sum to zero).
std::vector<long long> homology_ranks(const ChainComplex& c, bool reduced);

// Chain complex of a downward-closed set of cells of X (such as the output
// of subcomplex_leq), with boundary signs taken from X.
ChainComplex chain_complex(const ComplexYdn& X, const std::vector<int>& ids,
                           const PrimeField& f);

// Smallest set of monomials containing the input and closed under pairwise
// lcm, sorted.
std::vector<Monomial> lcm_closure(const std::vector<Monomial>& start);

struct SupportReport {
  bool ok = false;
  long long alphas_checked = 0;
  std::vector<Monomial> failures;
};

// For every alpha in the lcm-closure of the vertex labels of X, checks that
// the subcomplex of cells with label dividing alpha has vanishing reduced
// homology over f.
SupportReport verify_supports_resolution(const ComplexYdn& X,
                                         const PrimeField& f);

// Multigraded Betti numbers beta_{i,alpha}(S/I) computed from the Taylor
// complex of the generating set, minimized degree by degree over f.
// Guard: at most 22 generators.
using MultigradedBetti = std::map<std::pair<int, std::vector<int>>, long long>;
MultigradedBetti taylor_betti(const GeneratorSet& gs, const PrimeField& f);

// Aggregation of a multigraded table to (homological degree, total degree).
std::map<std::pair<int, int>, long long> betti_by_degree(
    const MultigradedBetti& mb);

}  // namespace pathres
