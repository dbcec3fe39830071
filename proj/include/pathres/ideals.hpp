#pragma once

#include <vector>

#include "pathres/graph.hpp"
#include "pathres/monomial.hpp"

namespace pathres {

// Minimal monomial generating set in a fixed polynomial ring.  The list is
// sorted, duplicate-free, and no generator divides another; the factory
// checks all three.
struct GeneratorSet {
  int vars = 0;
  std::vector<Monomial> gens;
};

GeneratorSet make_generator_set(int vars, std::vector<Monomial> gens);

// Generators x_u * x_v of the edge ideal I(g).
GeneratorSet edge_ideal_gens(const Graph& g);

// Minimal generators of the d-th power: all products of d generators,
// deduplicated.  Guard: the multiset count binom(m+d-1, d) must not
// exceed 10^6.
GeneratorSet power_gens(const GeneratorSet& gs, int d);

// Exact rational test for point in conv(verts), via phase-1 simplex with
// Bland's rule.  Guard: at most 200 vertices.
bool hull_membership(const std::vector<int>& point,
                     const std::vector<std::vector<int>>& verts);

struct LatticeReport {
  bool ok = false;
  long long lattice_points = 0;
  long long generators = 0;
};

// Checks that the lattice points of the Newton polytope of I(g)^d are
// exactly the exponent vectors of its minimal generators.  Requires a
// bipartition; guards n <= 8 and d <= 3.
LatticeReport verify_lattice_generators(const Graph& g, int d);

}  // namespace pathres
