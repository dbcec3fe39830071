#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pathres/counting.hpp"
#include "pathres/errors.hpp"
#include "pathres/graph.hpp"
#include "pathres/ideals.hpp"
#include "pathres/monomial.hpp"

using namespace pathres;

TEST_CASE("monomial basics") {
  Monomial m({1, 2, 0});
  CHECK(m.degree() == 3);
  CHECK(m.vars() == 3);
  CHECK(m.exp(1) == 1);
  CHECK(m.exp(2) == 2);
  CHECK(m.str() == "x1*x2^2");
  CHECK(Monomial::one(3).str() == "1");
  CHECK(Monomial::one(3).is_one());
  CHECK_FALSE(m.is_one());

  Monomial a({1, 0, 1}), b({0, 1, 1});
  CHECK((a * b) == Monomial({1, 1, 2}));
  CHECK(lcm(a, b) == Monomial({1, 1, 1}));
  CHECK(a.divides(a * b));
  CHECK_FALSE((a * b).divides(a));
  CHECK(lcm_of({a, b, Monomial({2, 0, 0})}) == Monomial({2, 1, 1}));

  CHECK_THROWS_AS(Monomial({1, -1}), InputError);
  CHECK_THROWS_AS(lcm(a, Monomial({1, 0})), InputError);
  CHECK_THROWS_AS(lcm_of({}), InputError);
}

TEST_CASE("path and cycle graphs") {
  Graph p4 = Graph::path(4);
  CHECK(p4.vertex_count == 4);
  CHECK(p4.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  REQUIRE(p4.bipartition.has_value());
  CHECK(p4.bipartition->first == std::vector<int>{1, 3});
  CHECK(p4.bipartition->second == std::vector<int>{2, 4});
  CHECK_NOTHROW(validate(p4));

  Graph c4 = Graph::cycle(4);
  CHECK(c4.edges.size() == 4);
  CHECK(c4.bipartition.has_value());
  CHECK_NOTHROW(validate(c4));

  Graph c5 = Graph::cycle(5);
  CHECK_FALSE(c5.bipartition.has_value());
  CHECK_NOTHROW(validate(c5));

  Graph bad = p4;
  bad.edges.push_back({1, 3});
  CHECK_THROWS_AS(validate(bad), InputError);  // unsorted
  bad = p4;
  bad.edges.push_back({3, 4});
  CHECK_THROWS_AS(validate(bad), InputError);  // duplicate
  bad = p4;
  bad.bipartition = {{1, 2}, {3, 4}};
  CHECK_THROWS_WITH_AS(validate(bad), "declared bipartition has an internal edge",
                       InputError);
}

TEST_CASE("edge ideal generators") {
  GeneratorSet gs = edge_ideal_gens(Graph::path(4));
  CHECK(gs.vars == 4);
  REQUIRE(gs.gens.size() == 3);
  // ascending lexicographic order on exponent vectors
  CHECK(gs.gens[0] == Monomial({0, 0, 1, 1}));
  CHECK(gs.gens[1] == Monomial({0, 1, 1, 0}));
  CHECK(gs.gens[2] == Monomial({1, 1, 0, 0}));

  Graph empty;
  empty.vertex_count = 3;
  CHECK_THROWS_WITH_AS(edge_ideal_gens(empty), "empty ideal", InputError);
}

TEST_CASE("generator set minimality is enforced") {
  CHECK_THROWS_AS(
      make_generator_set(2, {Monomial({1, 0}), Monomial({1, 1})}),
      InputError);
  GeneratorSet ok = make_generator_set(
      2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({1, 1})});
  CHECK(ok.gens.size() == 2);  // duplicates collapse
}

TEST_CASE("powers of an edge ideal") {
  GeneratorSet p3 = edge_ideal_gens(Graph::path(3));
  GeneratorSet sq = power_gens(p3, 2);
  REQUIRE(sq.gens.size() == 3);
  CHECK(sq.gens[0] == Monomial({0, 2, 2}));
  CHECK(sq.gens[1] == Monomial({1, 2, 1}));
  CHECK(sq.gens[2] == Monomial({2, 2, 0}));

  GeneratorSet p4sq = power_gens(edge_ideal_gens(Graph::path(4)), 2);
  CHECK(p4sq.gens.size() == 6);
  CHECK(std::count(p4sq.gens.begin(), p4sq.gens.end(),
                   Monomial({1, 1, 1, 1})) == 1);

  CHECK_THROWS_AS(power_gens(p3, 0), InputError);
}

TEST_CASE("generator count follows the binomial law") {
  for (int n = 2; n <= 10; ++n) {
    GeneratorSet base = edge_ideal_gens(Graph::path(n));
    for (int d = 1; d <= 5; ++d) {
      GeneratorSet g = power_gens(base, d);
      CHECK(boost::multiprecision::cpp_int(g.gens.size()) ==
            binomial(n + d - 2, d));
    }
  }
}

TEST_CASE("hull membership by exact simplex") {
  std::vector<std::vector<int>> verts;
  for (const Monomial& g : power_gens(edge_ideal_gens(Graph::path(4)), 2).gens)
    verts.push_back(g.exps());

  CHECK(hull_membership({1, 1, 1, 1}, verts));
  CHECK(hull_membership({2, 2, 0, 0}, verts));
  CHECK_FALSE(hull_membership({2, 0, 0, 2}, verts));
  CHECK_FALSE(hull_membership({4, 0, 0, 0}, verts));

  // strictly interior point of a segment
  CHECK(hull_membership({1, 1, 1, 1}, {{2, 2, 0, 0}, {0, 0, 2, 2}}));
  CHECK_FALSE(hull_membership({1, 1, 1, 0}, {{2, 2, 0, 0}, {0, 0, 2, 2}}));
}

TEST_CASE("lattice points of the Newton polytope match the generators") {
  LatticeReport r = verify_lattice_generators(Graph::path(4), 2);
  CHECK(r.ok);
  CHECK(r.lattice_points == 6);
  CHECK(r.generators == 6);

  LatticeReport c = verify_lattice_generators(Graph::cycle(4), 2);
  CHECK(c.ok);
  CHECK(c.lattice_points == 9);
  CHECK(c.generators == 9);

  CHECK_THROWS_WITH_AS(verify_lattice_generators(Graph::cycle(5), 1),
                       "graph has no declared bipartition", InputError);
  CHECK_THROWS_AS(verify_lattice_generators(Graph::path(9), 1), GuardError);
  CHECK_THROWS_AS(verify_lattice_generators(Graph::path(4), 4), GuardError);
}
