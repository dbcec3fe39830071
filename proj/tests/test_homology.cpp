#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "pathres/errors.hpp"
#include "pathres/field.hpp"
#include "pathres/graph.hpp"
#include "pathres/homology.hpp"
#include "pathres/ideals.hpp"
#include "pathres/linalg.hpp"
#include "pathres/staircase.hpp"

using namespace pathres;

TEST_CASE("prime field arithmetic") {
  PrimeField f(32003);
  for (uint32_t a : {1u, 2u, 17u, 32002u}) {
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK(f.add(32002, 5) == 4);
  CHECK(f.sub(3, 5) == 32001);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.from_int(32003 * 7 + 2) == 2);

  PrimeField f2(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.inv(1) == 1);

  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(32003).inv(0), InputError);
}

TEST_CASE("dense and sparse rank agree on random matrices") {
  std::mt19937 rng(20240817);
  for (uint32_t p : {2u, 32003u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      int r = 1 + (int)(rng() % 12), c = 1 + (int)(rng() % 12);
      SparseMatrix m(r, c);
      for (int k = 0; k < r * c / 2; ++k)
        m.add_entry((int)(rng() % r), (int)(rng() % c), rng() % p);
      CHECK(rank_dense(m, f) == rank_sparse(m, f));
    }
  }
}

TEST_CASE("rank handles duplicate accumulating entries") {
  PrimeField f(5);
  SparseMatrix m(2, 2);
  m.add_entry(0, 0, 2);
  m.add_entry(0, 0, 3);  // accumulates to 0 mod 5
  m.add_entry(1, 1, 4);
  CHECK(rank(m, f) == 1);
  CHECK_THROWS_AS(([&] {
                    SparseMatrix bad(1, 1);
                    bad.add_entry(0, 0, 7);  // not reduced mod 5
                    rank(bad, f);
                  }()),
                  InputError);
}

TEST_CASE("homology of a hollow triangle and of a full simplex") {
  PrimeField f(32003);

  // hollow triangle: three vertices, three edges
  ChainComplex tri{f, {3, 3}, {SparseMatrix(), SparseMatrix(3, 3)}};
  // edges 01, 02, 12
  tri.d[1].add_entry(1, 0, 1);
  tri.d[1].add_entry(0, 0, f.neg(1));
  tri.d[1].add_entry(2, 1, 1);
  tri.d[1].add_entry(0, 1, f.neg(1));
  tri.d[1].add_entry(2, 2, 1);
  tri.d[1].add_entry(1, 2, f.neg(1));
  CHECK(homology_ranks(tri, false) == std::vector<long long>{1, 1});
  CHECK(homology_ranks(tri, true) == std::vector<long long>{0, 1});

  // filling the triangle kills H_1
  ChainComplex full = tri;
  full.ranks.push_back(1);
  SparseMatrix d2(3, 1);
  d2.add_entry(2, 0, 1);  // face 01 appears with sign +1 at position t=2
  d2.add_entry(1, 0, f.neg(1));
  d2.add_entry(0, 0, 1);
  full.d.push_back(d2);
  CHECK(homology_ranks(full, true) == std::vector<long long>{0, 0, 0});
}

TEST_CASE("non-complexes are rejected") {
  PrimeField f(32003);
  ChainComplex c{f, {1, 1, 1}, {SparseMatrix(), SparseMatrix(1, 1), SparseMatrix(1, 1)}};
  c.d[1].add_entry(0, 0, 1);
  c.d[2].add_entry(0, 0, 1);
  CHECK_THROWS_AS(homology_ranks(c, false), InputError);
}

TEST_CASE("the full staircase complex is contractible") {
  for (auto [n, d] : {std::pair{3, 2}, {4, 2}, {4, 1}, {5, 2}}) {
    ComplexYdn X = ComplexYdn::enumerate(n, d);
    std::vector<int> all(X.size());
    for (int i = 0; i < X.size(); ++i) all[i] = i;
    ChainComplex c = chain_complex(X, all, PrimeField(32003));
    for (long long h : homology_ranks(c, true)) CHECK(h == 0);
  }
}

TEST_CASE("chain_complex requires a downward closed cell set") {
  ComplexYdn X = ComplexYdn::enumerate(3, 1);
  int top = X.cell_id(Cell{{{1, 2}}});
  REQUIRE(top >= 0);
  CHECK_THROWS_WITH_AS(chain_complex(X, {top}, PrimeField(2)),
                       "cell set is not downward closed", InputError);
}

TEST_CASE("lcm closure of the vertex labels") {
  std::vector<Monomial> gens = {Monomial({2, 2, 0}), Monomial({1, 2, 1}),
                                Monomial({0, 2, 2})};
  std::vector<Monomial> closure = lcm_closure(gens);
  CHECK(closure.size() == 6);
  for (const Monomial& a : closure)
    for (const Monomial& b : closure) {
      bool found = false;
      for (const Monomial& c : closure)
        if (c == lcm(a, b)) found = true;
      CHECK(found);
    }
}

TEST_CASE("every label subcomplex of Y^d_n is acyclic") {
  SupportReport r32 =
      verify_supports_resolution(ComplexYdn::enumerate(3, 2), PrimeField(32003));
  CHECK(r32.ok);
  CHECK(r32.alphas_checked == 6);
  CHECK(r32.failures.empty());

  SupportReport r42 =
      verify_supports_resolution(ComplexYdn::enumerate(4, 2), PrimeField(32003));
  CHECK(r42.ok);
  CHECK(r42.alphas_checked == 20);

  SupportReport r42p2 =
      verify_supports_resolution(ComplexYdn::enumerate(4, 2), PrimeField(2));
  CHECK(r42p2.ok);
}

TEST_CASE("taylor strand homology gives the multigraded betti numbers") {
  PrimeField f(32003);

  MultigradedBetti mb31 =
      taylor_betti(edge_ideal_gens(Graph::path(3)), f);
  MultigradedBetti exp31 = {{{0, {0, 0, 0}}, 1},
                            {{1, {0, 1, 1}}, 1},
                            {{1, {1, 1, 0}}, 1},
                            {{2, {1, 1, 1}}, 1}};
  CHECK(mb31 == exp31);

  MultigradedBetti mb41 =
      taylor_betti(edge_ideal_gens(Graph::path(4)), f);
  MultigradedBetti exp41 = {{{0, {0, 0, 0, 0}}, 1},
                            {{1, {0, 0, 1, 1}}, 1},
                            {{1, {0, 1, 1, 0}}, 1},
                            {{1, {1, 1, 0, 0}}, 1},
                            {{2, {0, 1, 1, 1}}, 1},
                            {{2, {1, 1, 1, 0}}, 1}};
  CHECK(mb41 == exp41);

  MultigradedBetti mb32 =
      taylor_betti(power_gens(edge_ideal_gens(Graph::path(3)), 2), f);
  MultigradedBetti exp32 = {{{0, {0, 0, 0}}, 1},
                            {{1, {0, 2, 2}}, 1},
                            {{1, {1, 2, 1}}, 1},
                            {{1, {2, 2, 0}}, 1},
                            {{2, {1, 2, 2}}, 1},
                            {{2, {2, 2, 1}}, 1}};
  CHECK(mb32 == exp32);
}

TEST_CASE("taylor betti numbers do not depend on the characteristic") {
  GeneratorSet gs = power_gens(edge_ideal_gens(Graph::path(4)), 2);
  CHECK(taylor_betti(gs, PrimeField(32003)) == taylor_betti(gs, PrimeField(2)));
}

TEST_CASE("aggregation to the graded table") {
  MultigradedBetti mb =
      taylor_betti(edge_ideal_gens(Graph::path(4)), PrimeField(32003));
  std::map<std::pair<int, int>, long long> expected = {
      {{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}};
  CHECK(betti_by_degree(mb) == expected);
}

TEST_CASE("taylor guard limits the generator count") {
  GeneratorSet big = power_gens(edge_ideal_gens(Graph::path(9)), 2);  // 36 gens
  CHECK_THROWS_AS(taylor_betti(big, PrimeField(2)), GuardError);
}
