#include "pathres/ideals.hpp"

#include <algorithm>
#include <set>

#include "pathres/errors.hpp"

namespace pathres {

GeneratorSet make_generator_set(int vars, std::vector<Monomial> gens) {
  if (vars < 0) throw InputError("variable count must be nonnegative");
  for (const auto& m : gens)
    if (m.vars() != vars) throw InputError("dimension mismatch");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = 0; b < gens.size(); ++b)
      if (a != b && gens[a].divides(gens[b]))
        throw InputError("generating set is not minimal: " + gens[a].str() +
                         " divides " + gens[b].str());
  return GeneratorSet{vars, std::move(gens)};
}

GeneratorSet edge_ideal_gens(const Graph& g) {
  validate(g);
  if (g.edges.empty()) throw InputError("empty ideal");
  std::vector<Monomial> gens;
  gens.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    std::vector<int> e(static_cast<size_t>(g.vertex_count), 0);
    e[static_cast<size_t>(u) - 1] += 1;
    e[static_cast<size_t>(v) - 1] += 1;
    gens.emplace_back(std::move(e));
  }
  return make_generator_set(g.vertex_count, std::move(gens));
}

namespace {

// binom(m+d-1, d) saturated at cap, for the power_gens guard.
long long multiset_count(long long m, long long d, long long cap) {
  long long r = 1;
  for (long long k = 1; k <= d; ++k) {
    r = r * (m - 1 + k);
    if (r > cap * k) return cap + 1;
    r /= k;
  }
  return r;
}

void expand_products(const std::vector<Monomial>& gens, size_t from, int left,
                     const Monomial& acc, std::set<std::vector<int>>& out) {
  if (left == 0) {
    out.insert(acc.exps());
    return;
  }
  for (size_t k = from; k < gens.size(); ++k)
    expand_products(gens, k, left - 1, acc * gens[k], out);
}

}  // namespace

GeneratorSet power_gens(const GeneratorSet& gs, int d) {
  if (d < 1) throw InputError("power must be at least 1");
  if (gs.gens.empty()) throw InputError("empty ideal");
  long long m = static_cast<long long>(gs.gens.size());
  if (multiset_count(m, d, 1000000) > 1000000)
    throw GuardError("instance too large: power expansion exceeds 10^6 products");
  std::set<std::vector<int>> exps;
  expand_products(gs.gens, 0, d, Monomial::one(gs.vars), exps);
  std::vector<Monomial> gens;
  gens.reserve(exps.size());
  for (const auto& e : exps) gens.emplace_back(e);
  return make_generator_set(gs.vars, std::move(gens));
}

LatticeReport verify_lattice_generators(const Graph& g, int d) {
  validate(g);
  if (!g.bipartition) throw InputError("graph has no declared bipartition");
  if (d < 1) throw InputError("power must be at least 1");
  if (g.vertex_count > 8 || d > 3)
    throw GuardError("instance too large: lattice check is limited to n <= 8, d <= 3");

  GeneratorSet gens = power_gens(edge_ideal_gens(g), d);
  std::vector<std::vector<int>> verts;
  verts.reserve(gens.gens.size());
  for (const auto& m : gens.gens) verts.push_back(m.exps());

  // Every generator exponent is <= d and lies on the hyperplane of total
  // degree 2d, so candidates with entries in [0, d] summing to 2d cover
  // every lattice point of the hull.
  std::vector<std::vector<int>> hits;
  std::vector<int> cand(static_cast<size_t>(g.vertex_count), 0);
  auto scan = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == g.vertex_count) {
      if (remaining == 0 && hull_membership(cand, verts))
        hits.push_back(cand);
      return;
    }
    for (int e = 0; e <= std::min(d, remaining); ++e) {
      cand[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    cand[static_cast<size_t>(pos)] = 0;
  };
  scan(scan, 0, 2 * d);

  LatticeReport rep;
  rep.lattice_points = static_cast<long long>(hits.size());
  rep.generators = static_cast<long long>(verts.size());
  std::set<std::vector<int>> hit_set(hits.begin(), hits.end());
  std::set<std::vector<int>> gen_set(verts.begin(), verts.end());
  rep.ok = hit_set == gen_set;
  return rep;
}

}  // namespace pathres
