#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

#include "pathres/errors.hpp"
#include "pathres/homology.hpp"

namespace pathres {

namespace {

int popcount(uint32_t x) { return __builtin_popcount(x); }

}  // namespace

// The Taylor complex of gens has basis {subsets F}, graded by |F| and by the
// multidegree lcm(F); tensoring down to the field keeps exactly the facets
// F - f with lcm(F - f) = lcm(F).  The complex therefore splits into one
// block per multidegree alpha, with beta_{i,alpha}(S/I) the homology of the
// block in degree i.
MultigradedBetti taylor_betti(const GeneratorSet& gs, const PrimeField& f) {
  const int m = (int)gs.gens.size();
  if (m > 22)
    throw GuardError("instance too large: taylor_betti is limited to 22 generators");

  // Depth-first over subsets, carrying the running lcm, so nothing of size
  // 2^m * vars is ever stored.
  std::map<std::vector<int>, std::vector<uint32_t>> buckets;
  std::vector<int> acc(gs.vars, 0);
  auto rec = [&](auto&& self, int next, uint32_t mask) -> void {
    if (next == m) {
      buckets[acc].push_back(mask);
      return;
    }
    self(self, next + 1, mask);
    std::vector<int> saved = acc;
    const auto& e = gs.gens[next].exps();
    for (int k = 0; k < gs.vars; ++k) acc[k] = std::max(acc[k], e[k]);
    self(self, next + 1, mask | (1u << next));
    acc = saved;
  };
  rec(rec, 0, 0);

  MultigradedBetti out;
  for (auto& [alpha, masks] : buckets) {
    std::sort(masks.begin(), masks.end());
    std::unordered_set<uint32_t> in_bucket(masks.begin(), masks.end());

    // Index the bucket members per homological degree.
    std::map<uint32_t, int> local;
    std::vector<long long> ranks(m + 2, 0);
    for (uint32_t mask : masks) {
      local[mask] = (int)ranks[popcount(mask)];
      ranks[popcount(mask)] += 1;
    }
    int top = 0;
    for (int k = 0; k <= m + 1; ++k)
      if (ranks[k] > 0) top = k;
    ranks.resize(top + 1);

    ChainComplex c{f, ranks, {}};
    c.d.assign(top + 1, SparseMatrix());
    for (int k = 1; k <= top; ++k)
      c.d[k] = SparseMatrix((int)ranks[k - 1], (int)ranks[k]);
    for (uint32_t mask : masks) {
      const int k = popcount(mask);
      if (k == 0) continue;
      int t = 0;  // ascending position of the removed generator
      for (int g = 0; g < m; ++g) {
        if (!(mask >> g & 1)) continue;
        const uint32_t face = mask & ~(1u << g);
        if (in_bucket.count(face))
          c.d[k].add_entry(local[face], local[mask],
                           f.from_int(t % 2 == 0 ? 1 : -1));
        ++t;
      }
    }

    std::vector<long long> h = homology_ranks(c, false);
    for (int k = 0; k <= top; ++k)
      if (h[k] != 0) out[{k, alpha}] = h[k];
  }
  return out;
}

}  // namespace pathres
