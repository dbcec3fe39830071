#include "pathres/homology.hpp"

#include <algorithm>
#include <set>

#include "pathres/errors.hpp"

namespace pathres {

std::vector<long long> homology_ranks(const ChainComplex& c, bool reduced) {
  const int top = (int)c.ranks.size() - 1;
  if (top < 0) return {};
  if (c.d.size() != c.ranks.size())
    throw InputError("boundary map count does not match rank count");
  for (int k = 1; k <= top; ++k) {
    if (c.d[k].cols != c.ranks[k] || c.d[k].rows != c.ranks[k - 1])
      throw InputError("boundary map shape mismatch in degree " +
                       std::to_string(k));
  }
  for (int k = 1; k < top; ++k)
    if (!product_is_zero(c.d[k], c.d[k + 1], c.field))
      throw InputError("not a complex: d_" + std::to_string(k) + " o d_" +
                       std::to_string(k + 1) + " != 0");

  // d_0 is the augmentation when reduced, zero otherwise.
  SparseMatrix aug(c.ranks.empty() ? 0 : 1, (int)c.ranks[0]);
  long long aug_rank = 0;
  if (reduced) {
    for (int j = 0; j < (int)c.ranks[0]; ++j) aug.add_entry(0, j, 1);
    aug_rank = c.ranks[0] > 0 ? 1 : 0;
    if (top >= 1 && !product_is_zero(aug, c.d[1], c.field))
      throw InputError("not a complex: augmentation o d_1 != 0");
  }

  std::vector<long long> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) boundary_rank[k] = rank(c.d[k], c.field);

  std::vector<long long> h(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const long long im_below = k == 0 ? aug_rank : boundary_rank[k];
    h[k] = c.ranks[k] - im_below - boundary_rank[k + 1];
    if (h[k] < 0)
      throw CheckError("negative homology rank in degree " + std::to_string(k));
  }
  return h;
}

ChainComplex chain_complex(const ComplexYdn& X, const std::vector<int>& ids,
                           const PrimeField& f) {
  std::vector<int> local(X.size(), -1);
  int top = 0;
  for (int id : ids) {
    if (id < 0 || id >= X.size()) throw InputError("cell id out of range");
    if (local[id] != -1) throw InputError("duplicate cell id");
    local[id] = 0;
    top = std::max(top, X.dim_of(id));
  }

  std::vector<long long> ranks(top + 1, 0);
  for (int id : ids) {
    local[id] = (int)ranks[X.dim_of(id)];
    ranks[X.dim_of(id)] += 1;
  }

  ChainComplex c{f, ranks, {}};
  c.d.assign(top + 1, SparseMatrix());
  for (int k = 1; k <= top; ++k)
    c.d[k] = SparseMatrix((int)ranks[k - 1], (int)ranks[k]);
  for (int id : ids) {
    const int k = X.dim_of(id);
    if (k == 0) continue;
    for (auto [fid, sign] : X.boundary(id)) {
      if (local[fid] < 0)
        throw InputError("cell set is not downward closed");
      c.d[k].add_entry(local[fid], local[id], f.from_int(sign));
    }
  }
  return c;
}

// Fixpoint of pairwise lcms, starting from the given monomials.
std::vector<Monomial> lcm_closure(const std::vector<Monomial>& start) {
  std::set<std::vector<int>> seen;
  std::vector<Monomial> work;
  for (const auto& m : start)
    if (seen.insert(m.exps()).second) work.push_back(m);
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Monomial l = lcm(work[i], work[j]);
      if (seen.insert(l.exps()).second) work.push_back(l);
    }
  std::sort(work.begin(), work.end());
  return work;
}

SupportReport verify_supports_resolution(const ComplexYdn& X,
                                         const PrimeField& f) {
  std::vector<Monomial> vertex_labels;
  for (int id = 0; id < X.size(); ++id)
    if (X.dim_of(id) == 0) vertex_labels.push_back(X.label(id));

  SupportReport rep;
  for (const Monomial& alpha : lcm_closure(vertex_labels)) {
    rep.alphas_checked += 1;
    std::vector<int> ids = X.subcomplex_leq(alpha);
    ChainComplex c = chain_complex(X, ids, f);
    std::vector<long long> h = homology_ranks(c, true);
    if (std::any_of(h.begin(), h.end(), [](long long v) { return v != 0; }))
      rep.failures.push_back(alpha);
  }
  rep.ok = rep.failures.empty();
  return rep;
}

std::map<std::pair<int, int>, long long> betti_by_degree(
    const MultigradedBetti& mb) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, v] : mb) {
    const auto& [i, alpha] = key;
    long long j = 0;
    for (int e : alpha) j += e;
    out[{i, (int)j}] += v;
  }
  return out;
}

}  // namespace pathres
