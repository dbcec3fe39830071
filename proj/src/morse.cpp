#include "pathres/morse.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <unordered_map>

#include "pathres/errors.hpp"

namespace pathres {

std::vector<FiberGroup> fiber_decompose(const ComplexYdn& X) {
  std::map<std::vector<std::vector<int>>, std::vector<int>> groups;
  for (int id = 0; id < X.size(); ++id) {
    const Cell& c = X.cell(id);
    std::vector<std::vector<int>> key;
    key.reserve(c.rows.size());
    for (int i = 1; i <= (int)c.rows.size(); ++i)
      key.push_back(covered_vertices(c.rows[i - 1], i));
    groups[std::move(key)].push_back(id);
  }

  std::vector<FiberGroup> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    FiberGroup g;
    g.key = key;
    g.members = members;

    // The unique maximal member consists of every box whose two covered
    // vertices both lie in V_i.
    Cell maxc;
    for (int i = 1; i <= X.d(); ++i) {
      const auto& V = key[i - 1];
      std::vector<int> row;
      for (int j = i; j <= i + X.n() - 2; ++j)
        if (std::binary_search(V.begin(), V.end(), j - i + 1) &&
            std::binary_search(V.begin(), V.end(), j - i + 2))
          row.push_back(j);
      maxc.rows.push_back(std::move(row));
    }
    g.max_cell = X.cell_id(maxc);
    if (g.max_cell < 0 ||
        !std::binary_search(members.begin(), members.end(), g.max_cell))
      throw CheckError("fiber group lacks its label-maximal member");
    for (int id : members) {
      const Cell& c = X.cell(id);
      for (int i = 0; i < X.d(); ++i)
        if (!std::includes(maxc.rows[i].begin(), maxc.rows[i].end(),
                           c.rows[i].begin(), c.rows[i].end()))
          throw CheckError("fiber group member is not a face of the maximal member");
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// One covering-complex factor of a fiber group: the component [start, end]
// of the covered set V_row, carrying the matching of Cov(P_{end-start+1}).
// Standard edge t of the component occupies box start+t+row-2.
struct Factor {
  int row = 0;
  int start = 0;
  int end = 0;
  const FamilyMatching* fm = nullptr;
  std::vector<int> partner;     // face index -> partner index, -1 if critical
  std::vector<char> is_upper;   // face is the coface of its pair
};

using CovCache = std::map<int, FamilyMatching>;

const FamilyMatching& cov_matching_cached(int v, CovCache& cache) {
  auto it = cache.find(v);
  if (it == cache.end()) it = cache.emplace(v, cov_path_matching(v)).first;
  return it->second;
}

std::vector<Factor> group_factors(const ComplexYdn& X, const FiberGroup& g,
                                  CovCache& cache) {
  std::vector<Factor> factors;
  for (int i = 1; i <= X.d(); ++i) {
    const auto& V = g.key[i - 1];
    size_t k = 0;
    while (k < V.size()) {
      size_t e = k;
      while (e + 1 < V.size() && V[e + 1] == V[e] + 1) ++e;
      Factor f;
      f.row = i;
      f.start = V[k];
      f.end = V[e];
      if (f.end == f.start)
        throw CheckError("covered set has an isolated vertex");
      f.fm = &cov_matching_cached(f.end - f.start + 1, cache);
      f.partner.assign(f.fm->family.faces.size(), -1);
      f.is_upper.assign(f.fm->family.faces.size(), 0);
      for (auto [lo, hi] : f.fm->pairs) {
        f.partner[lo] = hi;
        f.partner[hi] = lo;
        f.is_upper[hi] = 1;
      }
      factors.push_back(std::move(f));
      k = e + 1;
    }
  }
  return factors;
}

// Removed standard edges of the factor's component, read off the cell.
std::vector<int> factor_face(const Cell& c, const Factor& f) {
  const auto& row = c.rows[f.row - 1];
  std::vector<int> face;
  for (int t = 1; t <= f.end - f.start; ++t) {
    const int box = f.start + t + f.row - 2;
    if (!std::binary_search(row.begin(), row.end(), box)) face.push_back(t);
  }
  return face;
}

Cell apply_factor_face(const Cell& c, const Factor& f,
                       const std::vector<int>& face) {
  const int lo_box = f.start + f.row - 1;
  const int hi_box = f.end + f.row - 2;
  Cell out = c;
  auto& row = out.rows[f.row - 1];
  std::vector<int> kept;
  for (int b : row)
    if (b < lo_box || b > hi_box) kept.push_back(b);
  for (int t = 1; t <= f.end - f.start; ++t) {
    const int box = f.start + t + f.row - 2;
    if (!std::binary_search(face.begin(), face.end(), t)) kept.push_back(box);
  }
  std::sort(kept.begin(), kept.end());
  row = std::move(kept);
  return out;
}

Matching fiber_matching_impl(const ComplexYdn& X, const FiberGroup& g,
                             CovCache& cache) {
  std::vector<Factor> factors = group_factors(X, g, cache);
  Matching m;
  for (int id : g.members) {
    const Cell& c = X.cell(id);
    bool matched = false;
    for (const Factor& f : factors) {
      const std::vector<int> face = factor_face(c, f);
      const int fidx = f.fm->family.face_index(face);
      if (fidx < 0)
        throw CheckError("removed boxes do not form a covering-complex face");
      const int pidx = f.partner[fidx];
      if (pidx < 0) continue;  // critical in this factor, look further
      matched = true;
      // The larger face removes more boxes, so the member whose face is the
      // coface is the lower-dimensional cell of the pair; emit from there.
      if (f.is_upper[fidx]) {
        const Cell up = apply_factor_face(c, f, f.fm->family.faces[pidx]);
        const int up_id = X.cell_id(up);
        if (up_id < 0) throw CheckError("matched partner is not a cell");
        m.pairs.emplace_back(id, up_id);
      }
      break;
    }
    if (!matched) m.critical.push_back(id);
  }
  return m;
}

}  // namespace

Matching fiber_matching(const ComplexYdn& X, const FiberGroup& g) {
  CovCache cache;
  Matching m = fiber_matching_impl(X, g, cache);
  std::sort(m.pairs.begin(), m.pairs.end());
  std::sort(m.critical.begin(), m.critical.end());
  return m;
}

Matching assemble_matching(const ComplexYdn& X) {
  CovCache cache;
  Matching all;
  for (const FiberGroup& g : fiber_decompose(X)) {
    Matching m = fiber_matching_impl(X, g, cache);
    all.pairs.insert(all.pairs.end(), m.pairs.begin(), m.pairs.end());
    all.critical.insert(all.critical.end(), m.critical.begin(), m.critical.end());
  }
  std::sort(all.pairs.begin(), all.pairs.end());
  std::sort(all.critical.begin(), all.critical.end());
  audit_matching(X, all);
  return all;
}

void audit_matching(const ComplexYdn& X, const Matching& m) {
  std::vector<int> role(X.size(), 0);  // 1 lower, 2 upper, 3 critical
  std::vector<int> partner(X.size(), -1);
  for (auto [lo, hi] : m.pairs) {
    if (lo < 0 || hi < 0 || lo >= X.size() || hi >= X.size())
      throw CheckError("matching references an unknown cell");
    if (X.dim_of(lo) + 1 != X.dim_of(hi))
      throw CheckError("matched pair is not a codimension-1 incidence");
    bool incident = false;
    for (auto [fid, sign] : X.boundary(hi))
      if (fid == lo) incident = true;
    if (!incident)
      throw CheckError("matched pair is not a boundary incidence");
    if (!(X.label(lo) == X.label(hi)))
      throw CheckError("matched pair changes the coordinate label");
    if (role[lo] || role[hi]) throw CheckError("cell matched twice");
    role[lo] = 1;
    role[hi] = 2;
    partner[lo] = hi;
    partner[hi] = lo;
  }
  for (int c : m.critical) {
    if (c < 0 || c >= X.size())
      throw CheckError("matching references an unknown cell");
    if (role[c]) throw CheckError("critical cell is also matched");
    role[c] = 3;
  }
  for (int id = 0; id < X.size(); ++id)
    if (!role[id])
      throw CheckError("cell " + std::to_string(id) +
                       " is neither matched nor critical");

  // V-path digraph on the lower halves; a directed cycle there is exactly a
  // closed gradient path.
  std::vector<std::vector<int>> next(X.size());
  for (auto [lo, hi] : m.pairs)
    for (auto [fid, sign] : X.boundary(hi))
      if (fid != lo && role[fid] == 1) next[lo].push_back(fid);

  std::vector<int> color(X.size(), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < X.size(); ++s) {
    if (role[s] != 1 || color[s] != 0) continue;
    stack.assign(1, {s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      if (pos == next[u].size()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const int w = next[u][pos++];
      if (color[w] == 1)
        throw CheckError("matching has a closed gradient path through cell " +
                         std::to_string(w));
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
}

std::map<int, std::vector<std::pair<int, long long>>> morse_boundary(
    const ComplexYdn& X, const Matching& m) {
  if (X.size() > 10000)
    throw GuardError("instance too large: morse_boundary is limited to 10^4 cells");

  std::vector<int> up(X.size(), -1), down(X.size(), -1);
  std::vector<char> critical(X.size(), 0);
  for (auto [lo, hi] : m.pairs) {
    up[lo] = hi;
    down[hi] = lo;
  }
  for (int c : m.critical) critical[c] = 1;

  auto incidence = [&](int hi, int lo) {
    for (auto [fid, sign] : X.boundary(hi))
      if (fid == lo) return sign;
    throw CheckError("matched pair is not a boundary incidence");
  };

  // flow(sigma) rewrites a cell as a combination of critical cells of the
  // same dimension by sliding along the gradient.
  std::vector<std::map<int, long long>> memo(X.size());
  std::vector<char> done(X.size(), 0);
  auto flow = [&](auto&& self, int sigma) -> const std::map<int, long long>& {
    if (done[sigma]) return memo[sigma];
    done[sigma] = 1;
    auto& out = memo[sigma];
    if (critical[sigma]) {
      out[sigma] = 1;
      return out;
    }
    if (down[sigma] >= 0) return out;  // upper half: flows to zero
    const int tau = up[sigma];
    const int base = incidence(tau, sigma);
    for (auto [other, sign] : X.boundary(tau)) {
      if (other == sigma) continue;
      const long long coeff = -(long long)base * sign;
      for (auto [crit, v] : self(self, other)) {
        out[crit] += coeff * v;
        if (out[crit] == 0) out.erase(crit);
      }
    }
    return out;
  };

  std::map<int, std::vector<std::pair<int, long long>>> result;
  for (int tau : m.critical) {
    std::map<int, long long> acc;
    for (auto [sigma, sign] : X.boundary(tau))
      for (auto [crit, v] : flow(flow, sigma)) {
        acc[crit] += (long long)sign * v;
        if (acc[crit] == 0) acc.erase(crit);
      }
    result[tau] = std::vector<std::pair<int, long long>>(acc.begin(), acc.end());
  }
  return result;
}

ChainComplex morse_chain_complex(const ComplexYdn& X, const Matching& m,
                                 const PrimeField& f) {
  auto diff = morse_boundary(X, m);
  int top = 0;
  std::vector<int> local(X.size(), -1);
  for (int c : m.critical) top = std::max(top, X.dim_of(c));
  std::vector<long long> ranks(top + 1, 0);
  for (int c : m.critical) {
    local[c] = (int)ranks[X.dim_of(c)];
    ranks[X.dim_of(c)] += 1;
  }
  ChainComplex cc{f, ranks, {}};
  cc.d.assign(top + 1, SparseMatrix());
  for (int k = 1; k <= top; ++k)
    cc.d[k] = SparseMatrix((int)ranks[k - 1], (int)ranks[k]);
  for (const auto& [tau, terms] : diff) {
    const int k = X.dim_of(tau);
    for (auto [sigma, coeff] : terms) {
      if (X.dim_of(sigma) != k - 1)
        throw CheckError("morse differential does not drop dimension by one");
      cc.d[k].add_entry(local[sigma], local[tau], f.from_int(coeff));
    }
  }
  return cc;
}

std::string matching_to_json(const Matching& m) {
  nlohmann::ordered_json doc;
  auto pairs = nlohmann::ordered_json::array();
  for (auto [lo, hi] : m.pairs)
    pairs.push_back(nlohmann::ordered_json::array({lo, hi}));
  doc["pairs"] = std::move(pairs);
  doc["critical"] = m.critical;
  doc["version"] = "morse-v1";
  return doc.dump(2) + "\n";
}

}  // namespace pathres
