#include "pathres/covering.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pathres/errors.hpp"

namespace pathres {

namespace {

bool face_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string face_str(const std::vector<int>& face) {
  std::string s = "{";
  for (size_t k = 0; k < face.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(face[k]);
  }
  return s + "}";
}

}  // namespace

int FaceFamily::face_index(const std::vector<int>& face) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), face, face_order);
  if (it == faces.end() || *it != face) return -1;
  return (int)(it - faces.begin());
}

FamilyMatching ind_path_matching(int m) {
  if (m < 0) throw InputError("vertex count must be nonnegative");
  if (m > 40) throw GuardError("instance too large: independence complex of P_40");

  // All independent sets of the path 1-2-...-m, canonical order.
  std::vector<std::vector<int>> faces = {{}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > m) {
      if (!cur.empty()) faces.push_back(cur);
      return;
    }
    self(self, v + 1);
    if (cur.empty() || cur.back() < v - 1) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
    if (faces.size() > 2000000)
      throw GuardError("instance too large: too many independent sets");
  };
  rec(rec, 1);
  std::sort(faces.begin(), faces.end(), face_order);

  FamilyMatching fm;
  fm.family.faces = std::move(faces);
  for (int v = 1; v <= m; ++v) fm.family.ground.push_back(v);

  // Pivot scan.  At pivot p the faces still in play all contain
  // {2, 5, ..., p-2}; those avoiding p+1 are matched by toggling p, the
  // rest wait for the next pivot.
  std::vector<int> alive(fm.family.faces.size());
  for (size_t k = 0; k < alive.size(); ++k) alive[k] = (int)k;
  auto contains = [&](const std::vector<int>& face, int v) {
    return std::binary_search(face.begin(), face.end(), v);
  };
  for (int p = 1; p <= m; p += 3) {
    std::vector<int> deferred;
    for (int idx : alive) {
      const auto& face = fm.family.faces[idx];
      if (contains(face, p + 1)) {
        deferred.push_back(idx);
        continue;
      }
      if (contains(face, p)) continue;  // paired below from the lower half
      std::vector<int> upper = face;
      upper.insert(std::lower_bound(upper.begin(), upper.end(), p), p);
      const int uidx = fm.family.face_index(upper);
      if (uidx < 0)
        throw CheckError("pivot partner " + face_str(upper) +
                         " is not an independent set");
      fm.pairs.emplace_back(idx, uidx);
    }
    alive = std::move(deferred);
  }
  fm.critical = std::move(alive);
  std::sort(fm.critical.begin(), fm.critical.end());
  std::sort(fm.pairs.begin(), fm.pairs.end());
  return fm;
}

FaceFamily cov_path_faces(int v) {
  if (v < 2) throw InputError("covering complex needs at least one edge");
  FaceFamily fam;
  for (int a = 1; a < v; ++a) fam.ground.push_back(a);
  // F is a face iff the edges outside F still cover every vertex: for each
  // vertex u, some incident edge stays.
  std::vector<int> cur;
  auto covered = [&](const std::vector<int>& removed) {
    for (int u = 1; u <= v; ++u) {
      bool ok = false;
      if (u > 1 && !std::binary_search(removed.begin(), removed.end(), u - 1))
        ok = true;
      if (u < v && !std::binary_search(removed.begin(), removed.end(), u))
        ok = true;
      if (!ok) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int a) -> void {
    if (a == v) {
      if (covered(cur)) fam.faces.push_back(cur);
      return;
    }
    self(self, a + 1);
    cur.push_back(a);
    self(self, a + 1);
    cur.pop_back();
  };
  if (v > 24) throw GuardError("instance too large: covering complex of P_25");
  rec(rec, 1);
  std::sort(fam.faces.begin(), fam.faces.end(), face_order);
  return fam;
}

// Transport of ind_path_matching(v-3) along the isomorphism
// Ind(P_{v-3}) -> Cov(P_v), t -> edge t+1.
FamilyMatching cov_path_matching(int v) {
  FamilyMatching fm;
  fm.family = cov_path_faces(v);
  if (v <= 3) {
    fm.critical = {0};  // only the empty face
    return fm;
  }
  FamilyMatching ind = ind_path_matching(v - 3);
  if (ind.family.faces.size() != fm.family.faces.size())
    throw CheckError("covering complex is not isomorphic to Ind(P_" +
                     std::to_string(v - 3) + ")");
  auto transport = [&](int idx) {
    std::vector<int> face = ind.family.faces[idx];
    for (int& t : face) t += 1;
    const int out = fm.family.face_index(face);
    if (out < 0)
      throw CheckError("transported face " + face_str(face) +
                       " is not a covering face");
    return out;
  };
  for (auto [a, b] : ind.pairs) fm.pairs.emplace_back(transport(a), transport(b));
  for (int c : ind.critical) fm.critical.push_back(transport(c));
  std::sort(fm.pairs.begin(), fm.pairs.end());
  std::sort(fm.critical.begin(), fm.critical.end());
  return fm;
}

void audit_family_matching(const FamilyMatching& fm) {
  const auto& faces = fm.family.faces;
  std::vector<int> role(faces.size(), 0);  // 1 lower, 2 upper, 3 critical
  std::vector<int> partner(faces.size(), -1);
  for (auto [lo, hi] : fm.pairs) {
    if (lo < 0 || hi < 0 || lo >= (int)faces.size() || hi >= (int)faces.size())
      throw CheckError("matching references an unknown face");
    if (faces[lo].size() + 1 != faces[hi].size() ||
        !std::includes(faces[hi].begin(), faces[hi].end(), faces[lo].begin(),
                       faces[lo].end()))
      throw CheckError("matched pair " + face_str(faces[lo]) + " - " +
                       face_str(faces[hi]) + " is not a codimension-1 incidence");
    if (role[lo] || role[hi]) throw CheckError("face matched twice");
    role[lo] = 1;
    role[hi] = 2;
    partner[lo] = hi;
    partner[hi] = lo;
  }
  for (int c : fm.critical) {
    if (c < 0 || c >= (int)faces.size())
      throw CheckError("matching references an unknown face");
    if (role[c]) throw CheckError("critical face is also matched");
    role[c] = 3;
  }
  for (size_t k = 0; k < faces.size(); ++k)
    if (!role[k])
      throw CheckError("face " + face_str(faces[k]) +
                       " is neither matched nor critical");

  // V-path digraph on lower halves: lo -> lo' when lo' is a facet of
  // partner(lo) other than lo and is itself a lower half.
  std::vector<std::vector<int>> next(faces.size());
  for (auto [lo, hi] : fm.pairs) {
    const auto& upper = faces[hi];
    for (size_t t = 0; t < upper.size(); ++t) {
      std::vector<int> facet = upper;
      facet.erase(facet.begin() + (long)t);
      const int fidx = fm.family.face_index(facet);
      if (fidx < 0)
        throw CheckError("family is not closed under facets of " +
                         face_str(upper));
      if (fidx != lo && role[fidx] == 1) next[lo].push_back(fidx);
    }
  }
  std::vector<int> color(faces.size(), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (size_t k = 0; k < faces.size(); ++k) {
    if (role[k] != 1 || color[k] != 0) continue;
    stack.assign(1, {(int)k, 0});
    color[k] = 1;
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      if (pos == next[u].size()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const int w = next[u][pos++];
      if (color[w] == 1)
        throw CheckError("matching has a directed cycle through " +
                         face_str(faces[w]));
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
}

}  // namespace pathres
