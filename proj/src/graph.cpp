#include "pathres/graph.hpp"

#include <algorithm>
#include <set>

#include "pathres/errors.hpp"

namespace pathres {

Graph Graph::path(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  Graph g;
  g.vertex_count = n;
  for (int v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
  std::vector<int> odd, even;
  for (int v = 1; v <= n; ++v) (v % 2 ? odd : even).push_back(v);
  g.bipartition = {odd, even};
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  Graph g;
  g.vertex_count = n;
  for (int v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
  g.edges.emplace_back(1, n);
  std::sort(g.edges.begin(), g.edges.end());
  if (n % 2 == 0) {
    std::vector<int> odd, even;
    for (int v = 1; v <= n; ++v) (v % 2 ? odd : even).push_back(v);
    g.bipartition = {odd, even};
  }
  return g;
}

void validate(const Graph& g) {
  if (g.vertex_count < 0) throw InputError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count)
      throw InputError("edge endpoint out of range");
    if (u >= v) throw InputError("edges must be stored as (u, v) with u < v");
    if (!seen.insert({u, v}).second) throw InputError("duplicate edge");
  }
  if (!std::is_sorted(g.edges.begin(), g.edges.end()))
    throw InputError("edge list must be sorted");
  if (g.bipartition) {
    std::vector<int> side(static_cast<size_t>(g.vertex_count) + 1, 0);
    const auto& [left, right] = *g.bipartition;
    for (int v : left) {
      if (v < 1 || v > g.vertex_count || side[static_cast<size_t>(v)])
        throw InputError("invalid bipartition");
      side[static_cast<size_t>(v)] = 1;
    }
    for (int v : right) {
      if (v < 1 || v > g.vertex_count || side[static_cast<size_t>(v)])
        throw InputError("invalid bipartition");
      side[static_cast<size_t>(v)] = 2;
    }
    for (int v = 1; v <= g.vertex_count; ++v)
      if (!side[static_cast<size_t>(v)]) throw InputError("invalid bipartition");
    for (auto [u, v] : g.edges)
      if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
        throw InputError("declared bipartition has an internal edge");
  }
}

}  // namespace pathres
