#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace pathres {

// Finite simple graph on vertices 1..vertex_count.  Edges are stored as
// (u, v) with u < v, sorted and duplicate-free.  A bipartition is carried
// explicitly when known; operations that need one check for it.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;

  static Graph path(int n);
  static Graph cycle(int n);
};

// Throws InputError if the edge list or the declared bipartition is invalid.
void validate(const Graph& g);

}  // namespace pathres
