#pragma once

#include <utility>
#include <vector>

namespace pathres {

// A finite family of faces (sorted subsets of a ground set of positive
// integer labels), closed under taking subsets and including the empty
// face.  Faces are listed in canonical order: by size, then
// lexicographically.
struct FaceFamily {
  std::vector<int> ground;
  std::vector<std::vector<int>> faces;

  // -1 if absent.
  int face_index(const std::vector<int>& face) const;
};

// An acyclic matching on a face family.  Pairs are (face, coface) index
// pairs differing by one element; critical faces are the unmatched ones.
struct FamilyMatching {
  FaceFamily family;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> critical;
};

// Independence complex of the path on m vertices (labels 1..m), matched by
// the pivot scan p = 1, 4, 7, ...: among the faces still in play, sigma is
// matched with sigma u {p} whenever p+1 is absent, and faces containing
// p+1 are deferred to the next pivot.  Critical faces contain every pivot
// successor {2, 5, ...} they can.
FamilyMatching ind_path_matching(int m);

// Covering complex of the path on v vertices: faces are the edge sets F
// with E(P_v) - F still covering every vertex.  Edges are labeled by their
// left endpoint.  Isomorphic to Ind(P_{v-3}) via t -> edge t+1 for v >= 4;
// for v <= 3 the only face is the empty one.
FaceFamily cov_path_faces(int v);

// The matching transported from ind_path_matching(v-3).
FamilyMatching cov_path_matching(int v);

// Validates pair shape (codimension 1, containment), disjointness,
// coverage, and acyclicity; throws CheckError with a witness otherwise.
void audit_family_matching(const FamilyMatching& fm);

}  // namespace pathres
