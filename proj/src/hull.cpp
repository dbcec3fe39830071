#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "pathres/errors.hpp"
#include "pathres/ideals.hpp"

namespace pathres {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Row = std::vector<Rat>;

}  // namespace

// Feasibility of { lambda >= 0 : sum lambda_i v_i = p, sum lambda_i = 1 }
// by phase-1 simplex over the rationals.  Bland's rule (least eligible
// index enters, least basis index leaves on ties) guarantees termination.
bool hull_membership(const std::vector<int>& point,
                     const std::vector<std::vector<int>>& verts) {
  if (verts.size() > 200)
    throw GuardError("instance too large: hull check is limited to 200 vertices");
  const int n = (int)point.size();
  for (const auto& v : verts)
    if ((int)v.size() != n) throw InputError("dimension mismatch");
  if (verts.empty()) return false;

  const int m = (int)verts.size();
  const int rows = n + 1;
  const int cols = m + rows;  // original variables, then one artificial per row

  std::vector<Row> T(rows, Row(cols, 0));
  Row b(rows, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) T[i][j] = verts[j][i];
    b[i] = point[i];
  }
  for (int j = 0; j < m; ++j) T[n][j] = 1;
  b[n] = 1;

  for (int i = 0; i < rows; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (int j = 0; j < m; ++j) T[i][j] = -T[i][j];
    }
    T[i][m + i] = 1;
  }

  // Minimize the sum of artificials.  In canonical form the reduced cost of
  // an original column is minus its column sum, of an artificial 0; the
  // objective starts at sum(b) and the point is in the hull iff it can be
  // driven to zero.
  Row rc(cols, 0);
  Rat z = 0;
  for (int i = 0; i < rows; ++i) z += b[i];
  for (int j = 0; j < m; ++j) {
    Rat s = 0;
    for (int i = 0; i < rows; ++i) s += T[i][j];
    rc[j] = -s;
  }

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = m + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j)
      if (rc[j] < 0) enter = j;
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < rows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = b[i] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw CheckError("phase-1 simplex became unbounded");

    const Rat piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    b[leave] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rat f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
      b[i] -= f * b[leave];
    }
    const Rat f = rc[enter];
    for (int j = 0; j < cols; ++j) rc[j] -= f * T[leave][j];
    z += f * b[leave];
    basis[leave] = enter;
  }

  return z == 0;
}

}  // namespace pathres
