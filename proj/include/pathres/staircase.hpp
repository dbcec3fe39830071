#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathres/monomial.hpp"

namespace pathres {

// One cell of the staircase complex Y^d_n: a tuple of d nonempty sorted
// "box" sets, where row i (1-based) lies in the window [i, i+n-2] and
// max(rows[i]) < min(rows[i+1]).  A cell is a product of simplices; its
// dimension is sum(|rows[i]| - 1).
struct Cell {
  std::vector<std::vector<int>> rows;

  int dim() const;
  bool operator==(const Cell& o) const { return rows == o.rows; }
  // Row-wise lexicographic; fixes the canonical cell order of a complex.
  bool operator<(const Cell& o) const { return rows < o.rows; }
};

// Throws InputError unless c is a valid cell of Y^d_n with d = c.rows.size().
void validate_cell(const Cell& c, int n);

// Vertices of P_n covered by a box set placed in row i: box j covers
// {j-i+1, j-i+2}.
std::vector<int> covered_vertices(const std::vector<int>& row, int i);

// Coordinate label: exponent of x_k counts the rows whose covered set
// contains k.
Monomial cell_label(const Cell& c, int n);

// Exponent vector sum_i (e_{a_i-i+1} + e_{a_i-i+2}) of a 0-cell
// ({a_1}, ..., {a_d}).  Agrees with cell_label on 0-cells.
std::vector<int> vertex_realization(const Cell& c, int n);

// Codimension-1 faces with incidence signs: removing the element at
// ascending position t of row i contributes sign
// (-1)^t * (-1)^(sum_{k<i} (|rows[k]|-1)).  Rows of size 1 are skipped;
// every face is again a valid cell.
std::vector<std::pair<Cell, int>> boundary_faces(const Cell& c);

// Number of cells of Y^d_n, computed by dynamic programming without
// materializing them.  Saturates at 2 * 10^6.
long long count_cells(int n, int d);

class ComplexYdn {
 public:
  // Enumerates all cells of Y^d_n in canonical order.  Guard: cell count
  // must not exceed 10^6 (checked via count_cells before materializing).
  static ComplexYdn enumerate(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int size() const { return static_cast<int>(cells_.size()); }
  int top_dim() const { return top_dim_; }

  const Cell& cell(int id) const { return cells_[static_cast<size_t>(id)]; }
  // -1 if absent.
  int cell_id(const Cell& c) const;
  const Monomial& label(int id) const { return labels_[static_cast<size_t>(id)]; }
  int dim_of(int id) const { return dims_[static_cast<size_t>(id)]; }
  const std::vector<std::pair<int, int>>& boundary(int id) const {
    return boundary_[static_cast<size_t>(id)];
  }

  std::vector<long long> f_vector() const;

  // Ids of cells whose label divides alpha; downward closed.
  std::vector<int> subcomplex_leq(const Monomial& alpha) const;

  // Serialized "ydn-v1" document.
  std::string to_json() const;

 private:
  int n_ = 0, d_ = 0, top_dim_ = 0;
  std::vector<Cell> cells_;
  std::vector<Monomial> labels_;
  std::vector<int> dims_;
  std::vector<std::vector<std::pair<int, int>>> boundary_;
  std::unordered_map<std::string, int> index_;

  static std::string cell_key(const Cell& c);
};

}  // namespace pathres
