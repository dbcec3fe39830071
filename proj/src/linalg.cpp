#include "pathres/linalg.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "pathres/errors.hpp"

namespace pathres {

namespace {

void check_entries(const SparseMatrix& m, const PrimeField& f) {
  for (auto [r, c, v] : m.entries) {
    if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
      throw InputError("matrix entry out of range");
    if (v >= f.p()) throw InputError("matrix entry not reduced mod p");
  }
}

// Columns as sorted (row, value) lists with duplicates accumulated.
std::vector<std::vector<std::pair<int, uint32_t>>> to_columns(
    const SparseMatrix& m, const PrimeField& f) {
  std::vector<std::map<int, uint32_t>> acc(m.cols);
  for (auto [r, c, v] : m.entries) {
    auto& cell = acc[c][r];
    cell = f.add(cell, v);
  }
  std::vector<std::vector<std::pair<int, uint32_t>>> cols(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (auto [r, v] : acc[c])
      if (v != 0) cols[c].emplace_back(r, v);
  }
  return cols;
}

}  // namespace

long long rank_dense(const SparseMatrix& m, const PrimeField& f) {
  check_entries(m, f);
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<uint32_t>> a(m.rows, std::vector<uint32_t>(m.cols, 0));
  for (auto [r, c, v] : m.entries) a[r][c] = f.add(a[r][c], v);

  long long rank = 0;
  int lead_row = 0;
  for (int col = 0; col < m.cols && lead_row < m.rows; ++col) {
    int piv = -1;
    for (int r = lead_row; r < m.rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[lead_row]);
    const uint32_t inv = f.inv(a[lead_row][col]);
    for (int c = col; c < m.cols; ++c) a[lead_row][c] = f.mul(a[lead_row][c], inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == lead_row || a[r][col] == 0) continue;
      const uint32_t factor = a[r][col];
      for (int c = col; c < m.cols; ++c)
        a[r][c] = f.sub(a[r][c], f.mul(factor, a[lead_row][c]));
    }
    ++lead_row;
    ++rank;
  }
  return rank;
}

// Persistence-style column reduction: each column is reduced against the
// columns already holding a pivot (their lowest nonzero row), and claims its
// own pivot row if anything is left.
long long rank_sparse(const SparseMatrix& m, const PrimeField& f) {
  check_entries(m, f);
  auto cols = to_columns(m, f);
  std::map<int, int> pivot_owner;  // lowest row -> column index
  long long rank = 0;
  std::vector<std::pair<int, uint32_t>> merged;
  for (int c = 0; c < m.cols; ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      const int low = col.back().first;
      auto it = pivot_owner.find(low);
      if (it == pivot_owner.end()) break;
      const auto& other = cols[it->second];
      // col -= (col_low / other_low) * other
      const uint32_t factor = f.mul(col.back().second, f.inv(other.back().second));
      merged.clear();
      merged.reserve(col.size() + other.size());
      size_t i = 0, j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
          const uint32_t v = f.neg(f.mul(factor, other[j].second));
          if (v != 0) merged.emplace_back(other[j].first, v);
          ++j;
        } else {
          const uint32_t v = f.sub(col[i].second, f.mul(factor, other[j].second));
          if (v != 0) merged.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col.swap(merged);
    }
    if (!col.empty()) {
      pivot_owner[col.back().first] = c;
      ++rank;
    }
  }
  return rank;
}

long long rank(const SparseMatrix& m, const PrimeField& f) {
  return m.cols < 2000 ? rank_dense(m, f) : rank_sparse(m, f);
}

bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b,
                     const PrimeField& f) {
  if (a.cols != b.rows) throw InputError("dimension mismatch");
  check_entries(a, f);
  check_entries(b, f);
  // a is indexed by column for the multiply.
  std::vector<std::vector<std::pair<int, uint32_t>>> a_cols = to_columns(a, f);
  auto b_cols = to_columns(b, f);
  std::map<int, uint32_t> out;
  for (int c = 0; c < b.cols; ++c) {
    out.clear();
    for (auto [k, bv] : b_cols[c])
      for (auto [r, av] : a_cols[k]) {
        auto& cell = out[r];
        cell = f.add(cell, f.mul(av, bv));
      }
    for (auto [r, v] : out)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace pathres
