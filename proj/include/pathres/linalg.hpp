#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "pathres/field.hpp"

namespace pathres {

// Triplet-form matrix over a prime field.  Entries may repeat; they are
// accumulated modulo p when the matrix is consumed.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, uint32_t>> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}
  void add_entry(int r, int c, uint32_t v) { entries.emplace_back(r, c, v); }
};

// Rank over F_p.  Dispatches to dense Gaussian elimination below 2000
// columns and to sparse column reduction at or above it.
long long rank(const SparseMatrix& m, const PrimeField& f);

long long rank_dense(const SparseMatrix& m, const PrimeField& f);
long long rank_sparse(const SparseMatrix& m, const PrimeField& f);

// True iff a*b is the zero matrix (a.cols must equal b.rows).
bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b,
                     const PrimeField& f);

}  // namespace pathres
