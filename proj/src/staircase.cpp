#include "pathres/staircase.hpp"

#include <algorithm>
#include <json.hpp>

#include "pathres/errors.hpp"

namespace pathres {

int Cell::dim() const {
  int s = 0;
  for (const auto& row : rows) s += (int)row.size() - 1;
  return s;
}

void validate_cell(const Cell& c, int n) {
  if (n < 2) throw InputError("n must be at least 2");
  const int d = (int)c.rows.size();
  if (d < 1) throw InputError("cell needs at least one row");
  int prev_max = 0;
  for (int i = 1; i <= d; ++i) {
    const auto& row = c.rows[i - 1];
    if (row.empty())
      throw InputError("row " + std::to_string(i) + " is empty");
    for (size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k] >= row[k + 1])
        throw InputError("row " + std::to_string(i) +
                         " is not strictly increasing");
    if (row.front() < i || row.back() > i + n - 2)
      throw InputError("row " + std::to_string(i) + " leaves the window [" +
                       std::to_string(i) + ", " + std::to_string(i + n - 2) +
                       "]");
    if (i > 1 && row.front() <= prev_max)
      throw InputError("staircase violated between rows " +
                       std::to_string(i - 1) + " and " + std::to_string(i));
    prev_max = row.back();
  }
}

std::vector<int> covered_vertices(const std::vector<int>& boxes, int i) {
  if (i < 1) throw InputError("row index must be at least 1");
  if (boxes.empty()) throw InputError("box set is empty");
  std::vector<int> sorted = boxes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  for (int j : sorted) {
    int a = j - i + 1;
    if (out.empty() || out.back() < a) out.push_back(a);
    if (out.back() < a + 1) out.push_back(a + 1);
  }
  return out;
}

Monomial cell_label(const Cell& c, int n) {
  validate_cell(c, n);
  std::vector<int> e(n, 0);
  for (int i = 1; i <= (int)c.rows.size(); ++i)
    for (int v : covered_vertices(c.rows[i - 1], i)) e[v - 1] += 1;
  return Monomial(std::move(e));
}

std::vector<int> vertex_realization(const Cell& c, int n) {
  validate_cell(c, n);
  if (c.dim() != 0)
    throw InputError("vertex_realization needs a 0-dimensional cell");
  std::vector<int> e(n, 0);
  for (int i = 1; i <= (int)c.rows.size(); ++i) {
    int a = c.rows[i - 1].front();
    e[a - i] += 1;
    e[a - i + 1] += 1;
  }
  return e;
}

// Faces of the product-of-simplices cell: drop one element from one row of
// size >= 2.  Koszul sign: (-1)^t for the ascending position t within the
// row, times the parity of the summed dimensions of the earlier rows.
// Shrinking a row cannot break the staircase condition, so every face is a
// cell again.
std::vector<std::pair<Cell, int>> boundary_faces(const Cell& c) {
  std::vector<std::pair<Cell, int>> out;
  int prefix = 0;
  for (size_t i = 0; i < c.rows.size(); ++i) {
    const auto& row = c.rows[i];
    if (row.size() >= 2) {
      for (size_t t = 0; t < row.size(); ++t) {
        Cell f = c;
        f.rows[i].erase(f.rows[i].begin() + (long)t);
        int sign = ((t + prefix) % 2 == 0) ? 1 : -1;
        out.emplace_back(std::move(f), sign);
      }
    }
    prefix += (int)row.size() - 1;
  }
  return out;
}

namespace {

constexpr long long kCountCap = 2000000;

long long sat_add(long long a, long long b) {
  long long s = a + b;
  return s > kCountCap ? kCountCap + 1 : s;
}

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b + 1) return kCountCap + 1;
  long long p = a * b;
  return p > kCountCap ? kCountCap + 1 : p;
}

long long sat_pow2(long long e) {
  if (e >= 40) return kCountCap + 1;
  long long p = 1LL << e;
  return p > kCountCap ? kCountCap + 1 : p;
}

}  // namespace

// Rows are filled top to bottom; the only state that matters is the maximum
// box of the previous row.  A row drawn from [lo, hi] with maximum m leaves
// 2^(m-lo) choices for the rest of the row.
long long count_cells(int n, int d) {
  if (n < 2) throw InputError("n must be at least 2");
  if (d < 1) throw InputError("d must be at least 1");
  const int span = d + n;  // previous maxima live in [0, d+n-3]
  std::vector<long long> next(span, 1), cur(span, 0);
  for (int i = d; i >= 1; --i) {
    const int hi = i + n - 2;
    for (int last = 0; last < span; ++last) {
      const int lo = std::max(i, last + 1);
      long long total = 0;
      for (int m = lo; m <= hi; ++m)
        total = sat_add(total, sat_mul(sat_pow2(m - lo), next[m]));
      cur[last] = total;
    }
    std::swap(cur, next);
  }
  return next[0];
}

std::string ComplexYdn::cell_key(const Cell& c) {
  std::string key;
  for (const auto& row : c.rows) {
    for (int j : row) {
      key += std::to_string(j);
      key += ',';
    }
    key += '|';
  }
  return key;
}

ComplexYdn ComplexYdn::enumerate(int n, int d) {
  long long predicted = count_cells(n, d);
  if (predicted > 1000000)
    throw GuardError("instance too large: Y^" + std::to_string(d) + "_" +
                     std::to_string(n) + " has more than 10^6 cells");

  ComplexYdn X;
  X.n_ = n;
  X.d_ = d;
  X.cells_.reserve(predicted);

  std::vector<std::vector<int>> rows;
  rows.reserve(d);
  auto rec = [&](auto&& self, int i, int last) -> void {
    if (i > d) {
      X.cells_.push_back(Cell{rows});
      return;
    }
    const int lo = std::max(i, last + 1);
    const int hi = i + n - 2;
    const int len = hi - lo + 1;
    if (len <= 0) return;
    for (unsigned mask = 1; mask < (1u << len); ++mask) {
      std::vector<int> row;
      for (int t = 0; t < len; ++t)
        if (mask >> t & 1) row.push_back(lo + t);
      rows.push_back(std::move(row));
      self(self, i + 1, rows.back().back());
      rows.pop_back();
    }
  };
  rec(rec, 1, 0);

  if ((long long)X.cells_.size() != predicted)
    throw CheckError("cell enumeration disagrees with the counting recursion");

  std::sort(X.cells_.begin(), X.cells_.end());

  X.labels_.reserve(X.cells_.size());
  X.dims_.reserve(X.cells_.size());
  X.top_dim_ = 0;
  for (int id = 0; id < (int)X.cells_.size(); ++id) {
    const Cell& c = X.cells_[id];
    X.index_.emplace(cell_key(c), id);
    X.labels_.push_back(cell_label(c, n));
    X.dims_.push_back(c.dim());
    X.top_dim_ = std::max(X.top_dim_, X.dims_.back());
  }

  X.boundary_.resize(X.cells_.size());
  for (int id = 0; id < (int)X.cells_.size(); ++id) {
    for (auto& [face, sign] : boundary_faces(X.cells_[id])) {
      auto it = X.index_.find(cell_key(face));
      if (it == X.index_.end())
        throw CheckError("boundary face missing from the enumeration");
      X.boundary_[id].emplace_back(it->second, sign);
    }
  }
  return X;
}

int ComplexYdn::cell_id(const Cell& c) const {
  auto it = index_.find(cell_key(c));
  return it == index_.end() ? -1 : it->second;
}

std::vector<long long> ComplexYdn::f_vector() const {
  std::vector<long long> f(top_dim_ + 1, 0);
  for (int dim : dims_) f[dim] += 1;
  return f;
}

std::vector<int> ComplexYdn::subcomplex_leq(const Monomial& alpha) const {
  if (alpha.vars() != n_) throw InputError("dimension mismatch");
  std::vector<int> ids;
  for (int id = 0; id < size(); ++id)
    if (labels_[id].divides(alpha)) ids.push_back(id);
  return ids;
}

std::string ComplexYdn::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n_;
  doc["d"] = d_;
  auto cells = nlohmann::ordered_json::array();
  for (int id = 0; id < size(); ++id) {
    nlohmann::ordered_json c;
    c["id"] = id;
    c["rows"] = cells_[id].rows;
    c["dim"] = dims_[id];
    c["label"] = labels_[id].exps();
    cells.push_back(std::move(c));
  }
  doc["cells"] = std::move(cells);
  auto bnd = nlohmann::ordered_json::array();
  for (int id = 0; id < size(); ++id) {
    nlohmann::ordered_json rec;
    rec["id"] = id;
    auto faces = nlohmann::ordered_json::array();
    for (auto [fid, sign] : boundary_[id])
      faces.push_back(nlohmann::ordered_json::array({fid, sign}));
    rec["faces"] = std::move(faces);
    bnd.push_back(std::move(rec));
  }
  doc["boundary"] = std::move(bnd);
  doc["version"] = "ydn-v1";
  return doc.dump(2) + "\n";
}

}  // namespace pathres
