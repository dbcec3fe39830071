#include "pathres/betti.hpp"

#include <algorithm>
#include <json.hpp>

#include "pathres/counting.hpp"
#include "pathres/errors.hpp"
#include "pathres/homology.hpp"
#include "pathres/morse.hpp"
#include "pathres/stringcode.hpp"

namespace pathres {

std::vector<int> label_maximal_cells(const ComplexYdn& X) {
  std::vector<int> out;
  for (const FiberGroup& g : fiber_decompose(X)) out.push_back(g.max_cell);
  std::sort(out.begin(), out.end());
  return out;
}

CellStats cell_stats(const Cell& c) {
  if (c.rows.empty()) throw InputError("cell needs at least one row");
  CellStats s;
  s.critical_inducing = true;
  for (size_t i = 0; i < c.rows.size(); ++i) {
    const auto& row = c.rows[i];
    if (row.empty())
      throw InputError("row " + std::to_string(i + 1) + " is empty");
    for (size_t k = 0; k + 1 < row.size(); ++k) {
      if (row[k] >= row[k + 1])
        throw InputError("row " + std::to_string(i + 1) +
                         " is not strictly increasing");
      if (row[k + 1] - row[k] == 2)
        throw InputError("cell is not label-maximal: row " +
                         std::to_string(i + 1) +
                         " has a gap of exactly one box");
    }
    s.A += (long long)row.size();
    size_t k = 0;
    while (k < row.size()) {
      size_t e = k;
      while (e + 1 < row.size() && row[e + 1] == row[e] + 1) ++e;
      const long long len = (long long)(e - k + 1);
      s.N += 1;
      if (len % 3 == 1) s.N2 += 1;
      if (len % 3 == 0) s.critical_inducing = false;
      k = e + 1;
    }
  }
  s.C = s.A + s.N;
  if (s.critical_inducing) {
    s.B = (s.N + s.N2 + s.A) / 3;
    s.D = (s.A + s.N2 - 2 * s.N - 3) / 3;
  }
  return s;
}

BettiMethod parse_method(const std::string& name) {
  if (name == "closed-form") return BettiMethod::ClosedForm;
  if (name == "strings") return BettiMethod::Strings;
  if (name == "morse") return BettiMethod::Morse;
  if (name == "oracle") return BettiMethod::Oracle;
  throw InputError("unknown method: " + name +
                   " (expected closed-form, strings, morse or oracle)");
}

std::string method_name(BettiMethod m) {
  switch (m) {
    case BettiMethod::ClosedForm: return "closed-form";
    case BettiMethod::Strings: return "strings";
    case BettiMethod::Morse: return "morse";
    case BettiMethod::Oracle: return "oracle";
  }
  throw InputError("unknown method");
}

namespace {

void closed_form_table(BettiTable& t) {
  for (int i = 1; i <= t.n - 1; ++i)
    for (long long j = 2LL * t.d; j <= (long long)t.d * t.n; ++j) {
      const long long v = closed_form_betti(t.n, t.d, i, j);
      if (v > 0) t.entries[{i, (int)j}] = v;
    }
}

// One admissible row pattern of columns 1..n-1: nonempty, no gap of exactly
// one, no run of length 0 mod 3 (a single such run already stops the cell
// from inducing a critical one).
struct RowPattern {
  int min_col = 0;
  int max_col = 0;
  long long A = 0, N = 0, N2 = 0;
};

void strings_table(BettiTable& t) {
  const int w = t.n - 1;
  if (w > 30)
    throw GuardError("instance too large: strings method is limited to n <= 31");
  std::vector<RowPattern> patterns;
  for (unsigned mask = 1; mask < (1u << w); ++mask) {
    RowPattern p;
    bool ok = true;
    int prev = -10;
    int run = 0;
    auto close_run = [&]() {
      if (run == 0) return;
      p.N += 1;
      if (run % 3 == 1) p.N2 += 1;
      if (run % 3 == 0) ok = false;
      run = 0;
    };
    for (int c = 1; c <= w && ok; ++c) {
      if (!(mask >> (c - 1) & 1)) continue;
      if (prev > 0 && c - prev == 2) ok = false;
      if (prev > 0 && c - prev > 1) close_run();
      if (p.min_col == 0) p.min_col = c;
      p.max_col = c;
      p.A += 1;
      run += 1;
      prev = c;
    }
    close_run();
    if (ok) patterns.push_back(p);
  }
  std::sort(patterns.begin(), patterns.end(),
            [](const RowPattern& a, const RowPattern& b) {
              return a.min_col < b.min_col;
            });

  auto rec = [&](auto&& self, int row, int last_max, long long A, long long N,
                 long long N2) -> void {
    if (row > t.d) {
      const long long C = A + N;
      const long long B = (N + N2 + A) / 3;
      t.entries[{(int)(C - B - t.d + 1), (int)C}] += 1;
      return;
    }
    for (const RowPattern& p : patterns) {
      if (p.min_col < last_max) continue;
      self(self, row + 1, p.max_col, A + p.A, N + p.N, N2 + p.N2);
    }
  };
  rec(rec, 1, 0, 0, 0, 0);
}

void morse_table(BettiTable& t) {
  ComplexYdn X = ComplexYdn::enumerate(t.n, t.d);
  Matching m = assemble_matching(X);
  for (int c : m.critical)
    t.entries[{X.dim_of(c) + 1, (int)X.label(c).degree()}] += 1;
}

void oracle_table(BettiTable& t, uint32_t prime) {
  GeneratorSet gs = power_gens(edge_ideal_gens(Graph::path(t.n)), t.d);
  MultigradedBetti mb = taylor_betti(gs, PrimeField(prime));
  for (const auto& [ia, v] : betti_by_degree(mb))
    if (ia.first >= 1) t.entries[ia] += v;
}

}  // namespace

BettiTable betti_table(int n, int d, BettiMethod method, uint32_t prime) {
  if (n < 2) throw InputError("n must be at least 2");
  if (d < 1) throw InputError("d must be at least 1");
  BettiTable t;
  t.n = n;
  t.d = d;
  t.method = method_name(method);
  switch (method) {
    case BettiMethod::ClosedForm: closed_form_table(t); break;
    case BettiMethod::Strings: strings_table(t); break;
    case BettiMethod::Morse: morse_table(t); break;
    case BettiMethod::Oracle: oracle_table(t, prime); break;
  }
  return t;
}

std::string format_table(const BettiTable& t, const std::string& format) {
  if (format == "text") {
    std::string out;
    for (const auto& [ij, v] : t.entries) {
      out += "beta(" + std::to_string(ij.first) + "," +
             std::to_string(ij.second) + ") = " + std::to_string(v) + "\n";
    }
    return out;
  }
  if (format == "csv") {
    std::string out = "i,j,beta\n";
    for (const auto& [ij, v] : t.entries)
      out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
             std::to_string(v) + "\n";
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = t.n;
    doc["d"] = t.d;
    doc["method"] = t.method;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [ij, v] : t.entries) {
      nlohmann::ordered_json e;
      e["i"] = ij.first;
      e["j"] = ij.second;
      e["beta"] = v;
      entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    doc["version"] = "betti-v1";
    return doc.dump(2) + "\n";
  }
  throw InputError("unknown format: " + format +
                   " (expected text, json or csv)");
}

}  // namespace pathres
