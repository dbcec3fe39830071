#include "pathres/stringcode.hpp"

#include <string>

#include "pathres/errors.hpp"

namespace pathres {

bool is_label_maximal(const Cell& c) {
  for (const auto& row : c.rows)
    for (size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k + 1] - row[k] == 2) return false;
  return true;
}

StringCode encode_string(const Cell& c, int n) {
  validate_cell(c, n);
  if (!is_label_maximal(c))
    throw InputError("cell is not label-maximal: a row has a gap of exactly one box");
  const int d = (int)c.rows.size();
  StringCode s{n, d, std::string((size_t)d * (n - 1), '0')};
  for (int i = 1; i <= d; ++i)
    for (int a : c.rows[i - 1])
      s.bits[(size_t)(i - 1) * (n - 1) + (a - i)] = '1';
  return s;
}

Cell decode_string(const StringCode& s) {
  if (s.n < 2) throw InputError("n must be at least 2");
  if (s.d < 1) throw InputError("d must be at least 1");
  const int w = s.n - 1;
  if ((int)s.bits.size() != s.d * w)
    throw InputError("bit string has length " + std::to_string(s.bits.size()) +
                     ", expected d*(n-1) = " + std::to_string(s.d * w));
  for (char ch : s.bits)
    if (ch != '0' && ch != '1')
      throw InputError("bit string contains a character other than 0 and 1");

  Cell c;
  int prev_last_col = 0;
  for (int i = 1; i <= s.d; ++i) {
    std::vector<int> cols;
    for (int t = 0; t < w; ++t)
      if (s.bits[(size_t)(i - 1) * w + t] == '1') cols.push_back(t + 1);
    if (cols.empty())
      throw InputError("row " + std::to_string(i) + " is empty");
    for (size_t k = 0; k + 1 < cols.size(); ++k)
      if (cols[k + 1] - cols[k] == 2)
        throw InputError("row " + std::to_string(i) +
                         " has a within-row gap of exactly one");
    if (i > 1 && cols.front() < prev_last_col)
      throw InputError("staircase violated: row " + std::to_string(i) +
                       " starts left of where row " + std::to_string(i - 1) +
                       " ends");
    prev_last_col = cols.back();
    std::vector<int> row;
    for (int col : cols) row.push_back(col + i - 1);
    c.rows.push_back(std::move(row));
  }
  validate_cell(c, s.n);
  return c;
}

}  // namespace pathres
