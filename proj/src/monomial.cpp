#include "pathres/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "pathres/errors.hpp"

namespace pathres {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw InputError("monomial exponents must be nonnegative");
}

Monomial Monomial::one(int vars) {
  if (vars < 0) throw InputError("variable count must be nonnegative");
  return Monomial(std::vector<int>(static_cast<size_t>(vars), 0));
}

long long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0LL);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("dimension mismatch");
  for (size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("dimension mismatch");
  std::vector<int> out(exps_.size());
  for (size_t k = 0; k < exps_.size(); ++k) out[k] = exps_[k] + other.exps_[k];
  return Monomial(std::move(out));
}

std::string Monomial::str() const {
  std::string s;
  for (size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(k + 1);
    if (exps_[k] > 1) {
      s += '^';
      s += std::to_string(exps_[k]);
    }
  }
  return s.empty() ? "1" : s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw InputError("dimension mismatch");
  std::vector<int> out(static_cast<size_t>(a.vars()));
  for (size_t k = 0; k < out.size(); ++k)
    out[k] = std::max(a.exps()[k], b.exps()[k]);
  return Monomial(std::move(out));
}

Monomial lcm_of(const std::vector<Monomial>& ms) {
  if (ms.empty()) throw InputError("lcm of an empty set");
  Monomial acc = ms.front();
  for (size_t k = 1; k < ms.size(); ++k) acc = lcm(acc, ms[k]);
  return acc;
}

}  // namespace pathres
