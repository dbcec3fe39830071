#pragma once

#include <string>
#include <vector>

namespace pathres {

// Monomial in x1..xn stored as an exponent vector.  Comparison is
// lexicographic on exponents, which is the canonical order used for
// generator lists and JSON output.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int vars);

  int vars() const { return static_cast<int>(exps_.size()); }
  long long degree() const;
  // 1-based variable index.
  int exp(int k) const { return exps_[static_cast<size_t>(k) - 1]; }
  const std::vector<int>& exps() const { return exps_; }

  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  // "x1^2*x3" style; "1" for the unit monomial.
  std::string str() const;

 private:
  std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Entrywise max over a nonempty list; errors on an empty one.
Monomial lcm_of(const std::vector<Monomial>& ms);

}  // namespace pathres
