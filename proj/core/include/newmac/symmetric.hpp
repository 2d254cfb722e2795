#pragma once

#include <vector>

#include "newmac/rational.hpp"

namespace newmac {

/// The variable vector x = (x_1, ..., x_n), n >= 1. Entries are arbitrary
/// rationals (signs unrestricted).
class VariableVector {
public:
  explicit VariableVector(std::vector<Rational> entries);

  long n() const { return static_cast<long>(x_.size()); }
  const std::vector<Rational>& entries() const { return x_; }
  const Rational& operator[](std::size_t i) const { return x_[i]; }

  friend bool operator==(const VariableVector& a, const VariableVector& b) {
    return a.x_ == b.x_;
  }

private:
  std::vector<Rational> x_;
};

/// Coefficient vector alpha = (alpha_1, ..., alpha_s), s >= 1, defining the
/// combined operators S and Q and the polynomial f of Condition C.
class AlphaVector {
public:
  explicit AlphaVector(std::vector<Rational> entries);

  long s() const { return static_cast<long>(a_.size()); }
  const std::vector<Rational>& entries() const { return a_; }
  /// alpha_i with 1-based i, matching the formulas.
  const Rational& at(long i) const { return a_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const AlphaVector& a, const AlphaVector& b) {
    return a.a_ == b.a_;
  }

private:
  std::vector<Rational> a_;
};

/// All elementary symmetric polynomials of x at once: result[k] = sigma_k(x)
/// for k = 0..n (result[0] = 1). One-pass product recurrence, O(n^2)
/// coefficient operations.
std::vector<Rational> sigma_all(const VariableVector& x);

/// sigma_k by direct enumeration of all k-subsets. Oracle for sigma_all;
/// guarded to n <= 20 so a misuse cannot hang. k outside [0, n] gives 0.
Rational sigma_bruteforce(const VariableVector& x, long k);

/// sigma_k(x) from a precomputed sigma_all table, with the convention
/// that sigma_k = 0 outside 0 <= k <= n.
const Rational& sigma_at(const std::vector<Rational>& sigma, long k);

/// Normalized symmetric mean E_k = sigma_k / C(n, k). Errors when k is
/// outside [0, n].
Rational e_mean(const VariableVector& x, long k);

/// S_{k;s}(x) = E_k + sum_{i=1..s} alpha_i E_{k-i}, with E_j treated as 0
/// outside [0, n]. Valid for 0 <= k <= n.
Rational S_eval(const VariableVector& x, const AlphaVector& alpha, long k);

/// Q_{k;s}(x) = sigma_k + sum_{i=1..s} alpha_i sigma_{k-i}, sigma_j = 0
/// outside [0, n]. Valid for 0 <= k <= n + s.
Rational Q_eval(const VariableVector& x, const AlphaVector& alpha, long k);

} // namespace newmac
