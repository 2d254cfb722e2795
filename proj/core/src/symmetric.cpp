#include "newmac/symmetric.hpp"

#include "newmac/errors.hpp"

namespace newmac {

namespace {
const Rational kZero;
} // namespace

VariableVector::VariableVector(std::vector<Rational> entries) : x_(std::move(entries)) {
  if (x_.empty()) throw DomainError("variable vector must have at least one entry");
}

AlphaVector::AlphaVector(std::vector<Rational> entries) : a_(std::move(entries)) {
  if (a_.empty()) throw DomainError("alpha vector must have at least one entry");
}

std::vector<Rational> sigma_all(const VariableVector& x) {
  const std::size_t n = x.entries().size();
  std::vector<Rational> sig(n + 1);
  sig[0] = Rational(1);
  std::size_t filled = 0;
  for (const Rational& xi : x.entries()) {
    ++filled;
    for (std::size_t k = filled; k >= 1; --k) sig[k] += xi * sig[k - 1];
  }
  return sig;
}

Rational sigma_bruteforce(const VariableVector& x, long k) {
  const long n = x.n();
  if (n > 20) throw DomainError("sigma_bruteforce is guarded to n <= 20");
  if (k < 0 || k > n) return Rational(0);
  if (k == 0) return Rational(1);

  // Enumerate k-subsets via an index vector in lexicographic order.
  std::vector<long> idx(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  Rational total(0);
  while (true) {
    Rational prod(1);
    for (long i : idx) prod *= x[static_cast<std::size_t>(i)];
    total += prod;

    long j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (long i = j + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return total;
}

const Rational& sigma_at(const std::vector<Rational>& sigma, long k) {
  if (k < 0 || k >= static_cast<long>(sigma.size())) return kZero;
  return sigma[static_cast<std::size_t>(k)];
}

Rational e_mean(const VariableVector& x, long k) {
  const long n = x.n();
  if (k < 0 || k > n)
    throw DomainError("e_mean index k must satisfy 0 <= k <= n");
  const auto sig = sigma_all(x);
  return sigma_at(sig, k) / Rational(binom(Natural(static_cast<unsigned long>(n)), k).value());
}

namespace {

// E_k from a sigma table, 0 outside [0, n].
Rational e_at(const std::vector<Rational>& sigma, long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  return sigma_at(sigma, k) / Rational(binom(Natural(static_cast<unsigned long>(n)), k).value());
}

} // namespace

Rational S_eval(const VariableVector& x, const AlphaVector& alpha, long k) {
  const long n = x.n();
  if (k < 0 || k > n) throw DomainError("S_{k;s} requires 0 <= k <= n");
  const auto sig = sigma_all(x);
  Rational total = e_at(sig, n, k);
  for (long i = 1; i <= alpha.s(); ++i) total += alpha.at(i) * e_at(sig, n, k - i);
  return total;
}

Rational Q_eval(const VariableVector& x, const AlphaVector& alpha, long k) {
  const long n = x.n();
  if (k < 0 || k > n + alpha.s()) throw DomainError("Q_{k;s} requires 0 <= k <= n + s");
  const auto sig = sigma_all(x);
  Rational total = sigma_at(sig, k);
  for (long i = 1; i <= alpha.s(); ++i) total += alpha.at(i) * sigma_at(sig, k - i);
  return total;
}

} // namespace newmac
