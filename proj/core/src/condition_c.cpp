#include "newmac/condition_c.hpp"

namespace newmac {

Rational default_isolation_width() { return Rational(Integer(1), Integer(1024)); }

Polynomial build_f(const AlphaVector& alpha) {
  const long s = alpha.s();
  std::vector<Rational> c(static_cast<std::size_t>(s) + 1);
  c[static_cast<std::size_t>(s)] = Rational(1);
  for (long i = 1; i <= s; ++i) c[static_cast<std::size_t>(s - i)] = alpha.at(i);
  return Polynomial(std::move(c));
}

ConditionCReport check_condition_c(const AlphaVector& alpha) {
  return check_condition_c(alpha, default_isolation_width());
}

ConditionCReport check_condition_c(const AlphaVector& alpha, const Rational& width) {
  Polynomial f = build_f(alpha);
  RealRootednessReport rr = check_real_rooted(f, width);
  return ConditionCReport{rr.real_rooted, std::move(f), std::move(rr.roots),
                          alpha.s(), std::move(rr.factors)};
}

bool condition_c_holds(const AlphaVector& alpha) {
  const Polynomial f = build_f(alpha);
  for (const auto& fac : squarefree_decomposition(f).factors) {
    const long d = *fac.factor.degree();
    if (static_cast<long>(count_real_roots(fac.factor).to_ulong()) != d) return false;
  }
  return true;
}

AlphaVector alpha_from_beta(std::span<const Rational> beta) {
  if (beta.empty()) throw DomainError("beta must have at least one entry");
  const VariableVector b(std::vector<Rational>(beta.begin(), beta.end()));
  auto sig = sigma_all(b);
  return AlphaVector(std::vector<Rational>(sig.begin() + 1, sig.end()));
}

AlphaVector alpha_compose(const AlphaVector& alpha_prime, const Rational& b) {
  const long sp = alpha_prime.s();
  std::vector<Rational> out(static_cast<std::size_t>(sp) + 1);
  // alpha'_0 = 1, alpha'_j = 0 beyond s': alpha_i = b*alpha'_{i-1} + alpha'_i.
  for (long i = 1; i <= sp + 1; ++i) {
    Rational prev = (i == 1) ? Rational(1) : alpha_prime.at(i - 1);
    Rational cur = (i <= sp) ? alpha_prime.at(i) : Rational(0);
    out[static_cast<std::size_t>(i - 1)] = b * prev + cur;
  }
  return AlphaVector(std::move(out));
}

std::optional<AlphaVector> alpha_decompose(const AlphaVector& alpha,
                                           const Rational& minus_b) {
  const Polynomial f = build_f(alpha);
  if (!f.eval(minus_b).is_zero())
    throw DomainError("alpha_decompose: " + minus_b.to_string() +
                      " is not a root of f");
  if (alpha.s() == 1) return std::nullopt;
  const Polynomial linear(std::vector<Rational>{-minus_b, Rational(1)});
  const Polynomial q = f.divide_exact(linear);
  // q = t^{s-1} + alpha'_1 t^{s-2} + ...: read alpha' off high-to-low.
  const long sq = *q.degree();
  std::vector<Rational> out(static_cast<std::size_t>(sq));
  for (long i = 1; i <= sq; ++i)
    out[static_cast<std::size_t>(i - 1)] = q.coeff(static_cast<std::size_t>(sq - i));
  return AlphaVector(std::move(out));
}

AlphaVector random_condition_c_alpha(long s, const Natural& bound, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_condition_c_alpha(s, bound, rng);
}

AlphaVector random_condition_c_alpha(long s, const Natural& bound, SplitMix64& rng) {
  if (s < 1) throw DomainError("random_condition_c_alpha requires s >= 1");
  if (bound < Natural(1ul)) throw DomainError("random_condition_c_alpha requires bound >= 1");
  const std::uint64_t b = bound.to_ulong();
  std::vector<Rational> beta(static_cast<std::size_t>(s));
  for (auto& e : beta) e = random_rational(rng, b, b);
  return alpha_from_beta(beta);
}

} // namespace newmac
