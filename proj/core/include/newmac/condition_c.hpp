#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "newmac/roots.hpp"
#include "newmac/rng.hpp"
#include "newmac/symmetric.hpp"

namespace newmac {

/// Default isolation width for Condition C root reports: 1/1024.
Rational default_isolation_width();

/// Verdict on Condition C for an alpha vector. holds is true exactly when
/// f = t^s + alpha_1 t^{s-1} + ... + alpha_s has s real roots counted with
/// multiplicity, i.e. every squarefree factor of f is totally real. The
/// roots of f are the -beta_j; irrational ones are exposed only as
/// isolating intervals, never as fake Rationals. When holds is false,
/// factors names the squarefree factor(s) whose Sturm count falls short.
struct ConditionCReport {
  bool holds;
  Polynomial f;
  RootIsolation roots;
  long s;
  std::vector<FactorReality> factors;
};

/// f(t) = t^s + alpha_1 t^{s-1} + ... + alpha_s.
Polynomial build_f(const AlphaVector& alpha);

ConditionCReport check_condition_c(const AlphaVector& alpha);
ConditionCReport check_condition_c(const AlphaVector& alpha, const Rational& width);

/// The bare Condition C verdict without root isolation; cheaper for hot
/// loops that only need the flag.
bool condition_c_holds(const AlphaVector& alpha);

/// alpha_i = sigma_i(beta), so build_f(result) = prod_j (t + beta_j):
/// Condition C holds by construction. beta must be nonempty.
AlphaVector alpha_from_beta(std::span<const Rational> beta);

/// Appends one more root -b to f: result has s' + 1 entries with
/// alpha_1 = b + alpha'_1, alpha_i = b*alpha'_{i-1} + alpha'_i,
/// alpha_{s'+1} = b*alpha'_{s'}; equivalently f = (t+b) * f'.
AlphaVector alpha_compose(const AlphaVector& alpha_prime, const Rational& b);

/// Inverse of alpha_compose: deflates f by the known rational root minus_b
/// (i.e. removes beta = -minus_b). Empty optional marks the s = 1 case
/// where the quotient has no alpha left. Throws DomainError when minus_b
/// is not a root of f.
std::optional<AlphaVector> alpha_decompose(const AlphaVector& alpha,
                                           const Rational& minus_b);

/// Deterministic Condition-C instance: samples beta of length s with
/// numerators in [-bound, bound] and denominators in [1, bound], then
/// returns alpha_from_beta(beta). Same (s, bound, seed) always gives the
/// same alpha.
AlphaVector random_condition_c_alpha(long s, const Natural& bound, std::uint64_t seed);

/// Variant drawing from a live generator (two draws per beta entry,
/// numerator first), for callers sampling several objects from one stream.
AlphaVector random_condition_c_alpha(long s, const Natural& bound, SplitMix64& rng);

} // namespace newmac
