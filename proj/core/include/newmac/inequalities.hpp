#pragma once

#include <optional>
#include <span>

#include "newmac/condition_c.hpp"
#include "newmac/symmetric.hpp"

namespace newmac {

enum class EqualityCause { None, NEqualElements, BothSidesZero };

const char* to_string(EqualityCause c);

/// Exact verdict on one inequality instance.
///
///   gap    = lhs - rhs, always the raw difference of the two sides;
///   theta  = the constant of a theta-strengthened form, absent otherwise;
///   margin = gap - theta*lhs for theta forms, = gap for plain forms.
///
/// holds and equality refer to the inequality actually claimed by the
/// theorem, i.e. to margin: holds <=> margin >= 0, equality <=> margin = 0.
/// For the plain Newton forms margin coincides with gap.
struct GapReport {
  Rational lhs;
  Rational rhs;
  Rational gap;
  std::optional<Rational> theta;
  Rational margin;
  bool holds = false;
  bool equality = false;
  EqualityCause equality_cause = EqualityCause::None;
  /// False when the operation takes an alpha that fails Condition C; the
  /// gap is still evaluated (counterexample exploration needs values
  /// outside the theorem's hypothesis), but no theorem backs the verdict.
  bool condition_c_verified = true;
  /// q_gap only: k lies in the proof's range but beyond the theorem
  /// statement's k <= n.
  bool outside_theorem_range = false;
};

/// Classic Newton inequality E_k^2 >= E_{k-1}E_{k+1}; 1 <= k <= n-1.
GapReport newton_gap_E(const VariableVector& x, long k);

/// Theta-form Newton inequality on raw sigma:
/// sigma_k^2 - sigma_{k-1}sigma_{k+1} >= theta(n,0,k) * sigma_k^2.
GapReport sigma_gap(const VariableVector& x, long k);

/// S_{k;s}^2 >= S_{k-1;s}S_{k+1;s} for 1 <= s < n-1, s+1 <= k <= n-1.
/// Guaranteed nonnegative gap when alpha satisfies Condition C.
GapReport newton_gap_S(const VariableVector& x, const AlphaVector& alpha, long k);

/// Equality cause for newton_gap_S at (x, alpha, k): n-equal-elements when
/// some value v has (multiplicity of v in x) + (multiplicity of v as a
/// root of f) >= n; both-sides-zero when S_k = 0 and S_{k-1}S_{k+1} = 0;
/// none otherwise. n-equal-elements wins when both apply.
EqualityCause equality_witness(const VariableVector& x, const AlphaVector& alpha, long k);

/// theta = ((C_{n+s}^k)^2 - C_{n+s}^{k-1}C_{n+s}^{k+1}) / (C_{n+s}^k)^2,
/// for 1 <= k <= n+s-1; always strictly between 0 and 1.
Rational theta(long n, long s, long k);

/// Q_{k;s}^2 - Q_{k-1;s}Q_{k+1;s} >= theta(n,s,k) * Q_{k;s}^2 for
/// 1 <= s < n-1. Evaluates over the proof's range 1 <= k <= n+s-1 and
/// flags outside_theorem_range when k exceeds the statement's k <= n.
GapReport q_gap(const VariableVector& x, const AlphaVector& alpha, long k);

/// One Maclaurin link S_m^{1/m} >= S_{m+1}^{1/(m+1)} certified through the
/// exact cross-power comparison S_m^{m+1} >= S_{m+1}^m (both sides
/// nonnegative under the chain hypotheses).
struct ChainLink {
  long m;
  GapReport report;
};
struct MaclaurinChainReport {
  std::vector<ChainLink> links;
  bool holds;
};

/// The chain S_{1;s} >= S_{2;s}^{1/2} >= ... >= S_{k;s}^{1/k}. Hypotheses
/// are hard preconditions checked in order, each with a named
/// HypothesisError: Condition C; every beta_j >= 0 (f has no root in
/// (0, +inf)); E_1..E_s(x) >= 0; S_{m;s}(x) >= 0 for m = s..k.
MaclaurinChainReport maclaurin_chain_S(const VariableVector& x,
                                       const AlphaVector& alpha, long k);

/// S_{l;s}S_{k-1;s} >= S_{l-1;s}S_{k;s} for s < l < k <= n, under the
/// hypothesis S_{q;s} >= 0 for q = l..k-1 (HypothesisError otherwise).
GapReport general_newton_S(const VariableVector& x, const AlphaVector& alpha,
                           long l, long k);

/// Q_{l;s}Q_{k-1;s} >= (1+Theta) Q_{l-1;s}Q_{k;s} with the telescoped
/// constant (1+Theta) = prod_{q=l}^{k-1} (1+theta(n,s,q))^{w_q},
/// w_q = min(q-l+1, k-q). Theta is returned in the theta field; rhs has
/// the constant folded in, so gap = margin here. Hypothesis Q_{q;s} >= 0
/// for q = l..k-1.
GapReport general_newton_Q(const VariableVector& x, const AlphaVector& alpha,
                           long l, long k);

/// Contrapositive certificate: given the E_1..E_n of an unknown vector, if
/// S_{k;s}^2 < S_{k-1;s}S_{k+1;s} for some Condition-C alpha, then
/// g(t) = t^n + C_n^1 E_1 t^{n-1} + ... + C_n^n E_n cannot be real-rooted.
struct ComplexRootCertificate {
  long k;
  Rational gap; // strictly negative: the violating S-Newton difference
  Rational s_km1;
  Rational s_k;
  Rational s_kp1;
  Polynomial g;
};

/// Returns the certificate when the S-Newton inequality fails at k, or an
/// empty optional (no conclusion). Requires s < k < n and a Condition-C
/// alpha (HypothesisError otherwise).
std::optional<ComplexRootCertificate> certify_complex(
    std::span<const Rational> E_values, const AlphaVector& alpha, long k);

} // namespace newmac
