#pragma once

#include <span>

#include "newmac/condition_c.hpp"
#include "newmac/roots.hpp"
#include "newmac/symmetric.hpp"

namespace newmac {

/// P(t) = prod (t - x_i) together with its two derived polynomials:
/// P1 = P'/n and the companion P2 defined by P(t) = t*P1(t) - P2(t).
struct DerivedTriple {
  Polynomial P;
  Polynomial P1;
  Polynomial P2;
};

/// Coefficient of t^{n-1-k} is (-1)^k C_{n-1}^k E_k(x); equals P'(t)/n.
/// Requires n >= 2.
Polynomial build_P1(const VariableVector& x);

/// Coefficient of t^{n-1-k} is (-1)^k C_{n-1}^k E_{k+1}(x). Degree drops
/// below n-1 when E_1(x) = 0. Requires n >= 2.
Polynomial build_P2(const VariableVector& x);

DerivedTriple build_derived_triple(const VariableVector& x);

/// The identity P(t) = t*P1(t) - P2(t), checked coefficient by
/// coefficient. Always true; false flags an implementation bug.
bool verify_P_decomposition(const VariableVector& x);

/// P3(t) = P2(t) + b*P1(t); coefficient of t^{n-1-k} is
/// (-1)^k C_{n-1}^k [E_{k+1}(x) + b E_k(x)].
Polynomial build_P3(const VariableVector& x, const Rational& b);

/// Total-reality verdict for P3 (squarefree + Sturm). Real-rooted for
/// every rational x and b; the degenerate P3 = 0 (possible when x is a
/// constant vector and b cancels it) counts as vacuously real-rooted.
RealRootednessReport verify_P3_real_rooted(const VariableVector& x, const Rational& b);
RealRootednessReport verify_P3_real_rooted(const VariableVector& x, const Rational& b,
                                           const Rational& width);

/// Exact interlacing check for the real roots of P1 and P2: isolates both
/// root sets, refines the isolating intervals until the two sets are
/// pairwise disjoint, and verifies that the merged order strictly
/// alternates between the sets. Requires pairwise-distinct entries
/// (HypothesisError otherwise); the E_1(x) = 0 degree-drop case (one
/// fewer P2 root) is covered by the alternation test.
struct InterlacingReport {
  bool interlaced;
  RootIsolation p1_roots;
  RootIsolation p2_roots;
};
InterlacingReport verify_interlacing(const VariableVector& x);
InterlacingReport verify_interlacing(const VariableVector& x, const Rational& width);

/// Y_s = (beta_1, ..., beta_s, x_1, ..., x_n); satisfies
/// sigma_k(Y_s) = Q_{k;s}(x) with alpha = alpha_from_beta(beta).
VariableVector augment(const VariableVector& x, std::span<const Rational> beta);

/// The special-Lagrangian operator F(x) = sum_{j=0}^{floor((n-1)/2)}
/// (-1)^j sigma_{2j+1}(x), rewritten as sign * C_n^K * S_{K;s}(x):
/// K is the largest odd index <= n, s = K-1, and alpha_i is the
/// E-coefficient ratio c_{K-i}/c_K (zero where F has no term). The
/// returned alpha satisfies Condition C.
struct SpecialLagrangian {
  long k;
  long s;
  AlphaVector alpha;
  int sign;
};
SpecialLagrangian special_lagrangian_alpha(long n);

} // namespace newmac
