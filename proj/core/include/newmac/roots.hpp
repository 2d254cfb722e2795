#pragma once

#include <vector>

#include "newmac/polynomial.hpp"

namespace newmac {

/// One endpoint of a root-counting range: -inf, a rational, or +inf.
class Bound {
public:
  enum class Kind { NegInf, Finite, PosInf };

  static Bound neg_inf() { return Bound(Kind::NegInf, Rational(0)); }
  static Bound pos_inf() { return Bound(Kind::PosInf, Rational(0)); }
  static Bound at(Rational v) { return Bound(Kind::Finite, std::move(v)); }

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; } // meaningful for Finite only

  /// Strict order -inf < rationals < +inf (two infinities of the same side
  /// compare equal).
  friend bool operator<(const Bound& a, const Bound& b);
  friend bool operator==(const Bound& a, const Bound& b);

private:
  Bound(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

/// Canonical Sturm chain of p: starts with p, then p', then each next
/// entry is the negated polynomial remainder of the two before it; stops
/// before the zero remainder. For squarefree p the chain ends in a nonzero
/// constant. Throws DomainError on the zero polynomial.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of real roots of a *squarefree* p in the half-open interval
/// (lo, hi]. Sign-variation counting drops zero entries, which makes the
/// variation count right-continuous in the evaluation point; the
/// difference V(lo) - V(hi) therefore realizes the half-open semantics
/// exactly, including roots sitting at either endpoint, with no
/// perturbation machinery. Errors: zero polynomial, non-squarefree p,
/// lo > hi.
Natural count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi);

/// All real roots of a squarefree p (the whole line).
Natural count_real_roots(const Polynomial& p);

/// Squarefree decomposition p = leading * prod factors[j].factor ^
/// factors[j].multiplicity with monic, pairwise-coprime, squarefree
/// factors and strictly increasing multiplicities (Yun's algorithm).
/// Constant p decomposes to an empty factor list.
struct SquarefreeFactor {
  Polynomial factor;
  long multiplicity;
};
struct SquarefreeDecomposition {
  Rational leading;
  std::vector<SquarefreeFactor> factors;
};
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Cauchy bound: every real root r of p satisfies |r| < root_bound(p).
/// Computed as 1 + max_i |a_i| / |a_d|. Requires p nonzero.
Rational root_bound(const Polynomial& p);

/// One isolated real root: either an exact rational point (lo == hi) or an
/// open interval (lo, hi) with non-root rational endpoints containing
/// exactly one distinct real root of the queried polynomial.
struct RootInterval {
  Rational lo;
  Rational hi;
  long multiplicity;

  bool is_point() const { return lo == hi; }
};

/// Isolated real roots in ascending order, pairwise disjoint, one entry
/// per distinct real root, carrying multiplicities from the squarefree
/// decomposition. Interval entries have width <= the requested width.
struct RootIsolation {
  std::vector<RootInterval> intervals;

  /// Real roots counted with multiplicity.
  long total_multiplicity() const;
};

/// Isolates all real roots of p (not necessarily squarefree). Rational
/// roots discovered along the way collapse to exact points. width must be
/// positive; p nonzero.
RootIsolation isolate_real_roots(const Polynomial& p, const Rational& width);

/// Shrinks an isolating interval below the requested width by sign
/// bisection. Pre: entry isolates a simple root of the squarefree g with a
/// sign change across it. Point entries pass through unchanged; an exact
/// midpoint hit collapses the entry to a point.
RootInterval refine_root_interval(const Polynomial& g, RootInterval entry,
                                  const Rational& width);

/// Full reality verdict for p: real_rooted holds when the real roots,
/// counted with multiplicity, exhaust the degree. Per squarefree factor
/// the report lists degree vs. number of real roots, so a failure names
/// the factor with complex roots.
struct FactorReality {
  Polynomial factor;
  long multiplicity;
  long degree;
  long real_roots;
};
struct RealRootednessReport {
  bool real_rooted;
  RootIsolation roots;
  std::vector<FactorReality> factors;
};
RealRootednessReport check_real_rooted(const Polynomial& p, const Rational& width);

} // namespace newmac
