#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "newmac/constructions.hpp"
#include "newmac/rng.hpp"

namespace newmac {
namespace {

VariableVector vec(std::vector<const char*> entries) {
  std::vector<Rational> v;
  v.reserve(entries.size());
  for (const char* e : entries) v.push_back(Rational::parse(e));
  return VariableVector(std::move(v));
}

Polynomial make(std::vector<const char*> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const char* e : coeffs) c.push_back(Rational::parse(e));
  return Polynomial(std::move(c));
}

VariableVector random_vec(SplitMix64& rng, long n) {
  std::vector<Rational> v(static_cast<std::size_t>(n));
  for (auto& e : v) e = random_rational(rng, 9, 5);
  return VariableVector(std::move(v));
}

VariableVector random_distinct_vec(SplitMix64& rng, long n) {
  std::vector<Rational> v;
  while (static_cast<long>(v.size()) < n) {
    const Rational cand = random_rational(rng, 12, 6);
    if (std::find(v.begin(), v.end(), cand) == v.end()) v.push_back(cand);
  }
  return VariableVector(std::move(v));
}

TEST(BuildP1, KnownPolynomials) {
  // x=(1,2,3): E=(2, 11/3, 6), so P1 = t^2 - 4t + 11/3.
  EXPECT_EQ(build_P1(vec({"1", "2", "3"})), make({"11/3", "-4", "1"}));
  // Constant pair: P1 = t - c.
  EXPECT_EQ(build_P1(vec({"4", "4"})), make({"-4", "1"}));
  // Zero vector: P1 = t^{n-1}.
  EXPECT_EQ(build_P1(vec({"0", "0", "0"})), make({"0", "0", "1"}));
}

TEST(BuildP1, IsDerivativeOverN) {
  SplitMix64 rng(1201);
  for (int iter = 0; iter < 60; ++iter) {
    const long n = 2 + static_cast<long>(rng.next() % 6);
    const VariableVector x = random_vec(rng, n);
    const Polynomial lhs = Rational(n) * build_P1(x);
    EXPECT_EQ(lhs, poly_from_roots(x.entries()).derivative());
  }
}

TEST(BuildP2, KnownPolynomials) {
  EXPECT_EQ(build_P2(vec({"1", "2", "3"})), make({"6", "-22/3", "2"}));
  // Constant pair: P2 = c t - c^2.
  EXPECT_EQ(build_P2(vec({"4", "4"})), make({"-16", "4"}));
}

TEST(BuildP2, DegreeDropWhenE1Vanishes) {
  // x=(1,-1): E_1 = 0, E_2 = -1, so P2 = 0*t + 1: a nonzero constant.
  const Polynomial p2 = build_P2(vec({"1", "-1"}));
  EXPECT_EQ(p2, make({"1"}));
  ASSERT_TRUE(p2.degree().has_value());
  EXPECT_EQ(*p2.degree(), 0);
}

TEST(BuildP1P2, RequireAtLeastTwoEntries) {
  EXPECT_THROW(build_P1(vec({"5"})), DomainError);
  EXPECT_THROW(build_P2(vec({"5"})), DomainError);
}

TEST(DecompositionIdentity, SpecInstances) {
  EXPECT_TRUE(verify_P_decomposition(vec({"1", "2", "3"})));
  EXPECT_TRUE(verify_P_decomposition(vec({"0", "0"})));
}

TEST(DecompositionIdentity, RandomInstances) {
  SplitMix64 rng(1301);
  for (int iter = 0; iter < 80; ++iter) {
    const long n = 2 + static_cast<long>(rng.next() % 6);
    EXPECT_TRUE(verify_P_decomposition(random_vec(rng, n)));
  }
}

TEST(DerivedTriple, MatchesIndividualBuilders) {
  const auto x = vec({"1/2", "2", "-3"});
  const DerivedTriple triple = build_derived_triple(x);
  EXPECT_EQ(triple.P, poly_from_roots(x.entries()));
  EXPECT_EQ(triple.P1, build_P1(x));
  EXPECT_EQ(triple.P2, build_P2(x));
}

TEST(BuildP3, KnownPolynomials) {
  const auto x = vec({"1", "2", "3"});
  EXPECT_EQ(build_P3(x, Rational(0)), build_P2(x));
  EXPECT_EQ(build_P3(x, Rational(1)), make({"29/3", "-34/3", "3"}));
  // Constant pair: (c+b)t - (c^2 + bc) with c=2, b=3.
  EXPECT_EQ(build_P3(vec({"2", "2"}), Rational(3)), make({"-10", "5"}));
}

TEST(P3RealRooted, SpecInstances) {
  const auto r1 = verify_P3_real_rooted(vec({"1", "2", "3"}), Rational(1));
  EXPECT_TRUE(r1.real_rooted);
  EXPECT_EQ(r1.roots.total_multiplicity(), 2);

  const auto r2 = verify_P3_real_rooted(vec({"1", "-1"}), Rational(5));
  EXPECT_TRUE(r2.real_rooted);
}

TEST(P3RealRooted, ZeroPolynomialIsVacuouslyReal) {
  // x=(c,c) with b=-c collapses P3 to the zero polynomial.
  const auto r = verify_P3_real_rooted(vec({"2", "2"}), Rational(-2));
  EXPECT_TRUE(r.real_rooted);
  EXPECT_TRUE(r.roots.intervals.empty());
  EXPECT_TRUE(r.factors.empty());
}

TEST(P3RealRooted, LemmaPropertyOnRandomInstances) {
  SplitMix64 rng(1401);
  for (int iter = 0; iter < 80; ++iter) {
    const long n = 2 + static_cast<long>(rng.next() % 5);
    const VariableVector x = random_vec(rng, n);
    const Rational b = random_rational(rng, 9, 5);
    const auto r = verify_P3_real_rooted(x, b);
    EXPECT_TRUE(r.real_rooted) << "n=" << n << " iter=" << iter;
  }
}

// Every p1 interval must sit strictly between its p2 neighbours (or vice
// versa); this helper checks the merged sequence alternates sources.
void expect_alternation(const InterlacingReport& report) {
  struct Tagged {
    Rational lo;
    Rational hi;
    bool from_p1;
  };
  std::vector<Tagged> merged;
  for (const auto& iv : report.p1_roots.intervals)
    merged.push_back({iv.lo, iv.hi, true});
  for (const auto& iv : report.p2_roots.intervals)
    merged.push_back({iv.lo, iv.hi, false});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& a, const Tagged& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < merged.size(); ++i) {
    EXPECT_NE(merged[i - 1].from_p1, merged[i].from_p1);
    EXPECT_LE(merged[i - 1].hi, merged[i].lo);
  }
}

TEST(Interlacing, ThreeDistinctEntries) {
  // P1 roots 2 +- sqrt(1/3); P2 roots (11 +- sqrt(13))/6; they alternate
  // starting with a P2 root.
  const auto report = verify_interlacing(vec({"1", "2", "3"}));
  EXPECT_TRUE(report.interlaced);
  ASSERT_EQ(report.p1_roots.intervals.size(), 2u);
  ASSERT_EQ(report.p2_roots.intervals.size(), 2u);
  expect_alternation(report);
}

TEST(Interlacing, PairHasSingleRootEach) {
  // x=(1,2): P1 root 3/2, P2 root 4/3, both exact rational points.
  const auto report = verify_interlacing(vec({"1", "2"}));
  EXPECT_TRUE(report.interlaced);
  ASSERT_EQ(report.p1_roots.intervals.size(), 1u);
  ASSERT_EQ(report.p2_roots.intervals.size(), 1u);
  EXPECT_TRUE(report.p1_roots.intervals[0].is_point());
  EXPECT_EQ(report.p1_roots.intervals[0].lo, Rational::parse("3/2"));
  EXPECT_TRUE(report.p2_roots.intervals[0].is_point());
  EXPECT_EQ(report.p2_roots.intervals[0].lo, Rational::parse("4/3"));
}

TEST(Interlacing, DegreeDropKeepsAlternation) {
  // x=(1,-1,0): E_1 = 0 drops P2 to (2/3)t with the single root 0, sitting
  // between P1's roots +-sqrt(1/3).
  const auto report = verify_interlacing(vec({"1", "-1", "0"}));
  EXPECT_TRUE(report.interlaced);
  EXPECT_EQ(report.p1_roots.intervals.size(), 2u);
  ASSERT_EQ(report.p2_roots.intervals.size(), 1u);
  EXPECT_TRUE(report.p2_roots.intervals[0].is_point());
  EXPECT_EQ(report.p2_roots.intervals[0].lo, Rational(0));
  expect_alternation(report);
}

TEST(Interlacing, RepeatedEntriesRejected) {
  try {
    verify_interlacing(vec({"1", "1", "2"}));
    FAIL() << "expected HypothesisError";
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("repeated"), std::string::npos);
  }
}

TEST(Interlacing, LemmaPropertyOnRandomInstances) {
  SplitMix64 rng(1501);
  for (int iter = 0; iter < 50; ++iter) {
    const long n = 2 + static_cast<long>(rng.next() % 6);
    const VariableVector x = random_distinct_vec(rng, n);
    const auto report = verify_interlacing(x);
    EXPECT_TRUE(report.interlaced) << "n=" << n << " iter=" << iter;
    expect_alternation(report);
  }
}

TEST(Augment, ConcatenatesBetaFirst) {
  const VariableVector y =
      augment(vec({"1", "2"}), std::vector<Rational>{Rational(3)});
  EXPECT_EQ(y, vec({"3", "1", "2"}));
  EXPECT_EQ(sigma_bruteforce(y, 2), Rational(11));

  const VariableVector unchanged = augment(vec({"1", "2"}), {});
  EXPECT_EQ(unchanged, vec({"1", "2"}));
}

TEST(Augment, SigmaOfAugmentedIsQ) {
  // sigma_k(Y_s) = Q_{k;s}(x) with alpha = alpha_from_beta(beta).
  const auto x = vec({"1/3", "1/3", "2", "3"});
  const std::vector<Rational> beta{Rational(1), Rational(1)};
  const VariableVector y = augment(x, beta);
  const AlphaVector a = alpha_from_beta(beta);
  const auto sig = sigma_all(y);
  for (long k = 0; k <= 6; ++k) {
    EXPECT_EQ(sigma_at(sig, k), Q_eval(x, a, k));
  }
}

TEST(Augment, IdentityOnRandomInstances) {
  SplitMix64 rng(1601);
  for (int iter = 0; iter < 60; ++iter) {
    const long n = 1 + static_cast<long>(rng.next() % 6);
    const long s = 1 + static_cast<long>(rng.next() % 4);
    const VariableVector x = random_vec(rng, n);
    std::vector<Rational> beta(static_cast<std::size_t>(s));
    for (auto& b : beta) b = random_rational(rng, 7, 4);
    const VariableVector y = augment(x, beta);
    const AlphaVector a = alpha_from_beta(beta);
    const auto sig = sigma_all(y);
    for (long k = 0; k <= n + s; ++k) {
      EXPECT_EQ(sigma_at(sig, k), Q_eval(x, a, k));
    }
  }
}

TEST(SpecialLagrangian, SmallDimensionOracles) {
  // n=3: F = sigma_1 - sigma_3 = -(E_3 - 3E_1).
  const auto sl3 = special_lagrangian_alpha(3);
  EXPECT_EQ(sl3.k, 3);
  EXPECT_EQ(sl3.s, 2);
  EXPECT_EQ(sl3.alpha.entries(),
            (std::vector<Rational>{Rational(0), Rational(-3)}));
  EXPECT_EQ(sl3.sign, -1);
  EXPECT_EQ(build_f(sl3.alpha), make({"-3", "0", "1"}));

  // n=4: F = sigma_1 - sigma_3 = 4E_1 - 4E_3.
  const auto sl4 = special_lagrangian_alpha(4);
  EXPECT_EQ(sl4.k, 3);
  EXPECT_EQ(sl4.s, 2);
  EXPECT_EQ(sl4.alpha.entries(),
            (std::vector<Rational>{Rational(0), Rational(-1)}));
  EXPECT_EQ(sl4.sign, -1);

  // n=5: F = sigma_1 - sigma_3 + sigma_5 = 5E_1 - 10E_3 + E_5.
  const auto sl5 = special_lagrangian_alpha(5);
  EXPECT_EQ(sl5.k, 5);
  EXPECT_EQ(sl5.s, 4);
  EXPECT_EQ(sl5.alpha.entries(),
            (std::vector<Rational>{Rational(0), Rational(-10), Rational(0),
                                   Rational(5)}));
  EXPECT_EQ(sl5.sign, 1);
}

TEST(SpecialLagrangian, FourDimRootsAreExactlyPlusMinusOne) {
  // n=4: f = t^2 - 1, the only case in range whose roots are rational.
  const auto sl = special_lagrangian_alpha(4);
  const auto report = check_condition_c(sl.alpha);
  EXPECT_TRUE(report.holds);
  ASSERT_EQ(report.roots.intervals.size(), 2u);
  EXPECT_TRUE(report.roots.intervals[0].is_point());
  EXPECT_EQ(report.roots.intervals[0].lo, Rational(-1));
  EXPECT_TRUE(report.roots.intervals[1].is_point());
  EXPECT_EQ(report.roots.intervals[1].lo, Rational(1));
}

TEST(SpecialLagrangian, ConditionCHoldsThroughTwelve) {
  for (long n = 3; n <= 12; ++n) {
    const auto sl = special_lagrangian_alpha(n);
    EXPECT_EQ(sl.s, sl.k - 1);
    EXPECT_EQ(sl.k % 2, 1);
    EXPECT_TRUE(check_condition_c(sl.alpha).holds) << "n=" << n;
  }
}

TEST(SpecialLagrangian, ReconstructsTheOperatorExactly) {
  // sign * C_n^K * S_{K;s}(x) must equal the alternating odd-sigma sum
  // F(x) = sum_j (-1)^j sigma_{2j+1}(x) for every x.
  SplitMix64 rng(1701);
  for (long n = 3; n <= 9; ++n) {
    const auto sl = special_lagrangian_alpha(n);
    const Rational top(binom(static_cast<unsigned long>(n), sl.k).value());
    for (int iter = 0; iter < 10; ++iter) {
      const VariableVector x = random_vec(rng, n);
      const auto sig = sigma_all(x);
      Rational direct(0);
      for (long j = 0; 2 * j + 1 <= n; ++j) {
        const Rational term = sigma_at(sig, 2 * j + 1);
        direct += (j % 2 == 0) ? term : -term;
      }
      const Rational rebuilt = Rational(sl.sign) * top * S_eval(x, sl.alpha, sl.k);
      EXPECT_EQ(rebuilt, direct) << "n=" << n;
    }
  }
}

TEST(SpecialLagrangian, RejectsSmallN) {
  EXPECT_THROW(special_lagrangian_alpha(2), DomainError);
  EXPECT_THROW(special_lagrangian_alpha(0), DomainError);
}

} // namespace
} // namespace newmac
