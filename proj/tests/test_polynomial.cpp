#include <gtest/gtest.h>

#include "newmac/polynomial.hpp"
#include "newmac/rng.hpp"
#include "newmac/symmetric.hpp"

namespace newmac {
namespace {

Polynomial make(std::vector<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial random_poly(SplitMix64& rng, std::size_t max_deg) {
  std::vector<Rational> c(1 + rng.next_below(max_deg + 1));
  for (auto& a : c) a = random_rational(rng, 9, 4);
  return Polynomial(std::move(c));
}

TEST(Polynomial, DegreeAndTrim) {
  EXPECT_FALSE(Polynomial::zero().degree().has_value());
  EXPECT_TRUE(Polynomial::zero().is_zero());
  EXPECT_EQ(Polynomial({Rational(5)}).degree(), 0);
  // Trailing zeros are trimmed on construction.
  EXPECT_EQ(Polynomial({Rational(1), Rational(0), Rational(0)}).degree(), 0);
  EXPECT_EQ(make({-6, 11, -6, 1}).degree(), 3);
  EXPECT_EQ(Polynomial::monomial(Rational(3), 4).degree(), 4);
}

TEST(Polynomial, FromRoots) {
  const Rational r123[] = {Rational(1), Rational(2), Rational(3)};
  EXPECT_EQ(poly_from_roots(r123), make({-6, 11, -6, 1}));
  EXPECT_EQ(poly_from_roots({}), Polynomial::constant(Rational(1)));
  const Rational rcc[] = {Rational(5), Rational(5)};
  EXPECT_EQ(poly_from_roots(rcc), make({25, -10, 1}));
}

TEST(Polynomial, FromRootsMatchesSignedSigma) {
  SplitMix64 rng(31);
  constexpr int kIterations = 60;
  for (int iter = 0; iter < kIterations; ++iter) {
    std::vector<Rational> roots(1 + rng.next_below(10));
    for (auto& r : roots) r = random_rational(rng, 8, 5);
    const Polynomial p = poly_from_roots(roots);
    const VariableVector x(roots);
    const long n = x.n();
    ASSERT_EQ(p.degree(), n);
    for (long k = 0; k <= n; ++k) {
      Rational expect = sigma_bruteforce(x, k);
      if (k % 2 != 0) expect = -expect;
      EXPECT_EQ(p.coeff(static_cast<std::size_t>(n - k)), expect);
    }
  }
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(make({-6, 11, -6, 1}).derivative(), make({11, -12, 3}));
  EXPECT_EQ(Polynomial::constant(Rational(5)).derivative(), Polynomial::zero());
  EXPECT_EQ(make({1, 0, 1}).derivative(), make({0, 2}));
}

TEST(Polynomial, Eval) {
  EXPECT_EQ(make({-6, 11, -6, 1}).eval(Rational(2)), Rational(0));
  EXPECT_EQ(make({1, 0, 1}).eval(Rational::parse("1/2")), Rational::parse("5/4"));
  EXPECT_EQ(Polynomial::zero().eval(Rational::parse("7/3")), Rational(0));
}

TEST(Polynomial, RingIdentities) {
  SplitMix64 rng(47);
  constexpr int kIterations = 80;
  for (int iter = 0; iter < kIterations; ++iter) {
    const Polynomial a = random_poly(rng, 6);
    const Polynomial b = random_poly(rng, 6);
    const Rational t = random_rational(rng, 7, 3);
    EXPECT_EQ((a + b).eval(t), a.eval(t) + b.eval(t));
    EXPECT_EQ((a * b).eval(t), a.eval(t) * b.eval(t));
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a + b).derivative(), a.derivative() + b.derivative());
  }
}

TEST(Polynomial, DivMod) {
  const Polynomial p = make({-6, 11, -6, 1});
  const Polynomial d = make({-1, 1}); // t - 1
  const auto [q, r] = p.divmod(d);
  EXPECT_EQ(r, Polynomial::zero());
  EXPECT_EQ(q * d + r, p);
  EXPECT_EQ(q, make({6, -5, 1}));

  const auto [q2, r2] = make({1, 0, 1}).divmod(make({-2, 1}));
  EXPECT_EQ(q2 * make({-2, 1}) + r2, make({1, 0, 1}));
  EXPECT_EQ(r2, Polynomial::constant(Rational(5)));
  EXPECT_THROW(p.divmod(Polynomial::zero()), DomainError);
}

TEST(Polynomial, DivModRandomized) {
  SplitMix64 rng(53);
  constexpr int kIterations = 80;
  for (int iter = 0; iter < kIterations; ++iter) {
    const Polynomial a = random_poly(rng, 8);
    Polynomial b = random_poly(rng, 4);
    if (b.is_zero()) b = Polynomial::constant(Rational(1));
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    if (!r.is_zero()) EXPECT_LT(*r.degree(), *b.degree());
  }
}

TEST(Polynomial, ExactDivision) {
  const Polynomial p = make({-6, 11, -6, 1});
  EXPECT_EQ(p.divide_exact(make({-3, 1})) * make({-3, 1}), p);
  EXPECT_THROW(p.divide_exact(make({1, 1})), DomainError);
}

TEST(Polynomial, Gcd) {
  EXPECT_EQ(poly_gcd(make({-1, 0, 1}), make({-1, 1})), make({-1, 1}));
  EXPECT_EQ(poly_gcd(make({1, 0, 1}), make({-1, 1})),
            Polynomial::constant(Rational(1)));
  // (t-2)^2 (t+1) vs (t-2)(t+3)
  const Polynomial a = make({4, -4, 1}) * make({1, 1});
  const Polynomial b = make({-2, 1}) * make({3, 1});
  EXPECT_EQ(poly_gcd(a, b), make({-2, 1}));
  EXPECT_EQ(poly_gcd(Polynomial::zero(), a), a.monic());
  EXPECT_THROW(poly_gcd(Polynomial::zero(), Polynomial::zero()), DomainError);
}

TEST(Polynomial, GcdDividesBothRandomized) {
  SplitMix64 rng(61);
  constexpr int kIterations = 50;
  for (int iter = 0; iter < kIterations; ++iter) {
    const Polynomial g = random_poly(rng, 3);
    const Polynomial a = g * random_poly(rng, 3);
    const Polynomial b = g * random_poly(rng, 3);
    if (a.is_zero() && b.is_zero()) continue;
    const Polynomial d = poly_gcd(a, b);
    if (!a.is_zero()) EXPECT_EQ(d * a.divide_exact(d), a);
    if (!b.is_zero()) EXPECT_EQ(d * b.divide_exact(d), b);
    if (!g.is_zero() && !d.is_zero()) {
      // g divides gcd(g*u, g*v).
      EXPECT_NO_THROW((void)d.divide_exact(g.monic()));
    }
  }
}

TEST(Polynomial, MonicAndScale) {
  const Polynomial p = make({2, 4, 2});
  EXPECT_EQ(p.monic(), make({1, 2, 1}));
  EXPECT_EQ(Rational::parse("1/2") * p, make({1, 2, 1}));
  EXPECT_EQ(Polynomial::zero().monic(), Polynomial::zero());
  EXPECT_EQ(p.leading_coeff(), Rational(2));
}

TEST(Polynomial, ToStringPretty) {
  EXPECT_EQ(make({-6, 11, -6, 1}).to_string(), "t^3 - 6*t^2 + 11*t - 6");
  EXPECT_EQ(make({1, 0, 1}).to_string(), "t^2 + 1");
  EXPECT_EQ(Polynomial::zero().to_string(), "0");
  EXPECT_EQ(make({0, -1}).to_string(), "-t");
  EXPECT_EQ(Polynomial({Rational::parse("-1/2"), Rational(1)}).to_string("u"),
            "u - 1/2");
}

} // namespace
} // namespace newmac
