#include "newmac/constructions.hpp"

#include <algorithm>

namespace newmac {

namespace {

// Coefficient of t^{n-1-k} is (-1)^k C_{n-1}^k E_{k+offset}(x); offset 0
// gives P1, offset 1 gives P2.
Polynomial derived_poly(const VariableVector& x, long offset) {
  const long n = x.n();
  if (n < 2) throw DomainError("derived polynomials require n >= 2");
  const auto sig = sigma_all(x);
  auto e_at = [&](long j) -> Rational {
    if (j < 0 || j > n) return Rational(0);
    return sigma_at(sig, j) /
           Rational(binom(static_cast<unsigned long>(n), j).value());
  };
  std::vector<Rational> c(static_cast<std::size_t>(n)); // degree <= n-1
  for (long k = 0; k <= n - 1; ++k) {
    Rational term =
        Rational(binom(static_cast<unsigned long>(n - 1), k).value()) *
        e_at(k + offset);
    if (k % 2 != 0) term = -term;
    c[static_cast<std::size_t>(n - 1 - k)] = std::move(term);
  }
  return Polynomial(std::move(c));
}

} // namespace

Polynomial build_P1(const VariableVector& x) { return derived_poly(x, 0); }

Polynomial build_P2(const VariableVector& x) { return derived_poly(x, 1); }

DerivedTriple build_derived_triple(const VariableVector& x) {
  return DerivedTriple{poly_from_roots(x.entries()), build_P1(x), build_P2(x)};
}

bool verify_P_decomposition(const VariableVector& x) {
  const DerivedTriple d = build_derived_triple(x);
  const Polynomial t = Polynomial::monomial(Rational(1), 1);
  return d.P == t * d.P1 - d.P2;
}

Polynomial build_P3(const VariableVector& x, const Rational& b) {
  return build_P2(x) + b * build_P1(x);
}

RealRootednessReport verify_P3_real_rooted(const VariableVector& x, const Rational& b) {
  return verify_P3_real_rooted(x, b, default_isolation_width());
}

RealRootednessReport verify_P3_real_rooted(const VariableVector& x, const Rational& b,
                                           const Rational& width) {
  const Polynomial p3 = build_P3(x, b);
  if (p3.is_zero()) return RealRootednessReport{true, RootIsolation{}, {}};
  return check_real_rooted(p3, width);
}

InterlacingReport verify_interlacing(const VariableVector& x) {
  return verify_interlacing(x, default_isolation_width());
}

InterlacingReport verify_interlacing(const VariableVector& x, const Rational& width) {
  const long n = x.n();
  if (n < 2) throw DomainError("interlacing requires n >= 2");
  for (std::size_t i = 0; i < x.entries().size(); ++i)
    for (std::size_t j = i + 1; j < x.entries().size(); ++j)
      if (x[i] == x[j])
        throw HypothesisError("interlacing hypothesis violated: repeated entry " +
                              x[i].to_string() + " in x");

  const Polynomial p1 = build_P1(x);
  const Polynomial p2 = build_P2(x);
  InterlacingReport rep{false, isolate_real_roots(p1, width), {}};
  // P2 degenerates to a nonzero constant only at n = 2 with E_1 = 0; its
  // root set is then empty and alternation is trivial.
  if (!p2.is_zero() && *p2.degree() >= 1)
    rep.p2_roots = isolate_real_roots(p2, width);

  // Reality and simplicity first: each set must consist of simple real
  // roots exhausting its polynomial's degree.
  auto simple_and_full = [](const RootIsolation& iso, const Polynomial& p) {
    long total = 0;
    for (const auto& e : iso.intervals) {
      if (e.multiplicity != 1) return false;
      total += e.multiplicity;
    }
    return p.is_zero() || *p.degree() == 0 || total == *p.degree();
  };
  if (!simple_and_full(rep.p1_roots, p1) || !simple_and_full(rep.p2_roots, p2))
    return rep;

  // Refine across the two sets until every pair is disjoint (P1 and P2
  // share no root: a common root y would put y among the x_i with
  // P'(y) = 0, impossible for squarefree P).
  struct Tagged {
    RootInterval iv;
    const Polynomial* p;
    bool from_p1;
  };
  std::vector<Tagged> all;
  for (const auto& e : rep.p1_roots.intervals) all.push_back({e, &p1, true});
  for (const auto& e : rep.p2_roots.intervals) all.push_back({e, &p2, false});

  auto bisect = [](Tagged& t) {
    if (t.iv.is_point()) return;
    const Rational mid = (t.iv.lo + t.iv.hi) * Rational(Integer(1), Integer(2));
    const int sm = t.p->eval(mid).sign();
    if (sm == 0) {
      t.iv.lo = mid;
      t.iv.hi = mid;
      return;
    }
    if (sm == t.p->eval(t.iv.lo).sign()) t.iv.lo = mid;
    else t.iv.hi = mid;
  };
  auto disjoint = [](const RootInterval& a, const RootInterval& b) {
    if (a.is_point() && b.is_point()) return !(a.lo == b.lo);
    if (a.is_point()) return a.lo <= b.lo || a.lo >= b.hi;
    if (b.is_point()) return b.lo <= a.lo || b.lo >= a.hi;
    return std::min(a.hi, b.hi) <= std::max(a.lo, b.lo);
  };
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (all[i].from_p1 != all[j].from_p1 && !disjoint(all[i].iv, all[j].iv)) {
          bisect(all[i]);
          bisect(all[j]);
          dirty = true;
        }
  }

  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    return a.iv.lo < b.iv.lo || (a.iv.lo == b.iv.lo && a.iv.hi < b.iv.hi);
  });
  bool alternates = true;
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    if (all[i].from_p1 == all[i + 1].from_p1) alternates = false;
  rep.interlaced = alternates;

  // Expose the refined intervals.
  rep.p1_roots.intervals.clear();
  rep.p2_roots.intervals.clear();
  for (const auto& t : all)
    (t.from_p1 ? rep.p1_roots : rep.p2_roots).intervals.push_back(t.iv);
  return rep;
}

VariableVector augment(const VariableVector& x, std::span<const Rational> beta) {
  std::vector<Rational> y(beta.begin(), beta.end());
  y.insert(y.end(), x.entries().begin(), x.entries().end());
  return VariableVector(std::move(y));
}

SpecialLagrangian special_lagrangian_alpha(long n) {
  if (n < 3) throw DomainError("special_lagrangian_alpha requires n >= 3");
  const long kappa = (n - 1) / 2;
  const long K = 2 * kappa + 1; // largest odd index <= n
  const long s = K - 1;

  // c_j: coefficient of E_j in F = sum (-1)^j' C_n^{2j'+1} E_{2j'+1}.
  auto c_at = [&](long j) -> Rational {
    if (j % 2 == 0) return Rational(0);
    Rational c(binom(static_cast<unsigned long>(n), j).value());
    if (((j - 1) / 2) % 2 != 0) c = -c;
    return c;
  };
  const Rational cK = c_at(K);
  std::vector<Rational> a(static_cast<std::size_t>(s));
  for (long i = 1; i <= s; ++i) a[static_cast<std::size_t>(i - 1)] = c_at(K - i) / cK;
  return SpecialLagrangian{K, s, AlphaVector(std::move(a)),
                           (kappa % 2 == 0) ? 1 : -1};
}

} // namespace newmac
