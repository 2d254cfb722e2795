#include "newmac/inequalities.hpp"

#include <algorithm>

namespace newmac {

const char* to_string(EqualityCause c) {
  switch (c) {
    case EqualityCause::NEqualElements: return "n-equal-elements";
    case EqualityCause::BothSidesZero: return "both-sides-zero";
    case EqualityCause::None: break;
  }
  return "none";
}

namespace {

Rational e_from_sig(const std::vector<Rational>& sig, long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  return sigma_at(sig, k) /
         Rational(binom(static_cast<unsigned long>(n), k).value());
}

Rational s_from_sig(const std::vector<Rational>& sig, long n,
                    const AlphaVector& alpha, long k) {
  Rational v = e_from_sig(sig, n, k);
  for (long i = 1; i <= alpha.s(); ++i) v += alpha.at(i) * e_from_sig(sig, n, k - i);
  return v;
}

Rational q_from_sig(const std::vector<Rational>& sig, const AlphaVector& alpha, long k) {
  Rational v = sigma_at(sig, k);
  for (long i = 1; i <= alpha.s(); ++i) v += alpha.at(i) * sigma_at(sig, k - i);
  return v;
}

long root_multiplicity(const Polynomial& f, const Rational& v) {
  long m = 0;
  Polynomial g = f;
  const Polynomial linear(std::vector<Rational>{-v, Rational(1)});
  while (!g.is_zero() && *g.degree() >= 1 && g.eval(v).is_zero()) {
    g = g.divide_exact(linear);
    ++m;
  }
  return m;
}

// Shared equality analysis. A value v is counted with its multiplicity in
// x plus its multiplicity among the relevant root family of f: the roots
// of f themselves (-beta_j, Theorem-1 forms) or their negatives (beta_j,
// augmented Q forms, where the equality condition lives on Y = (beta, x)).
// Only values present in x can reach the threshold, because the f part
// alone contributes at most s < threshold.
EqualityCause cause_impl(const VariableVector& x, const Polynomial* f,
                         bool negate_root, long needed, const Rational& lhs,
                         const Rational& rhs) {
  std::vector<Rational> seen;
  for (const Rational& v : x.entries()) {
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    seen.push_back(v);
    long m = 0;
    for (const Rational& w : x.entries())
      if (w == v) ++m;
    if (f) m += root_multiplicity(*f, negate_root ? -v : v);
    if (m >= needed) return EqualityCause::NEqualElements;
  }
  if (lhs.is_zero() && rhs.is_zero()) return EqualityCause::BothSidesZero;
  return EqualityCause::None;
}

void finish_plain(GapReport& r) {
  r.gap = r.lhs - r.rhs;
  r.margin = r.gap;
  r.holds = r.margin.sign() >= 0;
  r.equality = r.margin.is_zero();
}

void finish_theta(GapReport& r, Rational th) {
  r.gap = r.lhs - r.rhs;
  r.margin = r.gap - th * r.lhs;
  r.theta = std::move(th);
  r.holds = r.margin.sign() >= 0;
  r.equality = r.margin.is_zero();
}

} // namespace

GapReport newton_gap_E(const VariableVector& x, long k) {
  const long n = x.n();
  if (k < 1 || k > n - 1) throw DomainError("newton_gap_E requires 1 <= k <= n-1");
  const auto sig = sigma_all(x);
  const Rational ek = e_from_sig(sig, n, k);
  GapReport r;
  r.lhs = ek * ek;
  r.rhs = e_from_sig(sig, n, k - 1) * e_from_sig(sig, n, k + 1);
  finish_plain(r);
  r.equality_cause = cause_impl(x, nullptr, false, n, r.lhs, r.rhs);
  return r;
}

GapReport sigma_gap(const VariableVector& x, long k) {
  const long n = x.n();
  if (k < 1 || k > n - 1) throw DomainError("sigma_gap requires 1 <= k <= n-1");
  const auto sig = sigma_all(x);
  const Rational& sk = sigma_at(sig, k);
  GapReport r;
  r.lhs = sk * sk;
  r.rhs = sigma_at(sig, k - 1) * sigma_at(sig, k + 1);
  finish_theta(r, theta(n, 0, k));
  r.equality_cause = cause_impl(x, nullptr, false, n, r.lhs, r.rhs);
  return r;
}

GapReport newton_gap_S(const VariableVector& x, const AlphaVector& alpha, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Theorem 1 requires 1 <= s < n-1");
  if (k < s + 1 || k > n - 1)
    throw DomainError("Theorem 1 requires s+1 <= k <= n-1");
  const auto sig = sigma_all(x);
  const Rational sk = s_from_sig(sig, n, alpha, k);
  GapReport r;
  r.lhs = sk * sk;
  r.rhs = s_from_sig(sig, n, alpha, k - 1) * s_from_sig(sig, n, alpha, k + 1);
  finish_plain(r);
  const Polynomial f = build_f(alpha);
  r.equality_cause = cause_impl(x, &f, false, n, r.lhs, r.rhs);
  r.condition_c_verified = condition_c_holds(alpha);
  return r;
}

EqualityCause equality_witness(const VariableVector& x, const AlphaVector& alpha, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Theorem 1 requires 1 <= s < n-1");
  if (k < s + 1 || k > n - 1)
    throw DomainError("Theorem 1 requires s+1 <= k <= n-1");
  const auto sig = sigma_all(x);
  const Rational sk = s_from_sig(sig, n, alpha, k);
  const Rational prod =
      s_from_sig(sig, n, alpha, k - 1) * s_from_sig(sig, n, alpha, k + 1);
  const Polynomial f = build_f(alpha);
  return cause_impl(x, &f, false, n, sk * sk, prod);
}

Rational theta(long n, long s, long k) {
  if (n < 1 || s < 0) throw DomainError("theta requires n >= 1 and s >= 0");
  if (k < 1 || k > n + s - 1) throw DomainError("theta requires 1 <= k <= n+s-1");
  const unsigned long N = static_cast<unsigned long>(n + s);
  const Rational c = Rational(binom(N, k).value());
  const Rational cc = c * c;
  const Rational prod =
      Rational(binom(N, k - 1).value()) * Rational(binom(N, k + 1).value());
  return (cc - prod) / cc;
}

GapReport q_gap(const VariableVector& x, const AlphaVector& alpha, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Theorem 4 requires 1 <= s < n-1");
  if (k < 1 || k > n + s - 1)
    throw DomainError("q_gap evaluates over the proof range 1 <= k <= n+s-1");
  const auto sig = sigma_all(x);
  const Rational qk = q_from_sig(sig, alpha, k);
  GapReport r;
  r.lhs = qk * qk;
  r.rhs = q_from_sig(sig, alpha, k - 1) * q_from_sig(sig, alpha, k + 1);
  finish_theta(r, theta(n, s, k));
  const Polynomial f = build_f(alpha);
  r.equality_cause = cause_impl(x, &f, true, n + s, r.lhs, r.rhs);
  r.condition_c_verified = condition_c_holds(alpha);
  r.outside_theorem_range = k > n;
  return r;
}

MaclaurinChainReport maclaurin_chain_S(const VariableVector& x,
                                       const AlphaVector& alpha, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Theorem 3 requires 1 <= s < n-1");
  if (k < 1 || k > n) throw DomainError("Theorem 3 chain requires 1 <= k <= n");

  if (!condition_c_holds(alpha))
    throw HypothesisError("hypothesis violated: alpha does not satisfy Condition C");

  // beta_j >= 0 <=> f has no root in (0, +inf); count on the squarefree
  // factors, so repeated beta cannot hide.
  const Polynomial f = build_f(alpha);
  for (const auto& fac : squarefree_decomposition(f).factors) {
    if (count_real_roots(fac.factor, Bound::at(Rational(0)), Bound::pos_inf()) >
        Natural(0ul))
      throw HypothesisError(
          "hypothesis violated: some beta_j < 0 (f has a root in (0, +inf))");
  }

  const auto sig = sigma_all(x);
  for (long i = 1; i <= s; ++i) {
    if (e_from_sig(sig, n, i).sign() < 0)
      throw HypothesisError("hypothesis violated: E_" + std::to_string(i) +
                            "(x) < 0");
  }
  std::vector<Rational> S(static_cast<std::size_t>(k) + 1);
  for (long m = 0; m <= k; ++m) S[static_cast<std::size_t>(m)] = s_from_sig(sig, n, alpha, m);
  for (long m = s; m <= k; ++m) {
    if (S[static_cast<std::size_t>(m)].sign() < 0)
      throw HypothesisError("hypothesis violated: S_" + std::to_string(m) +
                            "(x) < 0");
  }

  MaclaurinChainReport chain;
  chain.holds = true;
  for (long m = 1; m <= k - 1; ++m) {
    GapReport r;
    r.lhs = S[static_cast<std::size_t>(m)].pow(static_cast<unsigned long>(m + 1));
    r.rhs = S[static_cast<std::size_t>(m + 1)].pow(static_cast<unsigned long>(m));
    finish_plain(r);
    r.equality_cause = cause_impl(x, &f, false, n, r.lhs, r.rhs);
    if (!r.holds) chain.holds = false;
    chain.links.push_back(ChainLink{m, std::move(r)});
  }
  return chain;
}

GapReport general_newton_S(const VariableVector& x, const AlphaVector& alpha,
                           long l, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Corollary 2 requires 1 <= s < n-1");
  if (!(s < l && l < k && k <= n))
    throw DomainError("Corollary 2 requires s < l < k <= n");
  const auto sig = sigma_all(x);
  for (long q = l; q <= k - 1; ++q) {
    if (s_from_sig(sig, n, alpha, q).sign() < 0)
      throw HypothesisError("hypothesis violated: S_" + std::to_string(q) +
                            "(x) < 0");
  }
  GapReport r;
  r.lhs = s_from_sig(sig, n, alpha, l) * s_from_sig(sig, n, alpha, k - 1);
  r.rhs = s_from_sig(sig, n, alpha, l - 1) * s_from_sig(sig, n, alpha, k);
  finish_plain(r);
  const Polynomial f = build_f(alpha);
  r.equality_cause = cause_impl(x, &f, false, n, r.lhs, r.rhs);
  r.condition_c_verified = condition_c_holds(alpha);
  return r;
}

GapReport general_newton_Q(const VariableVector& x, const AlphaVector& alpha,
                           long l, long k) {
  const long n = x.n(), s = alpha.s();
  if (s < 1 || s >= n - 1) throw DomainError("Corollary 4 requires 1 <= s < n-1");
  if (!(s < l && l < k && k <= n))
    throw DomainError("Corollary 4 requires s < l < k <= n");
  const auto sig = sigma_all(x);
  for (long q = l; q <= k - 1; ++q) {
    if (q_from_sig(sig, alpha, q).sign() < 0)
      throw HypothesisError("hypothesis violated: Q_" + std::to_string(q) +
                            "(x) < 0");
  }
  Rational one_plus_theta(1);
  for (long q = l; q <= k - 1; ++q) {
    const long w = std::min(q - l + 1, k - q);
    one_plus_theta *=
        (Rational(1) + theta(n, s, q)).pow(static_cast<unsigned long>(w));
  }
  GapReport r;
  r.lhs = q_from_sig(sig, alpha, l) * q_from_sig(sig, alpha, k - 1);
  r.rhs = one_plus_theta * q_from_sig(sig, alpha, l - 1) * q_from_sig(sig, alpha, k);
  finish_plain(r); // the constant is folded into rhs: gap = margin
  r.theta = one_plus_theta - Rational(1);
  const Polynomial f = build_f(alpha);
  r.equality_cause = cause_impl(x, &f, true, n + s, r.lhs, r.rhs);
  r.condition_c_verified = condition_c_holds(alpha);
  return r;
}

std::optional<ComplexRootCertificate> certify_complex(
    std::span<const Rational> E_values, const AlphaVector& alpha, long k) {
  const long n = static_cast<long>(E_values.size());
  const long s = alpha.s();
  if (n < 1) throw DomainError("certify_complex requires at least E_1");
  if (!(s < k && k < n)) throw DomainError("certify_complex requires s < k < n");
  if (!condition_c_holds(alpha))
    throw HypothesisError(
        "certify_complex precondition: alpha must satisfy Condition C");

  auto e_at = [&](long j) -> Rational {
    if (j == 0) return Rational(1);
    if (j < 0 || j > n) return Rational(0);
    return E_values[static_cast<std::size_t>(j - 1)];
  };
  auto s_at = [&](long j) {
    Rational v = e_at(j);
    for (long i = 1; i <= s; ++i) v += alpha.at(i) * e_at(j - i);
    return v;
  };
  const Rational s_km1 = s_at(k - 1);
  const Rational s_k = s_at(k);
  const Rational s_kp1 = s_at(k + 1);
  const Rational gap = s_k * s_k - s_km1 * s_kp1;
  if (gap.sign() >= 0) return std::nullopt;

  // g(t) = sum_j C_n^j E_j t^{n-j}; monic because E_0 = 1.
  std::vector<Rational> gc(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j)
    gc[static_cast<std::size_t>(n - j)] =
        Rational(binom(static_cast<unsigned long>(n), j).value()) * e_at(j);
  return ComplexRootCertificate{k, gap, s_km1, s_k, s_kp1,
                                Polynomial(std::move(gc))};
}

} // namespace newmac
