#include "newmac/search.hpp"

#include "newmac/rng.hpp"

namespace newmac {

const char* to_string(GapForm f) { return f == GapForm::S ? "S" : "Q"; }

namespace {

// Raw Newton difference at k from a precomputed sigma table, avoiding a
// fresh sigma_all per S/Q evaluation inside the sampling loop.
Rational raw_gap(const std::vector<Rational>& sig, long n, const AlphaVector& alpha,
                 long k, GapForm form) {
  const long s = alpha.s();
  auto q_at = [&](long j) {
    Rational v = sigma_at(sig, j);
    for (long i = 1; i <= s; ++i) v += alpha.at(i) * sigma_at(sig, j - i);
    return v;
  };
  auto s_at = [&](long j) {
    auto e = [&](long m) -> Rational {
      if (m < 0 || m > n) return Rational(0);
      return sigma_at(sig, m) /
             Rational(binom(static_cast<unsigned long>(n), m).value());
    };
    Rational v = e(j);
    for (long i = 1; i <= s; ++i) v += alpha.at(i) * e(j - i);
    return v;
  };
  if (form == GapForm::Q) return q_at(k) * q_at(k) - q_at(k - 1) * q_at(k + 1);
  return s_at(k) * s_at(k) - s_at(k - 1) * s_at(k + 1);
}

} // namespace

std::optional<Witness> find_counterexample(const SearchConfig& cfg) {
  if (cfg.samples.value() == 0) throw DomainError("samples must be >= 1");
  if (cfg.numerator_bound.value() == 0 || cfg.denominator_bound.value() == 0)
    throw DomainError("sampling bounds must be >= 1");

  if (cfg.n < 1) throw DomainError("n must be >= 1");
  // Range validation through the gap operations themselves, so the error
  // text matches what a direct evaluation would say.
  const VariableVector probe(
      std::vector<Rational>(static_cast<std::size_t>(cfg.n), Rational(0)));
  if (cfg.target == GapForm::S) (void)newton_gap_S(probe, cfg.alpha, cfg.k);
  else (void)q_gap(probe, cfg.alpha, cfg.k);

  if (condition_c_holds(cfg.alpha))
    throw HypothesisError(
        "futile search: alpha satisfies Condition C, so the " +
        std::string(to_string(cfg.target)) +
        "-form Newton inequality is a theorem and no counterexample exists");

  const std::uint64_t num_bound = cfg.numerator_bound.to_ulong();
  const std::uint64_t den_bound = cfg.denominator_bound.to_ulong();
  SplitMix64 rng(cfg.seed);
  std::vector<Rational> entries(static_cast<std::size_t>(cfg.n));
  const std::uint64_t budget = cfg.samples.to_ulong();
  for (std::uint64_t idx = 0; idx < budget; ++idx) {
    for (auto& e : entries) e = random_rational(rng, num_bound, den_bound);
    VariableVector x(entries);
    const Rational gap = raw_gap(sigma_all(x), cfg.n, cfg.alpha, cfg.k, cfg.target);
    if (gap.sign() < 0) {
      // Witness soundness: the public evaluator must reproduce the gap.
      const GapReport check = cfg.target == GapForm::S
                                  ? newton_gap_S(x, cfg.alpha, cfg.k)
                                  : q_gap(x, cfg.alpha, cfg.k);
      if (!(check.gap == gap))
        throw Error("internal: witness gap mismatch between fast path and evaluator");
      return Witness{std::move(x), gap, cfg.target, idx};
    }
  }
  return std::nullopt;
}

std::vector<GapReport> sweep_gap(const AlphaVector& alpha, long k, GapForm form,
                                 std::span<const VariableVector> grid) {
  std::vector<GapReport> out;
  out.reserve(grid.size());
  for (const auto& x : grid)
    out.push_back(form == GapForm::S ? newton_gap_S(x, alpha, k)
                                     : q_gap(x, alpha, k));
  return out;
}

} // namespace newmac
