#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newmac/inequalities.hpp"

namespace newmac {

/// Which inequality the search attacks: the mean form S_k^2 >= S_{k-1}S_{k+1}
/// or the sigma form Q_k^2 >= Q_{k-1}Q_{k+1}.
enum class GapForm { S, Q };

const char* to_string(GapForm f);

/// Instance space for a randomized counterexample hunt.
struct SearchConfig {
  AlphaVector alpha;
  long k;
  long n;
  Natural samples;           // >= 1
  Natural numerator_bound;   // >= 1
  Natural denominator_bound; // >= 1
  std::uint64_t seed;
  GapForm target = GapForm::Q;
};

/// A concrete violation: gap < 0 exactly. sample_index records where in the
/// seeded stream the witness appeared, so identical configs can be checked
/// for identical outcomes.
struct Witness {
  VariableVector x;
  Rational gap;
  GapForm form;
  std::uint64_t sample_index;
};

/// Samples cfg.samples vectors x of length cfg.n with entries from
/// random_rational(rng, numerator_bound, denominator_bound) — one SplitMix64
/// stream seeded with cfg.seed, entries drawn left to right — and returns
/// the first x whose raw gap (S- or Q-form Newton difference at cfg.k) is
/// strictly negative, or an empty optional once the budget is exhausted.
///
/// Deterministic: the outcome is a pure function of cfg. The loop is serial,
/// which makes smallest-sample-index-wins trivial; a partitioned parallel
/// run would have to derive per-index streams to keep this contract.
///
/// Errors: DomainError for out-of-range k/n (same ranges as newton_gap_S /
/// q_gap) or zero samples/bounds; HypothesisError when alpha satisfies
/// Condition C, since then the inequality is a theorem and the search is
/// futile.
std::optional<Witness> find_counterexample(const SearchConfig& cfg);

/// Maps the chosen gap evaluator (newton_gap_S or q_gap) over the grid,
/// preserving order.
std::vector<GapReport> sweep_gap(const AlphaVector& alpha, long k, GapForm form,
                                 std::span<const VariableVector> grid);

} // namespace newmac
